#include "monospec/curves.hpp"

#include <numeric>

#include <json.hpp>

#include "monospec/intrel.hpp"

namespace monospec {

using json = nlohmann::json;

SpectralCurve SpectralCurve::zero(int n, mpfr_prec_t bits) {
    SpectralCurve c;
    c.n = n;
    c.a.resize(n);
    for (int r = 1; r <= n; ++r) {
        c.a[r - 1].assign(2 * r + 1, BigComplex{BigReal(0L, bits), BigReal(0L, bits)});
    }
    return c;
}

namespace {

// elementary symmetric polynomials e_0..e_m of the given values
std::vector<BigReal> elem_sym(const std::vector<BigReal>& vals, mpfr_prec_t bits) {
    std::vector<BigReal> e(vals.size() + 1, BigReal(0L, bits));
    e[0] = BigReal(1L, bits);
    for (size_t i = 0; i < vals.size(); ++i)
        for (size_t k = std::min(i + 1, vals.size()); k >= 1; --k)
            e[k] += vals[i] * e[k - 1];
    return e;
}

} // namespace

SpectralCurve build_table1(int row, const Table1Params& p, const PrecisionContext& ctx) {
    const mpfr_prec_t bits = ctx.bits();
    BigReal zero(0L, bits);
    auto re = [&](const BigReal& x) { return BigComplex{x, zero}; };
    auto im = [&](const BigReal& x) { return BigComplex{zero, x}; };

    switch (row) {
    case 1: case 2: {
        // rows 1-2: products of (eta^2 + c_l^2 pi^2 zeta^2), c_l = l or l+1/2,
        // times eta for row 1. a_{2k} = e_k({c_l^2 pi^2}) zeta^{2k}.
        if (p.m < 1) throw domain_error("build_table1: rows 1-2 need m >= 1");
        BigReal pi2 = ctx.pi() * ctx.pi();
        std::vector<BigReal> vals;
        if (row == 1) {
            for (long l = 1; l <= p.m; ++l) vals.push_back(ctx.real(l * l) * pi2);
        } else {
            for (long l = 0; l <= p.m; ++l)
                vals.push_back(QRational(2 * l + 1, 2).to_real(ctx) *
                               QRational(2 * l + 1, 2).to_real(ctx) * pi2);
        }
        int n = (row == 1) ? 2 * static_cast<int>(p.m) + 1
                           : 2 * static_cast<int>(p.m) + 2;
        SpectralCurve c = SpectralCurve::zero(n, bits);
        std::vector<BigReal> e = elem_sym(vals, bits);
        for (size_t k = 1; k < e.size(); ++k)
            c.coeff(2 * static_cast<int>(k), 2 * static_cast<int>(k)) = re(e[k]);
        return c;
    }
    case 3: {
        if (!p.k) throw domain_error("build_table1: row 3 needs k");
        EllipticModulus m = EllipticModulus::from_k(*p.k, ctx);
        if (m.k <= 0L) throw domain_error("build_table1: row 3 needs k in (0,1)");
        BigReal K = ellip_k(m, ctx);
        BigReal c0 = ldexp2(K * K, -2);
        SpectralCurve c = SpectralCurve::zero(2, bits);
        BigReal k2mkp2 = m.k * m.k - m.kprime * m.kprime;
        c.coeff(2, 0) = re(c0);
        c.coeff(2, 2) = re(ldexp2(c0 * k2mkp2, 1));
        c.coeff(2, 4) = re(c0);
        return c;
    }
    case 4: {
        // eta^3 + a3 (zeta^6 + 5 sqrt2 zeta^3 - 1)
        BigReal a3 = beta_q(QRational(1, 6), QRational(1, 3), ctx);
        a3 = pow_si(a3, 3) / (ctx.real(48) * sqrt(ctx.real(3)));
        if (p.sign < 0) a3 = -a3;
        SpectralCurve c = SpectralCurve::zero(3, bits);
        c.coeff(3, 0) = re(-a3);
        c.coeff(3, 3) = re(a3 * ctx.real(5) * sqrt(ctx.real(2)));
        c.coeff(3, 6) = re(a3);
        return c;
    }
    case 5: case 6: {
        // a4 = 3 Gamma(1/4)^8 / (1024 pi^2); row 6 is eta (eta^4 - 4 a4 (...))
        BigReal a4 = pow_si(gamma_q(QRational(1, 4), ctx), 8) * 3 /
                     (ctx.real(1024) * ctx.pi() * ctx.pi());
        BigReal s = (row == 5) ? a4 : ldexp2(-a4, 2);
        int n = (row == 5) ? 4 : 5;
        int r = 4;
        SpectralCurve c = SpectralCurve::zero(n, bits);
        c.coeff(r, 0) = re(s);
        c.coeff(r, 4) = re(s * 14);
        c.coeff(r, 8) = re(s);
        return c;
    }
    case 7: {
        // eta (eta^6 + a7 zeta (zeta^10 + 11 zeta^5 - 1)): n = 7,
        // a_6 = a7 (zeta^11 + 11 zeta^6 - zeta)
        BigReal a7 = pow_si(beta_q(QRational(1, 6), QRational(1, 3), ctx), 6) / 64;
        if (p.sign < 0) a7 = -a7;
        SpectralCurve c = SpectralCurve::zero(7, bits);
        c.coeff(6, 1) = re(-a7);
        c.coeff(6, 6) = re(a7 * 11);
        c.coeff(6, 11) = re(a7);
        return c;
    }
    case 8: {
        // eta^4 + 36 i a kappa^3 eta zeta (zeta^4 - 1) + 3 kappa^4 (zeta^8 + 14 zeta^4 + 1)
        if (!p.a) throw domain_error("build_table1: row 8 needs a");
        BigReal bound = sqrt(ctx.real(2)) / rootn(pow_si(ctx.real(3), 5), 4);
        if (!(abs(*p.a) < bound))
            throw domain_error("build_table1: row 8 needs |a| < sqrt(2)/3^(5/4)");
        BigReal kap = weier_half_period(
            {ctx.real(4), ctx.real(-12) * (*p.a) * (*p.a)}, ctx);
        SpectralCurve c = SpectralCurve::zero(4, bits);
        BigReal t = ctx.real(36) * (*p.a) * pow_si(kap, 3);
        c.coeff(3, 1) = im(-t);
        c.coeff(3, 5) = im(t);
        BigReal s = pow_si(kap, 4) * 3;
        c.coeff(4, 0) = re(s);
        c.coeff(4, 4) = re(s * 14);
        c.coeff(4, 8) = re(s);
        return c;
    }
    case 9: {
        // eta^3 - 6 (a^2+4e)^{1/3} kappa^2 eta zeta^2 + 2 i kappa^3 a (zeta^5 - zeta)
        if (!p.a) throw domain_error("build_table1: row 9 needs a");
        if (p.eps != 1 && p.eps != -1)
            throw domain_error("build_table1: row 9 needs eps = +-1");
        BigReal rad = (*p.a) * (*p.a) + ctx.real(4 * p.eps);
        if (!(rad > 0L))
            throw domain_error("build_table1: row 9 needs a^2 + 4 eps > 0");
        BigReal g2 = ctx.real(3) * rootn(rad * rad, 3);
        BigReal g3 = ctx.real(-4 * p.eps);
        BigReal kap = weier_half_period({g2, g3}, ctx);
        SpectralCurve c = SpectralCurve::zero(3, bits);
        c.coeff(2, 2) = re(ctx.real(-6) * rootn(rad, 3) * kap * kap);
        BigReal t = ldexp2((*p.a) * pow_si(kap, 3), 1);
        c.coeff(3, 1) = im(-t);
        c.coeff(3, 5) = im(t);
        return c;
    }
    case 10: {
        // eta^3 + alpha eta zeta^2 + beta zeta^6 + gamma zeta^3 - beta
        if (!p.alpha || !p.beta || !p.gamma)
            throw domain_error("build_table1: row 10 needs alpha, beta, gamma");
        SpectralCurve c = SpectralCurve::zero(3, bits);
        c.coeff(2, 2) = re(*p.alpha);
        c.coeff(3, 0) = re(-(*p.beta));
        c.coeff(3, 3) = re(*p.gamma);
        c.coeff(3, 6) = re(*p.beta);
        return c;
    }
    default:
        throw domain_error("build_table1: row must be 1..10");
    }
}

H1Report check_h1(const SpectralCurve& c, const PrecisionContext& ctx) {
    H1Report rep;
    rep.max_residual = ctx.real(0);
    for (int r = 1; r <= c.n; ++r) {
        for (int j = 0; j <= 2 * r; ++j) {
            const BigComplex& lhs = c.coeff(r, j);
            BigComplex rhs = conj(c.coeff(r, 2 * r - j));
            if ((r + j) % 2 != 0) rhs = -rhs;
            BigReal res = abs(lhs - rhs);
            if (res > rep.max_residual) rep.max_residual = res;
            BigReal scale = abs(lhs);
            if (scale < 1L) scale = ctx.real(1);
            if (res > scale * BigReal::pow10(-(ctx.digits() - 10), ctx.bits())) {
                rep.ok = false;
                rep.violations.emplace_back(r, j);
            }
        }
    }
    return rep;
}

std::vector<DifferentialDescriptor> holomorphic_basis(const SpectralCurve& c) {
    std::vector<DifferentialDescriptor> out;
    for (int i = 0; i <= c.n - 2; ++i)
        for (int j = 0; j <= 2 * (c.n - 2 - i); ++j)
            out.push_back({i, j});
    return out;
}

Charge2Result charge2_es_check(const BigReal& k, const PrecisionContext& ctx,
                               const BigReal* coeff_scale) {
    if (k <= 0L || k >= 1L)
        throw domain_error("charge2_es_check: k must lie in (0,1)");
    const mpfr_prec_t bits = ctx.bits();
    EllipticModulus m = EllipticModulus::from_k(k, ctx);
    BigReal K = ellip_k(m, ctx);
    BigReal A = ldexp2(K * K, -2);            // the K^2/4 normalization
    if (coeff_scale) A *= *coeff_scale;
    BigReal sA = sqrt(A);                     // eta = +- i sA sqrt(q)

    // quartic zeta^4 + 2(k^2-k'^2) zeta^2 + 1: roots exp(+-i theta/2),
    // -exp(+-i theta/2) with cos theta = 1 - 2k^2
    BigReal one = ctx.real(1);
    BigReal c = one - ldexp2(k * k, 1);                 // cos theta
    BigReal s = ldexp2(k * m.kprime, 1);                // sin theta
    BigReal theta = atan2(s, c);
    BigReal X = cos(theta / 2);
    BigReal Y = sin(theta / 2);
    {
        // verify the root configuration numerically before pairing by
        // conjugation: q must vanish at X + iY and the pair must be off-axis.
        // q has middle coefficient 2(k^2 - k'^2) = -2c.
        BigComplex r{X, Y};
        BigComplex r2 = r * r;
        BigComplex q = r2 * r2 - ldexp2(c, 1) * r2 + BigComplex{one, ctx.real(0)};
        if (abs(q) > BigReal::pow10(-(ctx.digits() + ctx.guard() - 8), bits) ||
            !(Y > 0L) || !(X > 0L))
            throw accuracy_error("charge2_es_check: unexpected quartic root configuration",
                                 abs(q).to_string(), Y.to_string());
    }

    // p1: cut integral along the vertical segment Re = X, Im in (-Y, Y);
    // q = (Y^2 - y^2) * W(y), W = (4X^2 + Y^2 - y^2) + 4 i X y, Re W > 0.
    BigReal fourX2 = ldexp2(X * X, 2);
    auto f1 = [&](const BigReal& sp, const BigReal& s0, const BigReal& s1) -> BigComplex {
        BigReal y = Y * (ldexp2(sp, 1) - 1);
        // Y^2 - y^2 = (Y-y)(Y+y) = (2Y s1)(2Y s0), endpoint-stable
        BigReal rad = ldexp2(Y * Y * s0 * s1, 2);
        BigComplex W{fourX2 + Y * Y - y * y, ldexp2(X * y, 2)};
        BigComplex den = sqrt(rad) * sqrt(W);
        BigComplex r = BigComplex{one, ctx.real(0)} / den;
        return r;
    };
    // dzeta = i * 2Y dy-normalized; Omega = dzeta/(2 eta) = dzeta/(2 i sA sqrt(q))
    // p1 = 2 * int = 2 * (i 2Y) * I1 / (2 i sA) = (2Y/sA) * I1
    BigComplex I1 = integrate_segment(f1, ctx);
    BigComplex p1{ldexp2(Y, 1) / sA * I1.re, ldexp2(Y, 1) / sA * I1.im};

    // p2: cut integral along the horizontal segment Im = Y, Re in (-X, X);
    // q = (X^2 - x^2) * V(x) with V = (X^2 - x^2 + 4 Y^2) - 4 i Y x, Re V > 0.
    BigReal fourY2 = ldexp2(Y * Y, 2);
    auto f2 = [&](const BigReal& sp, const BigReal& s0, const BigReal& s1) -> BigComplex {
        BigReal x = X * (ldexp2(sp, 1) - 1);
        BigReal rad = ldexp2(X * X * s0 * s1, 2);
        BigComplex V{X * X - x * x + fourY2, -ldexp2(Y * x, 2)};
        BigComplex den = sqrt(rad) * sqrt(V);
        return BigComplex{one, ctx.real(0)} / den;
    };
    // dzeta = 2X dx-normalized; p2 = 2 * (2X) * I2 / (2 i sA) = (2X/(i sA)) I2
    BigComplex I2 = integrate_segment(f2, ctx);
    BigComplex p2{ldexp2(X, 1) / sA * I2.im, -(ldexp2(X, 1) / sA * I2.re)};

    // integer relation u p1 + v p2 = -2 via the bounded intrel search
    auto [coeffs, best] = find_target_combo(
        {p1, p2}, BigComplex{ctx.real(-2), ctx.real(0)}, 8, ctx);
    Charge2Result out{p1, p2, CycleRelation{coeffs}, best};
    if (best > BigReal::pow10(-(ctx.digits() - 15), bits))
        throw charge2_failure(
            "charge2_es_check: no integer relation u p1 + v p2 = -2 within bounds; "
            "best residual " + best.to_string(20),
            out);
    return out;
}

SpectralCurve build_symmetric_trigonal(const ESPair& pair, const PrecisionContext& ctx) {
    ESData d = es_solve(pair, ctx);
    SpectralCurve c = SpectralCurve::zero(3, ctx.bits());
    BigReal zero(0L, ctx.bits());
    c.coeff(3, 0) = BigComplex{-d.chi, zero};
    c.coeff(3, 3) = BigComplex{d.chi * d.b, zero};
    c.coeff(3, 6) = BigComplex{d.chi, zero};
    return c;
}

bool primitive_check(const CycleRelation& rel) {
    long g = 0;
    bool all_zero = true;
    for (long c : rel.coeffs) {
        if (c != 0) all_zero = false;
        g = std::gcd(g, c < 0 ? -c : c);
    }
    if (all_zero) throw domain_error("primitive_check: zero vector");
    return g == 1;
}

std::string curve_to_json(const SpectralCurve& c) {
    json j;
    j["n"] = c.n;
    json coeffs = json::array();
    for (int r = 1; r <= c.n; ++r) {
        for (int jj = 0; jj <= 2 * r; ++jj) {
            const BigComplex& v = c.coeff(r, jj);
            coeffs.push_back({{"r", r},
                              {"j", jj},
                              {"re", v.re.to_string()},
                              {"im", v.im.to_string()}});
        }
    }
    j["coefficients"] = std::move(coeffs);
    return j.dump(2);
}

SpectralCurve curve_from_json(const std::string& text, const PrecisionContext& ctx) {
    json j = json::parse(text);
    int n = j.at("n").get<int>();
    if (n < 1) throw domain_error("curve_from_json: n must be positive");
    SpectralCurve c = SpectralCurve::zero(n, ctx.bits());
    for (const auto& e : j.at("coefficients")) {
        int r = e.at("r").get<int>();
        int jj = e.at("j").get<int>();
        if (r < 1 || r > n || jj < 0 || jj > 2 * r)
            throw domain_error("curve_from_json: coefficient index out of range");
        c.coeff(r, jj) = BigComplex{ctx.real(e.at("re").get<std::string>()),
                                    ctx.real(e.at("im").get<std::string>())};
    }
    return c;
}

} // namespace monospec
