#include "monospec/specfun.hpp"

#include <cmath>

namespace monospec {

EllipticModulus EllipticModulus::from_k(const BigReal& k, const PrecisionContext& ctx) {
    if (k < 0L || k >= 1L)
        throw domain_error("EllipticModulus: k must lie in [0,1)");
    BigReal one = ctx.real(1);
    return EllipticModulus{k, sqrt((one - k) * (one + k))};
}

BigReal gamma_q(const QRational& x, const PrecisionContext& ctx) {
    if (!x.positive())
        throw domain_error("gamma_q: argument must be positive, got " + x.str());
    return gamma_fn(x.to_real(ctx));
}

BigReal beta_q(const QRational& x, const QRational& y, const PrecisionContext& ctx) {
    if (!x.positive() || !y.positive())
        throw domain_error("beta_q: arguments must be positive");
    return gamma_q(x, ctx) * gamma_q(y, ctx) / gamma_q(x + y, ctx);
}

BigReal ellip_k(const EllipticModulus& m, const PrecisionContext& ctx) {
    if (m.k < 0L || m.k >= 1L)
        throw domain_error("ellip_k: k must lie in [0,1)");
    return ctx.pi() / (agm(ctx.real(1), m.kprime, ctx) * 2);
}

BigReal ellip_e(const EllipticModulus& m, const PrecisionContext& ctx) {
    if (m.k < 0L || m.k > 1L)
        throw domain_error("ellip_e: k must lie in [0,1]");
    if (m.k == 1L) return ctx.real(1);
    // E = K (1 - sum_{n>=0} 2^{n-1} c_n^2), c_0 = k, c_{n+1} = (a_n - b_n)/2
    BigReal a = ctx.real(1);
    BigReal b = m.kprime;
    BigReal c = m.k;
    BigReal stop = BigReal::pow10(-(ctx.digits() + ctx.guard()), ctx.bits());
    BigReal side = ldexp2(c * c, -1);
    for (long n = 1; n < 8 * 64; ++n) {
        c = ldexp2(a - b, -1);
        BigReal am = ldexp2(a + b, -1);
        b = sqrt(a * b);
        a = am;
        side += ldexp2(c * c, n - 1);
        if (abs(c) <= abs(a) * stop) break;
    }
    BigReal K = ctx.pi() / (a * 2);
    return K * (ctx.real(1) - side);
}

namespace {

// 2F1(a,b;1;t) power series for |t| <= 1/2; all terms positive for t > 0.
BigReal hyp_series(const BigReal& a, const BigReal& b, const BigReal& t,
                   const PrecisionContext& ctx) {
    const mpfr_prec_t bits = ctx.bits();
    BigReal term(1L, bits);
    BigReal sum(1L, bits);
    BigReal cutoff = BigReal::pow10(-(ctx.digits() + ctx.guard()), bits);
    const long max_terms = 40L * ctx.digits() + 400;
    for (long n = 0; n < max_terms; ++n) {
        BigReal nr(n, bits);
        term *= (a + nr) * (b + nr) * t / ((nr + 1L) * (nr + 1L));
        sum += term;
        if (abs(term) <= abs(sum) * cutoff) return sum;
    }
    throw accuracy_error("hyp2f1_unit: series did not converge",
                         sum.to_string(), abs(term).to_string());
}

// c = a+b logarithmic connection formula (series in w = 1-t, valid w < 1):
// F(a,b;a+b;t) = 1/(G(a)G(b)) * sum_n p_n w^n [2 psi(n+1) - psi(a+n) - psi(b+n) - ln w]
// with p_n = (a)_n (b)_n / (n!)^2 and Gamma(a+b) = Gamma(1) = 1.
BigReal hyp_log_branch(const BigReal& a, const BigReal& b, const BigReal& w,
                       const PrecisionContext& ctx) {
    const mpfr_prec_t bits = ctx.bits();
    BigReal pref = ctx.real(1) / (gamma_fn(a) * gamma_fn(b));
    BigReal lw = log(w);
    BigReal psn = digamma_fn(BigReal(1L, bits));
    BigReal psa = digamma_fn(a);
    BigReal psb = digamma_fn(b);
    BigReal p(1L, bits);
    BigReal sum(0L, bits);
    BigReal cutoff = BigReal::pow10(-(ctx.digits() + ctx.guard()), bits);
    const long max_terms = 40L * ctx.digits() + 400;
    for (long n = 0; n < max_terms; ++n) {
        BigReal nr(n, bits);
        BigReal term = p * (ldexp2(psn, 1) - psa - psb - lw);
        sum += term;
        if (n > 0 && abs(term) <= abs(sum) * cutoff) return pref * sum;
        p *= (a + nr) * (b + nr) * w / ((nr + 1L) * (nr + 1L));
        psn += ctx.real(1) / (nr + 1L);
        psa += ctx.real(1) / (a + nr);
        psb += ctx.real(1) / (b + nr);
    }
    throw accuracy_error("hyp2f1_unit: log-branch series did not converge",
                         (pref * sum).to_string(), abs(p).to_string());
}

} // namespace

BigReal hyp2f1_unit(const Signature& sig, const BigReal& t, const PrecisionContext& ctx) {
    if (t < 0L || t >= 1L)
        throw domain_error("hyp2f1_unit: t must lie in [0,1)");
    BigReal a = QRational(1, sig.r).to_real(ctx);
    BigReal b = QRational(sig.r - 1, sig.r).to_real(ctx);
    BigReal half = ctx.real(1) / 2;
    if (t <= half) return hyp_series(a, b, t, ctx);
    return hyp_log_branch(a, b, ctx.real(1) - t, ctx);
}

BigReal hyp_ratio(const Signature& sig, const BigReal& t, const PrecisionContext& ctx) {
    if (t <= 0L || t >= 1L)
        throw domain_error("hyp_ratio: t must lie in (0,1)");
    return hyp2f1_unit(sig, t, ctx) / hyp2f1_unit(sig, ctx.real(1) - t, ctx);
}

namespace {

// Largest real root of 4x^3 - g2 x - g3: double-precision seed polished by
// Newton at working precision. The discriminant is assumed nonzero.
BigReal cubic_largest_root(const BigReal& g2, const BigReal& g3,
                           const PrecisionContext& ctx) {
    double a2 = g2.to_double(), a3 = g3.to_double();
    // roots of x^3 + p x + q with p = -g2/4, q = -g3/4
    double p = -a2 / 4, q = -a3 / 4;
    double seed;
    double disc = -4 * p * p * p - 27 * q * q;
    if (disc > 0) {
        // three real roots: trigonometric form
        double m = 2 * std::sqrt(-p / 3);
        double phi = std::acos(3 * q / (p * m)) / 3;
        seed = m * std::cos(phi);
    } else {
        double s = std::sqrt(q * q / 4 + p * p * p / 27);
        seed = std::cbrt(-q / 2 + s) + std::cbrt(-q / 2 - s);
    }
    BigReal x = BigReal::from_double(seed, ctx.bits());
    for (int i = 0; i < 200; ++i) {
        BigReal f = ldexp2(pow_si(x, 3), 2) - g2 * x - g3;
        BigReal fp = ldexp2(x * x, 2) * 3 - g2;
        BigReal dx = f / fp;
        x -= dx;
        if (abs(dx) <= abs(x) * BigReal::pow10(-(ctx.digits() + ctx.guard()), ctx.bits()))
            break;
    }
    return x;
}

} // namespace

BigReal weier_half_period(const WeierstrassInvariants& w, const PrecisionContext& ctx) {
    BigReal disc = pow_si(w.g2, 3) - pow_si(w.g3, 2) * 27;
    if (disc.is_zero())
        throw domain_error("weier_half_period: degenerate discriminant g2^3 - 27 g3^2 = 0");
    BigReal e1 = cubic_largest_root(w.g2, w.g3, ctx);
    // 4x^3 - g2 x - g3 = 4 (x - e1)(x^2 + e1 x + qq), qq = e1^2 - g2/4
    BigReal qq = e1 * e1 - ldexp2(w.g2, -2);
    // x = e1 + u/(1-u): kappa = int_0^1 du/(1-u)^2 / sqrt(4 s (x^2 + e1 x + qq)), s = u/(1-u)
    auto f = [&](const BigReal&, const BigReal& u, const BigReal& omu) -> BigReal {
        BigReal s = u / omu;
        BigReal x = e1 + s;
        BigReal quad = x * x + e1 * x + qq;
        return ctx.real(1) / (omu * omu * sqrt(ldexp2(s * quad, 2)));
    };
    return integrate_de(f, ctx.real(0), ctx.real(1), ctx);
}

} // namespace monospec
