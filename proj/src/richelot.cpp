#include "monospec/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace monospec {

namespace {

// Monic quadratic x^2 + c1 x + c0.
struct Quad {
    BigReal c1;
    BigReal c0;
};

Quad quad_from_roots(const BigReal& r1, const BigReal& r2) {
    return Quad{-(r1 + r2), r1 * r2};
}

// Richelot bracket [Q,R] = Q'R - QR' of two monic quadratics; the result is
// a (generally non-monic) quadratic b2 x^2 + b1 x + b0.
struct Brack {
    BigReal b2, b1, b0;
};

// det of the coefficient matrix of three monic quadratics (rows 1, c1, c0).
BigReal coeff_det(const Quad& p, const Quad& q, const Quad& r) {
    return (q.c1 * r.c0 - q.c0 * r.c1) - (p.c1 * r.c0 - p.c0 * r.c1) +
           (p.c1 * q.c0 - p.c0 * q.c1);
}

// Real roots of b2 x^2 + b1 x + b0, sorted; empty if complex or degenerate.
std::vector<BigReal> real_roots(const Brack& b) {
    std::vector<BigReal> out;
    if (b.b2.is_zero()) return out;
    BigReal disc = b.b1 * b.b1 - ldexp2(b.b2 * b.b0, 2);
    if (disc.sign() < 0) return out;
    BigReal sq = sqrt(disc);
    BigReal r1 = (-b.b1 - sq) / ldexp2(b.b2, 1);
    BigReal r2 = (-b.b1 + sq) / ldexp2(b.b2, 1);
    if (r2 < r1) swap(r1, r2);
    out.push_back(r1);
    out.push_back(r2);
    return out;
}

// Collapsed-oval series: int over (lo,hi) of dx / sqrt|prod_{i}(x-e_i)| where
// (lo,hi) are two of the six roots and `others` are the other four. With
// x = m + h sin(theta) the integral becomes the Wallis-weighted even Taylor
// series of prod |m+u-r|^(-1/2), convergent because the expansion radius
// min|m-r| always exceeds h.
BigReal gap_series(const BigReal& lo, const BigReal& hi,
                   const std::vector<BigReal>& others, const PrecisionContext& ctx) {
    const mpfr_prec_t bits = ctx.bits();
    BigReal m = ldexp2(lo + hi, -1);
    BigReal h = ldexp2(hi - lo, -1);
    BigReal rho = abs(m - others[0]);
    for (size_t i = 1; i < others.size(); ++i) {
        BigReal d = abs(m - others[i]);
        if (d < rho) rho = d;
    }
    // needed terms from the geometric ratio (h/rho)^2
    double ratio = (h / rho).to_double();
    if (!(ratio < 1.0))
        throw accuracy_error("richelot_periods: series ratio >= 1", "0", "1");
    long need = 8;
    if (ratio > 1e-12)
        need = static_cast<long>(((ctx.digits() + 8) * std::log(10.0)) /
                                 (-2.0 * std::log(ratio))) + 8;
    const long N = 2 * need + 4;
    if (N > 40000)
        throw accuracy_error("richelot_periods: series would need too many terms",
                             "0", std::to_string(N));

    // log-derivative coefficients lambda_k = (-1)^k P_k / (2k), P_k = sum (m-r)^-k
    std::vector<BigReal> lam;
    lam.reserve(N);
    std::vector<BigReal> invp;   // running (m-r)^-k
    BigReal L0(0L, bits);
    for (const BigReal& r : others) {
        invp.push_back(ctx.real(1) / (m - r));
        L0 -= ldexp2(log(abs(m - r)), -1);
    }
    std::vector<BigReal> pw = invp;
    for (long k = 1; k <= N; ++k) {
        BigReal Pk(0L, bits);
        for (size_t i = 0; i < pw.size(); ++i) {
            Pk += pw[i];
            pw[i] *= invp[i];
        }
        BigReal l = Pk / (2 * k);
        if (k % 2 == 1) l = -l;
        lam.push_back(l);
    }
    // c_n of exp(L0 + sum lam_k u^k) via c_n = (1/n) sum k lam_k c_{n-k}
    std::vector<BigReal> c;
    c.reserve(N + 1);
    c.push_back(exp(L0));
    for (long n = 1; n <= N; ++n) {
        BigReal s(0L, bits);
        for (long k = 1; k <= n; ++k) s += lam[k - 1] * c[n - k] * k;
        c.push_back(s / n);
    }
    // I = pi * sum_j c_{2j} h^{2j} * (2j-1)!!/(2j)!!
    BigReal tol = BigReal::pow10(-(ctx.digits() + 6), bits);
    BigReal beta(1L, bits);
    BigReal hp(1L, bits);
    BigReal h2 = h * h;
    BigReal tot(0L, bits);
    for (long j = 0; 2 * j <= N; ++j) {
        BigReal term = c[2 * j] * hp * beta;
        tot += term;
        if (j > 2 && abs(term) <= abs(tot) * tol) break;
        hp *= h2;
        beta *= QRational(2 * j + 1, 2 * j + 2).to_real(ctx);
    }
    return ctx.pi() * tot;
}

} // namespace

std::pair<BigReal, BigReal> richelot_periods(const std::array<BigReal, 6>& roots,
                                             const PrecisionContext& ctx) {
    std::vector<BigReal> e(roots.begin(), roots.end());
    for (int i = 0; i + 1 < 6; ++i)
        if (!(e[i] < e[i + 1]))
            throw domain_error("richelot_periods: roots must be strictly increasing");

    // Tracked intervals: (e2,e3) and (e4,e5) in 1-based labelling = indices
    // (1,2) and (3,4). Pairing quadratics: P over the complementary pair,
    // Q and R over the tracked intervals' endpoints.
    std::pair<int, int> Pp{0, 5}, Qp{1, 2}, Rp{3, 4};
    BigReal factor = ctx.real(1);

    for (int it = 0; it < 64; ++it) {
        BigReal g1 = e[Qp.second] - e[Qp.first];
        BigReal g2 = e[Rp.second] - e[Rp.first];
        BigReal span = e[5] - e[0];
        BigReal rel = (g1 > g2 ? g1 : g2) / span;
        if (rel < BigReal::pow10(-12, ctx.bits())) break;

        Quad P = quad_from_roots(e[Pp.first], e[Pp.second]);
        Quad Q = quad_from_roots(e[Qp.first], e[Qp.second]);
        Quad R = quad_from_roots(e[Rp.first], e[Rp.second]);
        // brackets of monic quadratics:
        // [Q,R] = (r1-q1)... computed coefficient-wise below
        auto brack = [](const Quad& A, const Quad& B) {
            // [A,B] = A'B - AB' for A = x^2 + a1 x + a0:
            // = (b1-a1) x^2 + 2(b0-a0) x + (a1 b0 - a0 b1)
            return Brack{B.c1 - A.c1, ldexp2(B.c0 - A.c0, 1), A.c1 * B.c0 - A.c0 * B.c1};
        };
        Brack U = brack(Q, R), V = brack(R, P), W = brack(P, Q);
        auto ru = real_roots(U), rv = real_roots(V), rw = real_roots(W);
        if (ru.empty() || rv.empty() || rw.empty()) break;

        struct Lab { BigReal x; char s; };
        std::vector<Lab> all;
        for (auto& x : ru) all.push_back({x, 'U'});
        for (auto& x : rv) all.push_back({x, 'V'});
        for (auto& x : rw) all.push_back({x, 'W'});
        std::sort(all.begin(), all.end(),
                  [](const Lab& a, const Lab& b) { return a.x < b.x; });
        bool distinct = true;
        for (int i = 0; i + 1 < 6; ++i)
            if (!(all[i].x < all[i + 1].x)) distinct = false;
        if (!distinct) break;

        // the sorted labels must be a cyclic rotation of W W U U V V
        std::string patt;
        for (auto& l : all) patt += l.s;
        std::string dbl = patt + patt;
        size_t k = dbl.find("WWUUVV");
        if (k == std::string::npos || k >= 6) break;
        // tracked gap 1: between the W block and the U block; gap 2: U to V
        int t1a = (static_cast<int>(k) + 1) % 6, t1b = (static_cast<int>(k) + 2) % 6;
        int t2a = (static_cast<int>(k) + 3) % 6, t2b = (static_cast<int>(k) + 4) % 6;
        int pa = (static_cast<int>(k) + 5) % 6, pb = static_cast<int>(k) % 6;
        if (t1a > t1b || t2a > t2b) break;   // a tracked gap would wrap through infinity

        BigReal ng1 = all[t1b].x - all[t1a].x;
        BigReal ng2 = all[t2b].x - all[t2a].x;
        BigReal nspan = all[5].x - all[0].x;
        if (!((ng1 + ng2) / nspan < (g1 + g2) / span)) break;   // step must contract

        BigReal det = coeff_det(P, Q, R);
        BigReal lead = U.b2 * V.b2 * W.b2;
        factor *= ldexp2(sqrt(abs(det / lead)), 1);   // 2 sqrt|Delta / (u2 v2 w2)|

        for (int i = 0; i < 6; ++i) e[i] = all[i].x;
        Qp = {t1a, t1b};
        Rp = {t2a, t2b};
        Pp = {std::min(pa, pb), std::max(pa, pb)};
    }

    auto others_of = [&](int a, int b) {
        std::vector<BigReal> o;
        for (int i = 0; i < 6; ++i)
            if (i != a && i != b) o.push_back(e[i]);
        return o;
    };
    BigReal I1 = factor * gap_series(e[Qp.first], e[Qp.second],
                                     others_of(Qp.first, Qp.second), ctx);
    BigReal I2 = factor * gap_series(e[Rp.first], e[Rp.second],
                                     others_of(Rp.first, Rp.second), ctx);
    return {I1, I2};
}

} // namespace monospec
