#include "monospec/modeq.hpp"

#include <numeric>
#include <string>

namespace monospec {

ESPair::ESPair(long n_, long m_) : n(n_), m(m_) {
    long g = std::gcd(n < 0 ? -n : n, m < 0 ? -m : m);
    if (g != 1)
        throw constraint_error("ESPair: gcd(n,m) = " + std::to_string(g) + ", expected 1");
    if (m + n == 0) throw constraint_error("ESPair: m + n = 0");
    if ((m + n) * (m - 2 * n) >= 0)
        throw constraint_error("ESPair: (m+n)(m-2n) must be negative, got " +
                               std::to_string((m + n) * (m - 2 * n)));
}

BigReal ESPair::ratio_target(const PrecisionContext& ctx) const {
    return ctx.real(2 * n - m) / ctx.real(m + n);
}

BigReal solve_ratio(const Signature& r, const BigReal& target, const PrecisionContext& ctx) {
    if (!(target > 0L)) throw domain_error("solve_ratio: target must be positive");
    const mpfr_prec_t bits = ctx.bits();
    BigReal lo = ctx.eps();
    BigReal hi = ctx.real(1) - ctx.eps();
    auto g = [&](const BigReal& t) { return hyp_ratio(r, t, ctx) - target; };
    BigReal glo = g(lo), ghi = g(hi);
    if (glo.sign() > 0 || ghi.sign() < 0)
        throw accuracy_error("solve_ratio: target not bracketed in (0,1)",
                             target.to_string(), "1");
    // bisection until the bracket is small enough for a safe secant finish
    BigReal a = lo, b = hi, fa = glo, fb = ghi;
    for (int i = 0; i < 48; ++i) {
        BigReal m = ldexp2(a + b, -1);
        BigReal fm = g(m);
        if (fm.sign() == 0) { a = m; b = m; fa = fm; fb = fm; break; }
        if (fm.sign() == fa.sign()) { a = m; fa = fm; } else { b = m; fb = fm; }
    }
    // secant
    BigReal x0 = a, f0 = fa, x1 = b, f1 = fb;
    if (x0 == x1) return x0;
    BigReal goal = BigReal::pow10(-(ctx.digits() + 5), bits) *
                   (target > 1L ? target : ctx.real(1));
    for (int i = 0; i < 200; ++i) {
        if (abs(f1) <= goal) return x1;
        BigReal den = f1 - f0;
        if (den.is_zero()) break;
        BigReal x2 = x1 - f1 * (x1 - x0) / den;
        if (x2 <= 0L || x2 >= 1L) x2 = ldexp2(x0 + x1, -1);
        x0 = x1; f0 = f1;
        x1 = x2; f1 = g(x2);
    }
    if (abs(f1) <= ctx.tol(target)) return x1;
    throw accuracy_error("solve_ratio: no convergence", x1.to_string(), abs(f1).to_string());
}

BigReal modular_partner(const BigReal& alpha, long n, const Signature& r,
                        const PrecisionContext& ctx) {
    if (alpha <= 0L || alpha >= 1L)
        throw domain_error("modular_partner: alpha must lie in (0,1)");
    if (n < 1) throw domain_error("modular_partner: degree must be positive");
    return solve_ratio(r, hyp_ratio(r, alpha, ctx) * n, ctx);
}

ESData es_solve(const ESPair& pair, const PrecisionContext& ctx) {
    Signature sig3(3);
    BigReal target = pair.ratio_target(ctx);
    BigReal t = solve_ratio(sig3, target, ctx);
    BigReal one = ctx.real(1);
    BigReal omt = one - t;
    BigReal b_raw = (one - ldexp2(t, 1)) / sqrt(t * omt);
    BigReal b = abs(b_raw);
    BigReal alpha = rootn(t / omt, 6);
    // chi^(1/3) = -(n+m) (2 pi / (3 sqrt 3)) alpha (1+alpha^6)^(-1/3) F(t);
    // alpha (1+alpha^6)^(-1/3) simplifies to (t(1-t))^(1/6)
    BigReal F = hyp2f1_unit(sig3, t, ctx);
    BigReal chi_cbrt = ctx.real(-(pair.n + pair.m)) * ldexp2(ctx.pi(), 1) /
                       (ctx.real(3) * sqrt(ctx.real(3))) * rootn(t * omt, 6) * F;
    BigReal chi = pow_si(chi_cbrt, 3);
    return ESData{pair, t, b, b_raw, alpha, chi_cbrt, chi};
}

BigReal ramanujan_sum(int series_id, long N, const PrecisionContext& ctx) {
    if (series_id != 1 && series_id != 2)
        throw domain_error("ramanujan_sum: series_id must be 1 or 2");
    if (N < 0) throw domain_error("ramanujan_sum: N must be non-negative");
    const mpfr_prec_t bits = ctx.bits();
    BigReal half = QRational(1, 2).to_real(ctx);
    BigReal third = QRational(1, 3).to_real(ctx);
    BigReal twothird = QRational(2, 3).to_real(ctx);
    BigReal sum(0L, bits);
    BigReal p(1L, bits);   // the m-th product term without the linear prefactor
    for (long m = 0; m <= N; ++m) {
        BigReal mr(m, bits);
        if (series_id == 1) {
            sum += p * (1 + 6 * m);
            BigReal num = pow_si(mr + half, 3);
            BigReal den = pow_si(mr + 1L, 3) * 4;
            p *= num / den;
        } else {
            sum += p * (2 + 15 * m);
            BigReal num = (mr + half) * (mr + third) * (mr + twothird);
            BigReal den = pow_si(mr + 1L, 3) * QRational(27, 2).to_real(ctx);
            p *= num / den;
        }
    }
    return sum;
}

} // namespace monospec
