#include "monospec/numkernel.hpp"

#include <cmath>
#include <vector>

#include "monospec/errors.hpp"

namespace monospec {

BigReal agm(const BigReal& a0, const BigReal& b0, const PrecisionContext& ctx) {
    if (!(a0 > 0L) || !(b0 > 0L))
        throw domain_error("agm: arguments must be positive");
    BigReal a = a0, b = b0;
    BigReal stop = BigReal::pow10(-(ctx.digits() + ctx.guard()), ctx.bits());
    for (int i = 0; i < 8 * 64; ++i) {
        BigReal d = abs(a - b);
        if (d <= abs(a) * stop) break;
        BigReal am = (a + b) / 2;
        BigReal gm = sqrt(a * b);
        a = am;
        b = gm;
    }
    return (a + b) / 2;
}

namespace {

// One tanh-sinh node: abscissa offsets from both endpoints plus weight, all
// computed through e^(-2u) so that the offsets stay fully accurate near the
// endpoints (u = (pi/2) sinh t).
struct DENode {
    BigReal off_hi;   // distance from the t>0 endpoint, in half-length units: 1 - tanh(u)
    BigReal off_lo;   // 1 + tanh(u) = distance from the other endpoint
    BigReal weight;   // (pi/2) cosh(t) / cosh^2(u)
};

DENode de_node(const BigReal& t, const BigReal& half_pi) {
    BigReal u = half_pi * sinh_fn(t);
    BigReal e2 = exp(ldexp2(-u, 1));              // e^(-2u)
    BigReal den = e2 + 1L;
    DENode n;
    n.off_hi = ldexp2(e2, 1) / den;               // 2 e^(-2u) / (1 + e^(-2u))
    n.off_lo = BigReal(2L, t.prec()) / den;
    // cosh^2(u) = e^(2u)(1+e^(-2u))^2 / 4  ->  1/cosh^2 = 4 e^(-2u)/(1+e^(-2u))^2
    n.weight = half_pi * cosh_fn(t) * ldexp2(e2, 2) / (den * den);
    return n;
}

template <typename Value>
struct DEResult {
    Value value;
    BigReal gap;
    bool converged = false;
};

// Shared level-refinement driver; Value is BigReal or BigComplex.
template <typename Value, typename Eval>
DEResult<Value> de_levels(const Eval& eval_node, const PrecisionContext& ctx,
                          int max_levels) {
    const mpfr_prec_t bits = ctx.bits();
    const BigReal half_pi = BigReal::pi(bits) / 2;
    // node terms decay like e^(-2u(1-alpha)) for endpoint behaviour dist^(-alpha);
    // the factor 4 keeps the truncated tail negligible up to alpha = 3/4
    const double tmax =
        std::asinh(4.0 * (ctx.digits() + ctx.guard() + 10) * std::log(10.0) /
                   3.141592653589793);

    BigReal tol = BigReal::pow10(-(ctx.digits() + 5), bits);
    Value sum_prev;
    BigReal gap(bits);
    bool have_prev = false;

    // level k uses h = 2^-k; only odd multiples of h are new at k >= 1
    Value acc;  // running sum of f(t_j) * w_j over all nodes seen so far
    bool acc_init = false;
    for (int level = 0; level <= max_levels; ++level) {
        const long jmax = static_cast<long>(std::ceil(std::ldexp(tmax, level))) + 1;
        const long step = (level == 0) ? 1 : 2;
        const long jstart = (level == 0) ? 0 : 1;
        for (long j = jstart; j <= jmax; j += step) {
            BigReal t = ldexp2(BigReal(j, bits), -level);
            DENode n = de_node(t, half_pi);
            Value term = eval_node(n);
            if (j != 0) {
                DENode m{n.off_lo, n.off_hi, n.weight};
                term = term + eval_node(m);
            }
            if (!acc_init) {
                acc = term;
                acc_init = true;
            } else {
                acc = acc + term;
            }
        }
        Value total = ldexp2(BigReal(1L, bits), -level) * acc;
        if (have_prev) {
            gap = abs(total - sum_prev);
            BigReal scale = abs(total);
            if (scale < 1L) scale = BigReal(1L, bits);
            if (gap <= scale * tol) return {total, gap, true};
        }
        sum_prev = total;
        have_prev = true;
    }
    return {sum_prev, gap, false};
}

} // namespace

BigReal integrate_de(const RealIntegrand& f, const BigReal& a, const BigReal& b,
                     const PrecisionContext& ctx, int max_levels) {
    if (!(a < b)) throw domain_error("integrate_de: requires a < b");
    BigReal half = (b - a) / 2;
    auto eval = [&](const DENode& n) -> BigReal {
        // off_hi is the fractional distance to b, off_lo to a
        BigReal fb = half * n.off_hi;
        BigReal fa = half * n.off_lo;
        BigReal x = a + fa;
        // recompute x from the smaller offset for accuracy
        if (n.off_hi < n.off_lo) x = b - fb;
        return f(x, fa, fb) * n.weight;
    };
    auto r = de_levels<BigReal>(eval, ctx, max_levels);
    if (!r.converged)
        throw accuracy_error("integrate_de: no convergence after max levels",
                             (r.value * half).to_string(), (r.gap * half).to_string());
    return r.value * half;
}

BigComplex integrate_segment(const SegmentIntegrand& g, const PrecisionContext& ctx,
                             int max_levels) {
    const mpfr_prec_t bits = ctx.bits();
    BigReal one(1L, bits);
    auto eval = [&](const DENode& n) -> BigComplex {
        BigReal from1 = n.off_hi / 2;   // (1 - tanh)/2 in unit-interval units
        BigReal from0 = n.off_lo / 2;
        BigReal s = from0;
        if (from1 < from0) s = one - from1;
        BigComplex v = g(s, from0, from1);
        return {v.re * n.weight, v.im * n.weight};
    };
    auto r = de_levels<BigComplex>(eval, ctx, max_levels);
    if (!r.converged)
        throw accuracy_error("integrate_segment: no convergence after max levels",
                             abs(r.value).to_string(), r.gap.to_string());
    return {r.value.re / 2, r.value.im / 2};
}

} // namespace monospec
