#ifndef MONOSPEC_NUMKERNEL_HPP
#define MONOSPEC_NUMKERNEL_HPP

#include <functional>

#include "monospec/bigreal.hpp"
#include "monospec/precision.hpp"

namespace monospec {

/// Real integrand f(x, x-a, b-x). The distances to the endpoints are supplied
/// separately because tanh-sinh nodes approach the endpoints to within
/// 10^(-digits-guard); integrands with endpoint singularities must use them
/// instead of recomputing x-a (which would cancel catastrophically).
using RealIntegrand =
    std::function<BigReal(const BigReal& x, const BigReal& from_a, const BigReal& from_b)>;

/// Complex integrand over the unit parameter s of a straight segment,
/// g(s, s-0, 1-s). The caller maps s to its own path point.
using SegmentIntegrand =
    std::function<BigComplex(const BigReal& s, const BigReal& from0, const BigReal& from1)>;

/// Arithmetic-geometric mean of two positive reals. Stops when
/// |a_n - b_n| <= |a_n| * 10^(-digits-guard).
BigReal agm(const BigReal& a, const BigReal& b, const PrecisionContext& ctx);

/// Double-exponential (tanh-sinh) quadrature of f over the finite interval
/// (a,b). Handles algebraic endpoint singularities milder than (x-a)^(-1).
/// Level refinement stops when two successive levels agree within tolerance;
/// throws accuracy_error after max_levels without convergence. Semi-infinite
/// integrals over (a, inf) are taken through the fixed substitution
/// x = a + u/(1-u), u in (0,1), as weier_half_period does.
BigReal integrate_de(const RealIntegrand& f, const BigReal& a, const BigReal& b,
                     const PrecisionContext& ctx, int max_levels = 12);

/// Same machinery over a straight complex segment, as the integral of g(s)
/// for s in (0,1); the caller applies the (z1-z0) path factor.
BigComplex integrate_segment(const SegmentIntegrand& g, const PrecisionContext& ctx,
                             int max_levels = 12);

} // namespace monospec

#endif
