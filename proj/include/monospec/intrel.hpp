#ifndef MONOSPEC_INTREL_HPP
#define MONOSPEC_INTREL_HPP

#include <optional>
#include <vector>

#include "monospec/bigreal.hpp"
#include "monospec/precision.hpp"
#include "monospec/rational.hpp"

namespace monospec {

/// A detected integer relation sum c_i x_i = 0 with its residual and the
/// norm bound that was in force during the search.
struct RelationResult {
    std::vector<long long> coeffs;
    BigReal residual;
    double norm_bound;
};

/// Outcome of a bounded minimal-polynomial search.
struct AlgebraicityReport {
    std::optional<std::vector<long long>> found;   // c_0 + c_1 x + ... + c_d x^d
    int precision_used;
    int dmax;
    double hmax;
};

/// PSLQ search for an integer relation among the entries of x with
/// |coeffs|_inf <= max_norm. Returns nullopt only when the search certifies
/// that no relation exists below the bound at the working precision; throws
/// precision_error when the precision budget digits >= L*log10(max_norm) + 40
/// is not met or the iteration cannot decide.
std::optional<RelationResult> find_relation(const std::vector<BigReal>& x,
                                            double max_norm,
                                            const PrecisionContext& ctx);

/// Continued-fraction rational detection: the convergent p/q with q <= max_den
/// and |x - p/q| <= 10^(-(digits-15)), if any.
std::optional<QRational> rational_detect(const BigReal& x, long long max_den,
                                         const PrecisionContext& ctx);

/// Bounded search for an integer polynomial of degree <= dmax and height
/// <= hmax vanishing at x, via find_relation on the power vector.
AlgebraicityReport algebraicity_probe(const BigReal& x, int dmax, double hmax,
                                      const PrecisionContext& ctx);

/// Grid search for small integers (u_i) with sum u_i z_i = target; used by the
/// charge-2 Ercolani-Sinha verification. Returns coefficients and residual of
/// the best combination with 0 < |u|_inf <= max_norm.
std::pair<std::vector<long>, BigReal> find_target_combo(
    const std::vector<BigComplex>& z, const BigComplex& target, long max_norm,
    const PrecisionContext& ctx);

} // namespace monospec

#endif
