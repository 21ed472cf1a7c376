#ifndef MONOSPEC_CURVES_HPP
#define MONOSPEC_CURVES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monospec/modeq.hpp"

namespace monospec {

/// Spectral curve P(eta,zeta) = eta^n + a_1(zeta) eta^{n-1} + ... + a_n(zeta)
/// with deg a_r <= 2r. a[r-1][j] is the coefficient of zeta^j in a_r, stored
/// for j = 0..2r (high coefficients may be zero).
struct SpectralCurve {
    int n = 0;
    std::vector<std::vector<BigComplex>> a;

    static SpectralCurve zero(int n, mpfr_prec_t bits);
    const BigComplex& coeff(int r, int j) const { return a[r - 1][j]; }
    BigComplex& coeff(int r, int j) { return a[r - 1][j]; }
};

/// Holomorphic differential zeta^j eta^i dzeta / (dP/deta) in the
/// Ercolani-Sinha basis; 0 <= i <= n-2, 0 <= j <= 2(n-2-i).
struct DifferentialDescriptor {
    int i;
    int j;
};

/// Integer 1-cycle data; for the charge-2 specialization a pair (u,v).
struct CycleRelation {
    std::vector<long> coeffs;
};

/// Parameters for the Table-1 constructors; only the fields a row uses are read.
struct Table1Params {
    long m = 1;                      // rows 1-2
    std::optional<BigReal> k;        // row 3
    int sign = +1;                   // rows 4, 7
    std::optional<BigReal> a;        // rows 8, 9
    int eps = +1;                    // row 9
    std::optional<BigReal> alpha;    // row 10
    std::optional<BigReal> beta;     // row 10
    std::optional<BigReal> gamma;    // row 10
};

SpectralCurve build_table1(int row, const Table1Params& p, const PrecisionContext& ctx);

/// Result of the reality check H1.
struct H1Report {
    bool ok = true;
    BigReal max_residual;
    std::vector<std::pair<int, int>> violations;   // (r,j) pairs
};

/// Coefficient form of Hitchin's H1: c_{r,j} = (-1)^{r+j} conj(c_{r,2r-j}).
H1Report check_h1(const SpectralCurve& c, const PrecisionContext& ctx);

std::vector<DifferentialDescriptor> holomorphic_basis(const SpectralCurve& c);

/// Charge-2 Ercolani-Sinha verification data.
struct Charge2Result {
    BigComplex p1;            // period over the cycle around the right root pair
    BigComplex p2;            // period over the cycle around the upper root pair
    CycleRelation relation;   // (u,v) with u p1 + v p2 = -2
    BigReal residual;         // |u p1 + v p2 + 2|
};

/// Thrown when no small-integer relation reaches the required residual; the
/// raw periods plus the best candidate are attached.
struct charge2_failure : verification_error {
    Charge2Result partial;
    charge2_failure(const std::string& what, Charge2Result p)
        : verification_error(what), partial(std::move(p)) {}
};

/// Verifies the period form of the Ercolani-Sinha constraint on the charge-2
/// curve eta^2 + (K^2/4)(zeta^4 + 2(k^2-k'^2) zeta^2 + 1): computes the two
/// independent periods of dzeta/(dP/deta) by contour quadrature and finds
/// small integers (u,v) with u p1 + v p2 = -2. `coeff_scale` perturbs the
/// K^2/4 normalization (1 = exact curve); the relation must then fail.
Charge2Result charge2_es_check(const BigReal& k, const PrecisionContext& ctx,
                               const BigReal* coeff_scale = nullptr);

/// n=3 curve eta^3 + chi (zeta^6 + b zeta^3 - 1) from the solved ES data.
SpectralCurve build_symmetric_trigonal(const ESPair& pair, const PrecisionContext& ctx);

/// True iff the gcd of all integer components equals 1.
bool primitive_check(const CycleRelation& rel);

/// Deterministic JSON serialization (n and the coefficients c_{r,j} as decimal
/// string pairs at full working precision; r ascending, then j ascending).
std::string curve_to_json(const SpectralCurve& c);
SpectralCurve curve_from_json(const std::string& text, const PrecisionContext& ctx);

} // namespace monospec

#endif
