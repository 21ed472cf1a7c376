#ifndef MONOSPEC_MODEQ_HPP
#define MONOSPEC_MODEQ_HPP

#include "monospec/specfun.hpp"

namespace monospec {

/// Coprime integer pair (n,m) with (m+n)(m-2n) < 0, labelling an
/// Ercolani-Sinha solution of the symmetric trigonal family.
struct ESPair {
    long n;
    long m;

    ESPair(long n_, long m_);   // validates the invariants
    BigReal ratio_target(const PrecisionContext& ctx) const;   // (2n-m)/(m+n)
};

/// A solved Ercolani-Sinha record for eta^3 + chi (zeta^6 + b zeta^3 - 1) = 0.
/// b is canonicalized to b >= 0 (the +-b curves are isomorphic under
/// zeta -> -1/zeta); b_raw keeps the signed value (1-2t)/sqrt(t(1-t)).
struct ESData {
    ESPair pair;
    BigReal t;
    BigReal b;
    BigReal b_raw;
    BigReal alpha;
    BigReal chi_cbrt;
    BigReal chi;
};

/// The unique t in (0,1) with hyp_ratio(r,t) = target (target > 0); bisection
/// to bracket, then secant polishing to |hyp_ratio(r,t)-target| within
/// 10^(-(digits-10)).
BigReal solve_ratio(const Signature& r, const BigReal& target, const PrecisionContext& ctx);

/// Modular partner of degree n and signature r: the unique beta in (0,1) with
/// F(beta)/F(1-beta) = n * F(alpha)/F(1-alpha), i.e. the displayed relation
/// n F(1-a)/F(a) = F(1-b)/F(b) read with the roles of a and b exchanged (the
/// orientation that reproduces beta(1/2, n=2, r=3) = 1/2 + 5 sqrt(3)/18 and
/// makes degree 1 the identity).
BigReal modular_partner(const BigReal& alpha, long n, const Signature& r,
                        const PrecisionContext& ctx);

/// Solve the Ercolani-Sinha constraints for the pair (n,m).
ESData es_solve(const ESPair& pair, const PrecisionContext& ctx);

/// Partial sums of the two Ramanujan series:
///   1: sum (1+6m) ((1/2)_m)^3 / ((m!)^3 4^m)          -> 4/pi
///   2: sum (2+15m) (1/2)_m (1/3)_m (2/3)_m / ((m!)^3 (27/2)^m) -> 27/(4 pi)
BigReal ramanujan_sum(int series_id, long N, const PrecisionContext& ctx);

} // namespace monospec

#endif
