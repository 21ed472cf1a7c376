#ifndef MONOSPEC_SPECFUN_HPP
#define MONOSPEC_SPECFUN_HPP

#include <array>
#include <utility>
#include <vector>

#include "monospec/numkernel.hpp"
#include "monospec/rational.hpp"

namespace monospec {

/// Elliptic modulus k in (0,1) with its complement k' = sqrt(1-k^2).
/// k = 0 is admitted as the limit input for K and E.
struct EllipticModulus {
    BigReal k;
    BigReal kprime;

    static EllipticModulus from_k(const BigReal& k, const PrecisionContext& ctx);
};

/// Weierstrass invariants of y^2 = 4x^3 - g2 x - g3.
struct WeierstrassInvariants {
    BigReal g2;
    BigReal g3;
};

/// Signature r of the alternative hypergeometric bases, r in {2,3,4,6}.
struct Signature {
    int r;
    explicit Signature(int r_) : r(r_) {
        if (r != 2 && r != 3 && r != 4 && r != 6)
            throw domain_error("Signature: r must be one of {2,3,4,6}");
    }
};

/// Gamma function at a positive rational.
BigReal gamma_q(const QRational& x, const PrecisionContext& ctx);

/// Beta function B(x,y) = Gamma(x)Gamma(y)/Gamma(x+y) at positive rationals.
BigReal beta_q(const QRational& x, const QRational& y, const PrecisionContext& ctx);

/// Complete elliptic integral K(k) = pi / (2 agm(1, k')).
BigReal ellip_k(const EllipticModulus& m, const PrecisionContext& ctx);

/// Complete elliptic integral E(k) via the AGM side sum. E(1) = 1 admitted.
BigReal ellip_e(const EllipticModulus& m, const PrecisionContext& ctx);

/// 2F1(1/r, (r-1)/r; 1; t) for t in [0,1). Power series for t <= 1/2, the
/// logarithmic c = a+b connection formula at 1-t for t > 1/2.
BigReal hyp2f1_unit(const Signature& r, const BigReal& t, const PrecisionContext& ctx);

/// F(t)/F(1-t) with F = hyp2f1_unit(r, .); strictly increasing on (0,1).
BigReal hyp_ratio(const Signature& r, const BigReal& t, const PrecisionContext& ctx);

/// Real half period kappa = int_{e1}^{inf} dx / sqrt(4x^3 - g2 x - g3), with
/// e1 the largest real root; computed by tanh-sinh under x = e1 + u/(1-u).
BigReal weier_half_period(const WeierstrassInvariants& w, const PrecisionContext& ctx);

/// The two real period integrals int_{e2}^{e3} dx/y and int_{e4}^{e5} dx/y of
/// y^2 = prod (x - e_i) for six strictly increasing real roots, computed by
/// the quadratically convergent Richelot isogeny iteration.
std::pair<BigReal, BigReal> richelot_periods(const std::array<BigReal, 6>& roots,
                                             const PrecisionContext& ctx);

} // namespace monospec

#endif
