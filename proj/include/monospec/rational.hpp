#ifndef MONOSPEC_RATIONAL_HPP
#define MONOSPEC_RATIONAL_HPP

#include <cstdlib>
#include <numeric>
#include <string>

#include "monospec/errors.hpp"
#include "monospec/precision.hpp"

namespace monospec {

/// Rational p/q in canonical form: gcd(|p|,q)=1, q > 0.
struct QRational {
    long long p = 0;
    long long q = 1;

    QRational() = default;
    QRational(long long num, long long den) : p(num), q(den) {
        if (q == 0) throw domain_error("QRational: zero denominator");
        if (q < 0) { p = -p; q = -q; }
        long long g = std::gcd(p < 0 ? -p : p, q);
        if (g > 1) { p /= g; q /= g; }
    }

    bool positive() const { return p > 0; }

    friend QRational operator+(const QRational& a, const QRational& b) {
        return QRational(a.p * b.q + b.p * a.q, a.q * b.q);
    }
    friend bool operator==(const QRational& a, const QRational& b) {
        return a.p == b.p && a.q == b.q;
    }

    BigReal to_real(const PrecisionContext& ctx) const {
        return ctx.real(p) / ctx.real(q);
    }
    std::string str() const {
        return q == 1 ? std::to_string(p) : std::to_string(p) + "/" + std::to_string(q);
    }
};

} // namespace monospec

#endif
