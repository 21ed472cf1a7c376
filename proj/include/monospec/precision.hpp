#ifndef MONOSPEC_PRECISION_HPP
#define MONOSPEC_PRECISION_HPP

#include <cmath>
#include <string>

#include "monospec/bigreal.hpp"
#include "monospec/errors.hpp"

namespace monospec {

/// Requested decimal precision plus guard digits. Every numeric operation
/// takes one of these explicitly; there is no ambient global precision.
class PrecisionContext {
public:
    explicit PrecisionContext(int digits, int guard = 15)
        : digits_(digits), guard_(guard) {
        if (digits < 20) throw domain_error("PrecisionContext: digits must be >= 20");
        if (guard < 5) throw domain_error("PrecisionContext: guard must be >= 5");
    }

    int digits() const { return digits_; }
    int guard() const { return guard_; }

    /// Working mantissa bits covering digits+guard decimal digits.
    mpfr_prec_t bits() const {
        return static_cast<mpfr_prec_t>(
            std::ceil((digits_ + guard_) * 3.3219280948873623) + 8);
    }

    BigReal real(long v) const { return BigReal(v, bits()); }
    BigReal real(const std::string& decimal) const { return BigReal(decimal, bits()); }
    BigReal pi() const { return BigReal::pi(bits()); }

    /// eps = 10^(-digits)
    BigReal eps() const { return BigReal::pow10(-digits_, bits()); }
    /// The tolerance for "equal within tolerance" claims:
    /// max(1,|ref|) * 10^(-(digits-10)).
    BigReal tol(const BigReal& ref) const {
        BigReal m = abs(ref);
        if (m < 1L) m = real(1);
        return m * BigReal::pow10(-(digits_ - 10), bits());
    }
    BigReal pow10(long e) const { return BigReal::pow10(e, bits()); }

private:
    int digits_;
    int guard_;
};

} // namespace monospec

#endif
