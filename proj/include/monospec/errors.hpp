#ifndef MONOSPEC_ERRORS_HPP
#define MONOSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace monospec {

// Input outside an operation's domain (non-positive AGM argument, k >= 1, ...).
struct domain_error : std::domain_error {
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// A computation failed to reach the requested accuracy. Carries the best
// estimate and the remaining gap as decimal strings so callers can report them.
struct accuracy_error : std::runtime_error {
    std::string best;
    std::string gap;
    accuracy_error(const std::string& what, std::string best_, std::string gap_)
        : std::runtime_error(what), best(std::move(best_)), gap(std::move(gap_)) {}
};

// The working precision cannot support the requested search bounds.
struct precision_error : std::runtime_error {
    long required_digits;
    precision_error(const std::string& what, long required)
        : std::runtime_error(what), required_digits(required) {}
};

// A structural precondition (e.g. an ESPair inequality) failed.
struct constraint_error : std::runtime_error {
    explicit constraint_error(const std::string& what) : std::runtime_error(what) {}
};

// A verification run completed but the property did not hold.
struct verification_error : std::runtime_error {
    std::string payload;
    verification_error(const std::string& what, std::string payload_ = {})
        : std::runtime_error(what), payload(std::move(payload_)) {}
};

} // namespace monospec

#endif
