#ifndef MONOSPEC_TEST_UTIL_HPP
#define MONOSPEC_TEST_UTIL_HPP

#include <doctest.h>

#include <string>

#include "monospec/expr.hpp"
#include "monospec/precision.hpp"

namespace mstest {

using monospec::BigReal;
using monospec::PrecisionContext;

inline const PrecisionContext& ctx50() {
    static PrecisionContext c(50);
    return c;
}

inline const PrecisionContext& ctx100() {
    static PrecisionContext c(100);
    return c;
}

// |a - b| <= 10^(-tol_digits), with a doctest message on failure
inline void check_close(const BigReal& a, const BigReal& b, int tol_digits,
                        const char* what = "") {
    BigReal d = abs(a - b);
    bool ok = d <= BigReal::pow10(-tol_digits, a.prec());
    if (!ok)
        FAIL_CHECK(what << " |a-b| = " << d.to_string(6) << " (a = " << a.to_string(25)
                        << ", b = " << b.to_string(25) << ", tol 1e-" << tol_digits << ")");
    else
        CHECK(ok);
}

inline BigReal ev(const std::string& e, const PrecisionContext& c = ctx50()) {
    return monospec::eval_expr(e, c);
}

} // namespace mstest

#endif
