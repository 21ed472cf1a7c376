#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_util.hpp"

using namespace monospec;
using mstest::check_close;
using mstest::ctx50;
using mstest::ev;

TEST_CASE("expression grammar covers the test-target forms") {
    const auto& ctx = ctx50();
    check_close(ev("1/2 + 5*sqrt(3)/18"),
                ctx.real(1) / 2 + ctx.real(5) * sqrt(ctx.real(3)) / 18, 48, "table form");
    check_close(ev("(63 + 171*2^(1/3) - 18*4^(1/3))/250"),
                (ctx.real(63) + ctx.real(171) * rootn(ctx.real(2), 3) -
                 ctx.real(18) * rootn(ctx.real(4), 3)) /
                    250,
                48, "cube roots");
    check_close(ev("pi^2"), ctx.pi() * ctx.pi(), 48, "pi powers");
    check_close(ev("cbrt(27)"), ctx.real(3), 48, "cbrt");
    check_close(ev("-2^3"), ctx.real(-8), 48, "unary minus binds the power");
    check_close(ev("0.125"), ctx.real(1) / 8, 48, "decimal literal");
    check_close(ev("1e-3"), ctx.real(1) / 1000, 48, "exponent literal");
    check_close(ev("2^(-2)"), ctx.real(1) / 4, 48, "negative exponent");
}

TEST_CASE("expression errors") {
    CHECK_THROWS_AS(ev("1 +"), domain_error);
    CHECK_THROWS_AS(ev("sqrt 2"), domain_error);
    CHECK_THROWS_AS(ev("foo(2)"), domain_error);
    CHECK_THROWS_AS(ev("(1"), domain_error);
    CHECK_THROWS_AS(ev("1 2"), domain_error);
}
