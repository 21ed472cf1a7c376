#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "test_util.hpp"

#include "monospec/intrel.hpp"

using namespace monospec;
using mstest::check_close;
using mstest::ctx50;
using mstest::ctx100;
using mstest::ev;

TEST_CASE("golden-ratio relation") {
    const auto& ctx = ctx50();
    BigReal phi = (ctx.real(1) + sqrt(ctx.real(5))) / 2;
    std::vector<BigReal> x{ctx.real(1), phi, phi * phi};
    auto r = find_relation(x, 100, ctx);
    REQUIRE(r.has_value());
    // phi^2 = phi + 1 up to overall sign
    long long c0 = r->coeffs[0], c1 = r->coeffs[1], c2 = r->coeffs[2];
    CHECK(std::abs(c0) == 1);
    CHECK(c0 == c1);
    CHECK(c2 == -c0);
    CHECK(r->residual <= ctx.pow10(-35));
}

TEST_CASE("sqrt2 sum relation") {
    const auto& ctx = ctx50();
    BigReal s2 = sqrt(ctx.real(2));
    std::vector<BigReal> x{ctx.real(1), s2, ctx.real(1) + s2};
    auto r = find_relation(x, 100, ctx);
    REQUIRE(r.has_value());
    CHECK(std::abs(r->coeffs[0]) == 1);
    CHECK(r->coeffs[0] == r->coeffs[1]);
    CHECK(r->coeffs[2] == -r->coeffs[0]);
}

TEST_CASE("pi has no small relation with 1 at these bounds") {
    PrecisionContext ctx(60);
    std::vector<BigReal> x{ctx.real(1), ctx.pi()};
    auto r = find_relation(x, 1000000.0, ctx);
    CHECK_FALSE(r.has_value());
}

TEST_CASE("detection is scale-invariant") {
    const auto& ctx = ctx50();
    BigReal phi = (ctx.real(1) + sqrt(ctx.real(5))) / 2;
    std::vector<BigReal> x{ctx.real(1), phi, phi * phi};
    std::vector<BigReal> x2;
    for (const auto& v : x) x2.push_back(ldexp2(v, 1));   // lambda = 2
    auto a = find_relation(x, 100, ctx);
    auto b = find_relation(x2, 100, ctx);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->coeffs == b->coeffs);
}

TEST_CASE("relations revalidate at doubled precision") {
    const auto& ctx = ctx50();
    const auto& cx2 = ctx100();
    BigReal phi = (ctx.real(1) + sqrt(ctx.real(5))) / 2;
    auto r = find_relation({ctx.real(1), phi, phi * phi}, 100, ctx);
    REQUIRE(r.has_value());
    // recompute the combination at 2x precision: still below the tighter
    // tolerance scaled by |c|
    BigReal phi2 = (cx2.real(1) + sqrt(cx2.real(5))) / 2;
    std::vector<BigReal> hx{cx2.real(1), phi2, phi2 * phi2};
    BigReal s(0L, cx2.bits());
    long long cnorm = 0;
    for (size_t i = 0; i < hx.size(); ++i) {
        s += cx2.real(r->coeffs[i]) * hx[i];
        cnorm = std::max(cnorm, std::abs(r->coeffs[i]));
    }
    CHECK(abs(s) <= cx2.pow10(-85) * cx2.real(cnorm));
}

TEST_CASE("precision budget refusal") {
    const auto& ctx = ctx50();
    std::vector<BigReal> x{ctx.real(1), ctx.pi()};
    CHECK_THROWS_AS(find_relation(x, 1e40, ctx), precision_error);
    try {
        find_relation(x, 1e40, ctx);
    } catch (const precision_error& e) {
        CHECK(e.required_digits >= 120);
    }
}

TEST_CASE("rational detection") {
    const auto& ctx = ctx50();
    auto r = rational_detect(ev("3/4"), 10, ctx);
    REQUIRE(r.has_value());
    CHECK(r->p == 3);
    CHECK(r->q == 4);

    CHECK_FALSE(rational_detect(ctx.pi(), 1000, ctx).has_value());

    // exactly-representable rationals come back exactly and canonically
    auto e = rational_detect(ev("22/7"), 7, ctx);
    REQUIRE(e.has_value());
    CHECK(e->p == 22);
    CHECK(e->q == 7);
    auto canon = rational_detect(ev("-6/8"), 10, ctx);
    REQUIRE(canon.has_value());
    CHECK(canon->p == -3);
    CHECK(canon->q == 4);
}

TEST_CASE("algebraicity probe finds the expected minimal polynomials") {
    const auto& ctx = ctx50();
    {
        auto rep = algebraicity_probe(ctx.real(1) + sqrt(ctx.real(2)), 2, 10, ctx);
        REQUIRE(rep.found.has_value());
        CHECK(*rep.found == std::vector<long long>{-1, -2, 1});   // x^2 - 2x - 1
    }
    {
        auto rep = algebraicity_probe(rootn(ctx.real(2), 3), 3, 10, ctx);
        REQUIRE(rep.found.has_value());
        CHECK(*rep.found == std::vector<long long>{-2, 0, 0, 1});  // x^3 - 2
    }
}

TEST_CASE("probe on a rational returns the degree-1 polynomial") {
    const auto& ctx = ctx50();
    auto rep = algebraicity_probe(ev("3/7"), 2, 10, ctx);
    REQUIRE(rep.found.has_value());
    // qx - p, possibly padded visually: canonical leading coefficient positive
    std::vector<long long> want{-3, 7};
    CHECK(*rep.found == want);
}

TEST_CASE("found polynomials satisfy the residual invariant") {
    const auto& ctx = ctx50();
    BigReal x = ctx.real(1) + sqrt(ctx.real(2));
    auto rep = algebraicity_probe(x, 2, 10, ctx);
    REQUIRE(rep.found.has_value());
    BigReal p(0L, ctx.bits());
    BigReal xp(1L, ctx.bits());
    long long height = 0;
    int deg = 0;
    for (size_t i = 0; i < rep.found->size(); ++i) {
        long long c = (*rep.found)[i];
        p += ctx.real(c) * xp;
        xp *= x;
        if (c != 0) deg = static_cast<int>(i);
        height = std::max(height, std::abs(c));
    }
    BigReal bound = ctx.pow10(-(static_cast<long>(ctx.digits()) - 15)) * ctx.real(height) *
                    pow_si(ctx.real(1) + abs(x), deg);
    CHECK(abs(p) <= bound);
}

TEST_CASE("find_target_combo recovers an exact combination") {
    const auto& ctx = ctx50();
    std::vector<BigComplex> z{{ctx.real(2), ctx.real(0)}, {ctx.real(0), ctx.real(-2)}};
    auto [c, res] = find_target_combo(z, {ctx.real(-2), ctx.real(0)}, 8, ctx);
    CHECK(c == std::vector<long>{-1, 0});
    CHECK(res <= ctx.pow10(-45));
}
