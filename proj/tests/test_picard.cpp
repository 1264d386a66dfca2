#include <doctest.h>

#include <stdexcept>

#include <random>

#include "canon8/picard.hpp"

using namespace canon8;

namespace {

// Independent section-count oracle: monomial lattice points (k, j) with
// 0 <= k <= a, 0 <= j <= b - k*e.
Int lattice_h0(Int e, Int a, Int b) {
    if (a < 0) return 0;
    Int count = 0;
    for (Int k = 0; k <= a; ++k)
        for (Int j = 0; j + k * e <= b; ++j) ++count;
    return count;
}

DivisorClass random_class(const SurfaceModel& s, std::mt19937& rng) {
    std::uniform_int_distribution<Int> coeff(-20, 20);
    DivisorClass d = s.zero();
    for (auto& c : d.coords) c = coeff(rng);
    return d;
}

}  // namespace

TEST_CASE("intersection form on F1") {
    SurfaceModel f1(1);
    const DivisorClass c0 = f1.section();
    const DivisorClass fib = f1.fiber();

    CHECK(intersect(f1, c0, c0) == -1);
    CHECK(intersect(f1, fib, fib) == 0);
    CHECK(intersect(f1, c0, fib) == 1);

    const DivisorClass k = f1.make_class(-2, -3);
    CHECK(intersect(f1, k, k) == 8);
}

TEST_CASE("intersection form after a blow-up") {
    SurfaceModel f1(1);
    SurfaceModel y = f1.blow_up();
    const DivisorClass d = y.make_class(2, 2, {-1});  // 2C0 + 2F - E1
    CHECK(intersect(y, d, d) == 3);
    CHECK(intersect(y, y.exceptional(1), y.exceptional(1)) == -1);
    CHECK(intersect(y, y.exceptional(1), y.section()) == 0);

    SurfaceModel y2 = y.blow_up();
    CHECK(intersect(y2, y2.exceptional(1), y2.exceptional(2)) == 0);
}

TEST_CASE("mismatched surfaces are rejected") {
    SurfaceModel a(1), b(1);
    CHECK_THROWS_AS(intersect(a, a.section(), b.section()), std::domain_error);
    CHECK_THROWS_AS(a.section() + b.section(), std::domain_error);
}

TEST_CASE("intersection is symmetric and bilinear") {
    SurfaceModel s = SurfaceModel(1).blow_up().blow_up().blow_up();
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        const DivisorClass a = random_class(s, rng);
        const DivisorClass b = random_class(s, rng);
        const DivisorClass c = random_class(s, rng);
        CHECK(intersect(s, a, b) == intersect(s, b, a));
        CHECK(intersect(s, a + c, b) == intersect(s, a, b) + intersect(s, c, b));
        CHECK(intersect(s, 3 * a, b) == 3 * intersect(s, a, b));
    }
}

TEST_CASE("canonical class") {
    SurfaceModel f1(1);
    CHECK(f1.canonical_class() == f1.make_class(-2, -3));
    CHECK(intersect(f1, f1.canonical_class(), f1.canonical_class()) == 8);

    SurfaceModel y = f1.blow_up();
    CHECK(y.canonical_class() == y.make_class(-2, -3, {1}));

    SurfaceModel f0(0);
    CHECK(f0.canonical_class() == f0.make_class(-2, -2));
}

TEST_CASE("canonical self-intersection drops by one per blow-up") {
    SurfaceModel s(1);
    Int expected = 8;
    for (int i = 0; i < 5; ++i) {
        CHECK(intersect(s, s.canonical_class(), s.canonical_class()) == expected);
        s = s.blow_up();
        --expected;
    }
}

TEST_CASE("blow-up embeds classes and preserves intersections") {
    SurfaceModel f1(1);
    SurfaceModel y = f1.blow_up();
    const DivisorClass d = f1.make_class(2, 2);
    CHECK(intersect(y, y.embed(d), y.embed(d)) == 4);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const DivisorClass a = random_class(f1, rng);
        const DivisorClass b = random_class(f1, rng);
        CHECK(intersect(f1, a, b) == intersect(y, y.embed(a), y.embed(b)));
    }
}

TEST_CASE("section counts") {
    SurfaceModel f1(1);

    SUBCASE("C0 + n*F") {
        CHECK(h0(f1, f1.make_class(1, 3)) == 7);
        for (Int n = 0; n <= 12; ++n) CHECK(h0(f1, f1.make_class(1, n)) == 2 * n + 1);
    }
    SUBCASE("degenerate classes") {
        CHECK(h0(f1, f1.zero()) == 1);
        CHECK(h0(f1, f1.make_class(0, -1)) == 0);
        CHECK(h0(f1, f1.make_class(-1, 5)) == 0);
    }
    SUBCASE("imposed points subtract independent conditions") {
        SurfaceModel y = f1.blow_up();
        CHECK(h0(y, y.make_class(1, 4, {-2})) == 6);  // 2n+1 - 3 at n = 4
        CHECK(h0(y, y.make_class(1, 4, {-1})) == 8);
        CHECK(h0(y, y.make_class(0, 0, {-5})) == 0);  // clamped at zero
    }
    SUBCASE("positive exceptional part is refused") {
        SurfaceModel y = f1.blow_up();
        CHECK_THROWS_WITH_AS(h0(y, y.make_class(1, 1, {1})),
                             doctest::Contains("effective-part ambiguous"), std::domain_error);
    }
    SUBCASE("matches the lattice oracle on F1 and F0") {
        for (Int a = 0; a <= 10; ++a)
            for (Int b = 0; b <= 10; ++b) CHECK(h0(f1, f1.make_class(a, b)) == lattice_h0(1, a, b));
        SurfaceModel f0(0);
        for (Int a = 0; a <= 6; ++a)
            for (Int b = 0; b <= 6; ++b) CHECK(h0(f0, f0.make_class(a, b)) == lattice_h0(0, a, b));
        SurfaceModel f2(2);
        for (Int a = 0; a <= 6; ++a)
            for (Int b = 0; b <= 9; ++b) CHECK(h0(f2, f2.make_class(a, b)) == lattice_h0(2, a, b));
    }
}

TEST_CASE("nef and big") {
    SurfaceModel f1(1);
    SUBCASE("2C0 + 2nF") {
        for (Int n = 1; n <= 6; ++n) CHECK(is_nef_and_big(f1, f1.make_class(2, 2 * n)).ok);
    }
    SUBCASE("2C0 + (2n+1)F") {
        for (Int n = 1; n <= 6; ++n) CHECK(is_nef_and_big(f1, f1.make_class(2, 2 * n + 1)).ok);
    }
    SUBCASE("negative fiber fails on the section") {
        const NefResult r = is_nef_and_big(f1, -f1.fiber());
        CHECK_FALSE(r.ok);
        CHECK(r.witness == "C0");
    }
    SUBCASE("nef but not big") {
        const NefResult r = is_nef_and_big(f1, f1.fiber());
        CHECK_FALSE(r.ok);
        CHECK(r.witness == "self-intersection");
    }
    SUBCASE("blown surface tests the strict fiber") {
        SurfaceModel y = f1.blow_up();
        const NefResult r = is_nef_and_big(y, y.make_class(2, 5, {-3}));
        CHECK_FALSE(r.ok);
        CHECK(r.witness == "F-E1");
    }
}

TEST_CASE("adjunction genus") {
    SurfaceModel f1(1);
    CHECK(adjunction_genus(f1, f1.fiber()) == 0);
    CHECK(adjunction_genus(f1, f1.section()) == 0);
    SurfaceModel y = f1.blow_up();
    CHECK(adjunction_genus(y, y.exceptional(1)) == 0);
    // smooth plane-curve analogue: C in |2C0 + 2F| has genus 1 on F1? g = 1 + (4 + C.K)/2
    const DivisorClass c = f1.make_class(2, 2);
    CHECK(adjunction_genus(f1, c) == 1 + (intersect(f1, c, c) + intersect(f1, c, f1.canonical_class())) / 2);
}

TEST_CASE("class rendering") {
    SurfaceModel f1(1);
    SurfaceModel y = f1.blow_up();
    CHECK(to_string(y.make_class(2, 2, {-1})) == "2*C0 + 2*F - E1");
    CHECK(to_string(y.make_class(-1, 0, {2})) == "-C0 + 2*E1");
    CHECK(to_string(y.zero()) == "0");
    CHECK(to_string(f1.make_class(0, 4)) == "4*F");
}

TEST_CASE("overflow is detected") {
    SurfaceModel f1(1);
    const Int big = Int(1) << 62;
    CHECK_THROWS_AS(intersect(f1, f1.make_class(big, 0), f1.make_class(big, 0)), std::overflow_error);
}
