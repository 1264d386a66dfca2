#include <doctest.h>

#include <stdexcept>

#include "canon8/families.hpp"
#include "canon8/tower.hpp"

using namespace canon8;

namespace {

Tower family_tower(int id, Int n) {
    FamilyReport r = build_family(id, n);
    return r.tower;
}

}  // namespace

TEST_CASE("step canonical classes") {
    SurfaceModel f1(1);

    SUBCASE("blown-up first cover") {
        // K_Y + L(1,1,1) with L = C0 + (n+1)F - E1 on the family-4 surface
        const Int n = 5;
        SurfaceModel y = f1.blow_up();
        const DivisorClass k = y.canonical_class();
        const DivisorClass l = y.make_class(1, n + 1, {-1});
        CHECK(step_canonical(k, l) == y.make_class(-1, n - 2));
    }
    SUBCASE("two steps of the second construction") {
        const Int n = 5;
        const DivisorClass k1 = step_canonical(f1.canonical_class(), f1.make_class(1, n + 1));
        CHECK(k1 == f1.make_class(-1, n - 2));
        CHECK(step_canonical(k1, f1.make_class(2, 2)) == f1.make_class(1, n));
    }
    SUBCASE("zero step is the identity") {
        const DivisorClass k = f1.canonical_class();
        CHECK(step_canonical(k, f1.zero()) == k);
    }
}

TEST_CASE("pullback intersection multiplier") {
    const Tower t = family_tower(1, 3);
    const SurfaceModel& s = t.cover.surface;
    for (int level = 0; level <= 3; ++level)
        CHECK(pullback_intersection(t, s.make_class(1, 2), s.make_class(2, 1), level) ==
              (Int(1) << level) * intersect(s, s.make_class(1, 2), s.make_class(2, 1)));
}

TEST_CASE("curve chains through the towers") {
    SUBCASE("exceptional curve through the family-4 tower") {
        for (Int n = 2; n <= 6; ++n) {
            const Tower t = family_tower(4, n);
            const DivisorClass e1 = t.cover.surface.exceptional(1);
            const TrackedCurve l1 = pullback_curve(t, e1, {3}, 1);
            CHECK(l1.self_int == -2);
            CHECK(l1.genus == 0);
            const TrackedCurve l2 = pullback_curve(t, e1, {3}, 2);
            CHECK(l2.self_int == -4);
            CHECK(l2.genus == 1);
            const TrackedCurve l3 = pullback_curve(t, e1, {3}, 3);
            CHECK(l3.self_int == -2);
            CHECK(l3.genus == 1);
            CHECK(l3.ramified_count == 1);
        }
    }
    SUBCASE("fiber through the family-5 tower") {
        for (Int n = 2; n <= 6; ++n) {
            const Tower t = family_tower(5, n);
            const DivisorClass fib = t.cover.surface.fiber();
            CHECK(pullback_curve(t, fib, {3}, 1).genus == 0);
            const TrackedCurve l2 = pullback_curve(t, fib, {3}, 2);
            CHECK(l2.self_int == 0);
            CHECK(l2.genus == 3);
            const TrackedCurve l3 = pullback_curve(t, fib, {3}, 3);
            CHECK(l3.self_int == 0);
            CHECK(l3.genus == 3);
        }
    }
    SUBCASE("halving an odd self-intersection is refused") {
        const Tower t = family_tower(8, 3);
        const DivisorClass d4 = t.cover.branch.d[3];  // self-intersection -1
        CHECK_THROWS_AS(pullback_curve(t, d4, {1}, 1), std::domain_error);
    }
}

TEST_CASE("node counts") {
    for (Int n = 2; n <= 10; ++n) {
        CHECK(count_nodes(family_tower(4, n), 3) == 8 * n + 6);
        CHECK(count_nodes(family_tower(5, n), 3) == 8 * n + 12);
    }
    SUBCASE("disjoint pairs contribute nothing") {
        Tower t = family_tower(5, 3);
        t.steps[2].node_pairs = {{1, 2}};  // D1 = D2 = 0
        CHECK(count_nodes(t, 3) == 0);
    }
}

TEST_CASE("projection-formula section counts") {
    for (Int n = 2; n <= 8; ++n) {
        const Tower t4 = family_tower(4, n);
        const SurfaceModel& s4 = t4.cover.surface;
        CHECK(h0_pullback(t4, s4.make_class(1, n, {-1}), 3) == 2 * n);

        const Tower t5 = family_tower(5, n);
        const SurfaceModel& s5 = t5.cover.surface;
        CHECK(h0_pullback(t5, s5.make_class(1, n), 3) == 2 * n + 1);
    }
    SUBCASE("only constants survive for the zero class") {
        const Tower t = family_tower(5, 4);
        CHECK(h0_pullback(t, t.cover.surface.zero(), 3) == 1);
    }
}

TEST_CASE("fixed parts") {
    SUBCASE("family 4 keeps an elliptic fixed curve") {
        for (Int n = 2; n <= 6; ++n) {
            const FamilyReport r = build_family(4, n);
            const SurfaceModel& s = r.cover.surface;
            CHECK(r.fixed.fixed_class == s.exceptional(1));
            CHECK(r.fixed.h0_canonical == 2 * n);
            CHECK(r.fixed.h0_moving == 2 * n);
            CHECK(r.fixed.nontrivial_fixed);
            CHECK_FALSE(r.fixed.bpf_claimed);
            REQUIRE(r.fixed.fixed_curves.size() == 1);
            CHECK(r.fixed.fixed_curves[0].self_int == -2);
            CHECK(r.fixed.fixed_curves[0].genus == 1);
            CHECK(r.fixed.moving_class == s.make_class(1, n, {-1}));
        }
    }
    SUBCASE("family 5 keeps a genus-3 fixed curve") {
        for (Int n = 2; n <= 6; ++n) {
            const FamilyReport r = build_family(5, n);
            CHECK(r.fixed.fixed_class == r.cover.surface.fiber());
            CHECK(r.fixed.h0_canonical == 2 * n + 1);
            CHECK(r.fixed.h0_moving == 2 * n + 1);
            CHECK(r.fixed.nontrivial_fixed);
            REQUIRE(r.fixed.fixed_curves.size() == 1);
            CHECK(r.fixed.fixed_curves[0].genus == 3);
        }
    }
    SUBCASE("family 1 has no fixed part") {
        const FamilyReport r = build_family(1, 4);
        CHECK(r.fixed.fixed_class.is_zero());
        CHECK(r.fixed.bpf_claimed);
        CHECK_FALSE(r.fixed.nontrivial_fixed);
        CHECK(r.fixed.fixed_curves.empty());
    }
}

TEST_CASE("canonical image degrees") {
    SurfaceModel f1(1);
    const Int n = 7;
    CHECK(canonical_image_degree(f1, f1.make_class(1, n)) == 2 * n - 1);

    SurfaceModel y = f1.blow_up();
    CHECK(canonical_image_degree(y, y.make_class(1, n, {-1})) == 2 * n - 2);
    CHECK(canonical_image_degree(y, y.make_class(1, n - 1, {-1})) == 2 * n - 4);

    SUBCASE("indivisible products are reported") {
        CHECK_THROWS_AS(canonical_image_degree(f1, f1.make_class(1, n), 3), std::domain_error);
    }
}
