#include "canon8/families.hpp"

#include <stdexcept>

namespace canon8 {

namespace {

constexpr int kChi100 = 4, kChi010 = 2, kChi001 = 1;
constexpr int kChi101 = 5, kChi011 = 3, kChi111 = 7;

void require_family_id(int id) {
    if (id < 1 || id > 9) throw std::invalid_argument("family id must be in 1..9");
}

}  // namespace

BaseConstruction construction_base(int which, Int n) {
    if (which != 1 && which != 2) throw std::invalid_argument("base construction must be 1 or 2");
    SurfaceModel f1(1);
    BranchData b;
    b.m = 3;
    b.d.assign(7, f1.zero());
    if (which == 1) {
        b.d[1] = f1.make_class(0, checked_mul(2, n));  // D2: 2n fibers
        b.d[2] = f1.make_class(2, 2);                  // D3
        b.d[5] = f1.make_class(2, 2);                  // D6
        b.d[6] = f1.make_class(2, 2);                  // D7
    } else {
        b.d[2] = f1.fiber();                                    // D3
        b.d[3] = f1.make_class(2, 1);                           // D4
        b.d[4] = f1.make_class(2, 2);                           // D5
        b.d[5] = f1.make_class(2, 2);                           // D6
        b.d[6] = f1.make_class(0, checked_add(checked_mul(2, n), 1));  // D7: 2n+1 fibers
    }
    return {std::move(f1), std::move(b)};
}

std::optional<std::vector<Int>> family_point(int id) {
    require_family_id(id);
    switch (id) {
        case 2: return std::vector<Int>{0, 1, 1, 0, 0, 1, 1};
        case 3: return std::vector<Int>{0, 0, 0, 0, 0, 2, 2};
        case 4: return std::vector<Int>{0, 0, 1, 0, -1, 1, 2};
        case 6: return std::vector<Int>{0, 0, 0, 1, 1, 1, 1};
        case 7: return std::vector<Int>{0, 0, 0, 0, 2, 2, 0};
        case 8: return std::vector<Int>{0, 0, -1, 1, 2, 0, 1};
        case 9: return std::vector<Int>{0, 0, -1, 1, 2, 2, 1};
        default: return std::nullopt;
    }
}

int family_base(int id) {
    require_family_id(id);
    return id <= 4 ? 1 : 2;
}

std::vector<TowerStep> family_tower_steps(int id) {
    require_family_id(id);
    if (id <= 3) {
        // First cover on D2+D3+D6+D7; the later covers ramify on nodes only.
        return {
            {kChi010, {2, 3, 6, 7}, {}},
            {kChi100, {}, {{2, 6}, {2, 7}, {3, 6}, {3, 7}}},
            {kChi001, {}, {{2, 3}, {6, 7}}},
        };
    }
    if (id == 4) {
        return {
            {kChi111, {2, 7}, {}},
            {kChi101, {3, 6}, {}},
            {kChi100, {5}, {{2, 7}, {3, 6}}},  // curve branch D5 = E
        };
    }
    return {
        {kChi111, {4, 7}, {}},
        {kChi011, {5, 6}, {}},
        {kChi010, {3}, {{4, 7}, {5, 6}}},  // curve branch D3
    };
}

FamilyReport build_family(int id, Int n) {
    require_family_id(id);
    if (n < 2) throw std::invalid_argument("family parameter must be >= 2");

    FamilyReport r;
    r.family_id = id;
    r.n = n;
    r.n_internal = (id == 9) ? checked_add(n, 1) : n;

    BaseConstruction base = construction_base(family_base(id), r.n_internal);
    SurfaceModel surface = std::move(base.surface);
    BranchData branch = std::move(base.branch);
    if (auto point = family_point(id)) {
        ImposedBranch imposed = impose_point(surface, branch, *point);
        surface = std::move(imposed.surface);
        branch = std::move(imposed.branch);
    }

    r.cover = solve_building_data(surface, branch);
    r.inv = compute_invariants(r.cover);
    r.tower = make_tower(r.cover, family_tower_steps(id));
    r.fixed = fixed_part_report(r.tower);
    r.moving_class = r.fixed.moving_class;
    r.node_count = count_nodes(r.tower, 3);

    r.assumptions = {"smooth_branch_components", "normal_crossings_branch",
                     "general_position_points", "no_pencil_composition_assumed"};

    if (id == 9) {
        // The 2K class meets the fiber through the imposed point negatively;
        // the two (-1)-curves above it are contracted.
        DivisorClass fiber_through_p = surface.fiber() - surface.exceptional(1);
        contract_step(r, fiber_through_p, 2);
    }

    r.image_degree = canonical_image_degree(surface, r.moving_class, r.map_degree);
    r.bpf = r.fixed.bpf_claimed;
    if (r.bpf) r.assumptions.push_back("base_point_freeness_claimed");
    r.minimality = is_nef_and_big(surface, r.inv.two_k_pullclass);
    return r;
}

void contract_step(FamilyReport& report, const DivisorClass& curve, Int count) {
    const SurfaceModel& s = report.cover.surface;
    if (intersect(s, curve, curve) != -1)
        throw std::domain_error("contraction requires a curve of self-intersection -1");
    if (count < 0) throw std::invalid_argument("contraction count must be nonnegative");
    if (count == 0) return;

    const DivisorClass new_m = report.inv.two_k_pullclass - curve;
    const Int new_k2 = checked_mul(2, intersect(s, new_m, new_m));
    if (new_k2 != checked_add(report.inv.k2, count))
        throw std::domain_error("contraction count inconsistent with the class arithmetic");

    report.inv.two_k_pullclass = new_m;
    report.inv.k2 = new_k2;
    report.moving_class = report.moving_class - curve;
    report.contraction = ContractionRecord{curve, count};
    report.assumptions.push_back("contraction_count_inferred");
}

std::vector<FamilyReport> family_table(Int n) {
    std::vector<FamilyReport> rows;
    rows.reserve(9);
    for (int id = 1; id <= 9; ++id) rows.push_back(build_family(id, n));
    return rows;
}

}  // namespace canon8
