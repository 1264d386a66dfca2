#include "canon8/search.hpp"

#include <algorithm>
#include <stdexcept>

namespace canon8 {

std::vector<std::vector<Int>> enumerate_point_types(Int min_entry, Int max_entry,
                                                    bool allow_exceptional) {
    if (min_entry < -1) throw std::invalid_argument("entries below -1 are not meaningful");
    if (!allow_exceptional && min_entry < 0) min_entry = 0;
    if (min_entry > max_entry) throw std::invalid_argument("empty entry range");

    std::vector<std::vector<Int>> out;
    std::vector<Int> k(7, min_entry);
    while (true) {
        bool all_zero = std::all_of(k.begin(), k.end(), [](Int v) { return v == 0; });
        if (!all_zero && validate_point_type(3, k)) out.push_back(k);
        // lexicographic odometer, rightmost digit fastest
        int pos = 6;
        while (pos >= 0 && k[pos] == max_entry) {
            k[pos] = min_entry;
            --pos;
        }
        if (pos < 0) break;
        ++k[pos];
    }
    return out;
}

std::vector<ScanCandidate> scan_configs(int base, Int n,
                                        const std::vector<std::vector<Int>>& points) {
    BaseConstruction origin = construction_base(base, n);

    auto evaluate = [&](const std::optional<std::vector<Int>>& point) {
        ScanCandidate cand;
        cand.point = point;
        try {
            SurfaceModel surface = origin.surface;
            BranchData branch = origin.branch;
            if (point) {
                ImposedBranch imposed = impose_point(surface, branch, *point);
                surface = std::move(imposed.surface);
                branch = std::move(imposed.branch);
            }
            CoverData cover = solve_building_data(surface, branch);
            cand.inv = compute_invariants(cover);
            NefResult nef = minimality_check(cover);
            cand.minimal = nef.ok;
            cand.minimality_witness = nef.witness;
            cand.assumptions = {"general_position_points", "class_level_candidate"};
            cand.ok = true;
        } catch (const std::exception& e) {
            cand.ok = false;
            cand.failure = e.what();
        }
        return cand;
    };

    std::vector<ScanCandidate> out;
    out.push_back(evaluate(std::nullopt));
    for (const auto& p : points) out.push_back(evaluate(p));

    std::stable_sort(out.begin(), out.end(), [](const ScanCandidate& a, const ScanCandidate& b) {
        if (a.ok != b.ok) return a.ok > b.ok;
        if (!a.ok) return false;
        if (a.inv.k2 != b.inv.k2) return a.inv.k2 < b.inv.k2;
        if (a.inv.pg != b.inv.pg) return a.inv.pg < b.inv.pg;
        return a.inv.q < b.inv.q;
    });
    return out;
}

}  // namespace canon8
