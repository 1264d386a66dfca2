#include "canon8/tower.hpp"

#include <stdexcept>

namespace canon8 {

namespace {

Int pow2(int s) { return Int(1) << s; }

void require_level(const Tower& t, int level) {
    if (level < 0 || level > int(t.steps.size())) throw std::out_of_range("tower level out of range");
}

Int exact_div(Int v, Int d, const char* what) {
    if (v % d != 0) throw std::domain_error(std::string("non-integral value in ") + what);
    return v / d;
}

}  // namespace

Tower make_tower(CoverData cover, std::vector<TowerStep> steps) {
    const int n = int(cover.l.size());
    for (const auto& st : steps) {
        if (st.chi_index < 1 || st.chi_index > n) throw std::out_of_range("tower step character out of range");
        for (int i : st.curve_branch)
            if (i < 1 || i > n) throw std::out_of_range("tower step branch index out of range");
        for (auto [a, b] : st.node_pairs)
            if (a < 1 || a > n || b < 1 || b > n) throw std::out_of_range("tower node pair out of range");
    }
    return {std::move(cover), std::move(steps)};
}

DivisorClass step_canonical(const DivisorClass& k_side, const DivisorClass& l) { return k_side + l; }

DivisorClass two_canonical_level(const Tower& t, int level) {
    require_level(t, level);
    DivisorClass two_k = 2 * t.cover.surface.canonical_class();
    for (int s = 0; s < level; ++s)
        for (int i : t.steps[s].curve_branch) two_k += t.cover.branch.d[i - 1];
    return two_k;
}

DivisorClass intermediate_canonical(const Tower& t) {
    DivisorClass two_k = two_canonical_level(t, 2);
    for (Int& c : two_k.coords) c = exact_div(c, 2, "intermediate canonical class");
    return two_k;
}

Int pullback_intersection(const Tower& t, const DivisorClass& a, const DivisorClass& b, int level) {
    require_level(t, level);
    return checked_mul(pow2(level), intersect(t.cover.surface, a, b));
}

TrackedCurve pullback_curve(const Tower& t, const DivisorClass& c, const std::set<int>& ramified_steps,
                            int up_to_step) {
    require_level(t, up_to_step);
    if (!t.cover.surface.owns(c)) throw std::domain_error("curve class does not live on the base surface");
    TrackedCurve out{c, up_to_step, 0, 0, 0};
    for (int s = 1; s <= up_to_step; ++s)
        if (ramified_steps.count(s)) ++out.ramified_count;

    // C_s = (1/2^r) f*(C), so C_s.C_s = 2^s * C.C / 4^r and
    // C_s.K_s = 2^s * (C . 2K_side) / 2^(r+1).
    const Int cc = intersect(t.cover.surface, c, c);
    out.self_int = exact_div(checked_mul(pow2(up_to_step), cc), pow2(2 * out.ramified_count),
                             "pulled-back self-intersection");
    const DivisorClass two_k = two_canonical_level(t, up_to_step);
    const Int ck = exact_div(checked_mul(pow2(up_to_step), intersect(t.cover.surface, c, two_k)),
                             pow2(out.ramified_count + 1), "canonical pairing of pulled-back curve");

    const Int adj = checked_add(out.self_int, ck);
    if (adj % 2 != 0) throw std::domain_error("odd adjunction parity for pulled-back curve");
    out.genus = 1 + adj / 2;
    return out;
}

Int count_nodes(const Tower& t, int step) {
    if (step < 1 || step > int(t.steps.size())) throw std::out_of_range("tower step out of range");
    Int downstairs = 0;
    for (auto [a, b] : t.steps[step - 1].node_pairs)
        downstairs = checked_add(downstairs,
                                 intersect(t.cover.surface, t.cover.branch.d[a - 1], t.cover.branch.d[b - 1]));
    return checked_mul(2, downstairs);
}

Int h0_pullback(const Tower& t, const DivisorClass& m_class, int up_to_step) {
    require_level(t, up_to_step);
    if (up_to_step == 0) return adjoint_sections(t.cover.surface, m_class);
    const DivisorClass& l = t.cover.l[t.steps[up_to_step - 1].chi_index - 1];
    return checked_add(h0_pullback(t, m_class, up_to_step - 1),
                       h0_pullback(t, m_class - l, up_to_step - 1));
}

FixedPartReport fixed_part_report(const Tower& t) {
    FixedPartReport out;
    out.moving_class = intermediate_canonical(t);
    out.fixed_class = t.cover.surface.zero();
    const TowerStep& last = t.steps.back();
    for (int i : last.curve_branch) out.fixed_class += t.cover.branch.d[i - 1];
    for (int i : last.curve_branch)
        out.fixed_curves.push_back(
            pullback_curve(t, t.cover.branch.d[i - 1], {int(t.steps.size())}, int(t.steps.size())));
    out.h0_canonical = compute_invariants(t.cover).pg;
    out.h0_moving = h0_pullback(t, out.moving_class, int(t.steps.size()));
    out.bpf_claimed = out.fixed_class.is_zero();
    out.nontrivial_fixed = !out.bpf_claimed && out.h0_canonical == out.h0_moving;
    return out;
}

Int canonical_image_degree(const SurfaceModel& s, const DivisorClass& moving_class, Int map_degree) {
    if (map_degree <= 0) throw std::invalid_argument("map degree must be positive");
    const Int total = checked_mul(8, intersect(s, moving_class, moving_class));
    if (total % map_degree != 0)
        throw std::domain_error("moving class self-intersection not divisible by the map degree");
    return total / map_degree;
}

}  // namespace canon8
