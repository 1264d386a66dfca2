#include "canon8/cover.hpp"

#include <stdexcept>

namespace canon8 {

namespace {

void require_branch_shape(const SurfaceModel& s, const BranchData& b) {
    const std::size_t expected = (std::size_t(1) << b.m) - 1;
    if (b.d.size() != expected) throw std::invalid_argument("branch data has wrong number of divisors");
    for (const auto& d : b.d)
        if (!s.owns(d)) throw std::domain_error("branch divisor does not live on the given surface");
}

// Class-level effectivity: nonnegative section and fiber degrees, and a
// class supported on exceptional curves alone must have nonnegative
// coefficients there.
void require_model_effective(const BranchData& b, int index_1based) {
    const DivisorClass& d = b.d[index_1based - 1];
    if (d.is_zero()) return;
    if (d.coords[0] < 0 || d.coords[1] < 0)
        throw std::domain_error("branch divisor D" + std::to_string(index_1based) +
                                " has negative section or fiber degree");
    if (d.coords[0] == 0 && d.coords[1] == 0) {
        for (std::size_t i = 2; i < d.coords.size(); ++i)
            if (d.coords[i] < 0)
                throw std::domain_error("branch divisor D" + std::to_string(index_1based) +
                                        " is not effective");
    }
}

}  // namespace

bool validate_point_type(int m, std::span<const Int> k) {
    const std::size_t expected = (std::size_t(1) << m) - 1;
    if (k.size() != expected) throw std::invalid_argument("point type has wrong length");
    for (Int v : k)
        if (v < -1) throw std::invalid_argument("point multiplicities must be >= -1");
    ParityMatrix pm(m);
    for (int chi = 1; chi <= pm.size(); ++chi) {
        Int sum = 0;
        for (int i = 1; i <= pm.size(); ++i)
            if (pm.entry(chi, i)) sum += k[i - 1];
        if (((sum % 2) + 2) % 2 != 0) return false;
    }
    return true;
}

bool validate_point_type(std::span<const Int> k) { return validate_point_type(3, k); }

ImposedBranch impose_point(const SurfaceModel& s, const BranchData& b, std::span<const Int> k) {
    require_branch_shape(s, b);
    if (!validate_point_type(b.m, k))
        throw std::domain_error("point type fails the parity constraints");
    std::vector<Int> kvec(k.begin(), k.end());
    SurfaceModel blown = s.blow_up({"P" + std::to_string(s.blowup_count() + 1), kvec});
    const DivisorClass e = blown.exceptional(blown.blowup_count());
    BranchData out = b;
    for (std::size_t i = 0; i < out.d.size(); ++i)
        out.d[i] = blown.embed(b.d[i]) - kvec[i] * e;
    out.imposed_points.push_back(std::move(kvec));
    return {std::move(blown), std::move(out)};
}

CoverData solve_building_data(const SurfaceModel& s, const BranchData& b) {
    require_branch_shape(s, b);
    for (int i = 1; i <= int(b.d.size()); ++i) require_model_effective(b, i);
    ParityMatrix pm(b.m);
    CoverData out{s, b, {}, {}};
    for (int chi = 1; chi <= pm.size(); ++chi) {
        DivisorClass sum = s.zero();
        for (int i = 1; i <= pm.size(); ++i)
            if (pm.entry(chi, i)) sum += b.d[i - 1];
        for (Int c : sum.coords)
            if (c % 2 != 0)
                throw std::domain_error("no cover exists: odd coordinate in the equation for L(" +
                                        bits_label(b.m, chi) + ")");
        DivisorClass l = sum;
        for (Int& c : l.coords) c /= 2;
        if (l.is_zero()) out.trivial_characters.push_back(chi);
        out.l.push_back(std::move(l));
    }
    return out;
}

DivisorClass branch_total(const BranchData& b) {
    DivisorClass sum = b.d.at(0);
    for (std::size_t i = 1; i < b.d.size(); ++i) sum += b.d[i];
    return sum;
}

DivisorClass double_canonical_pullclass(const CoverData& c) {
    return 2 * c.surface.canonical_class() + branch_total(c.branch);
}

Int adjoint_sections(const SurfaceModel& s, const DivisorClass& d) {
    if (d.coords[0] < 0 || d.coords[1] < 0) return 0;
    return h0(s, d);
}

std::vector<Int> section_term_by_character(const CoverData& c) {
    const DivisorClass k = c.surface.canonical_class();
    std::vector<Int> terms;
    terms.reserve(c.l.size());
    for (const auto& l : c.l) terms.push_back(adjoint_sections(c.surface, l + k));
    return terms;
}

Invariants compute_invariants(const CoverData& c) {
    const SurfaceModel& s = c.surface;
    const DivisorClass k = s.canonical_class();
    Invariants inv;
    inv.two_k_pullclass = double_canonical_pullclass(c);
    inv.k2 = checked_mul(2, intersect(s, inv.two_k_pullclass, inv.two_k_pullclass));

    // pg(Y) = 0 and chi(O_Y) = 1: the base is rational.
    inv.pg = 0;
    for (Int t : section_term_by_character(c)) inv.pg = checked_add(inv.pg, t);

    Int chi_sum = 0;
    for (const auto& l : c.l) {
        Int t = intersect(s, l, l + k);
        if (t % 2 != 0) throw std::domain_error("L.(L+K) is odd; lattice inconsistency");
        chi_sum = checked_add(chi_sum, t / 2);
    }
    inv.chi = checked_add(8, chi_sum);
    inv.q = 1 + inv.pg - inv.chi;
    return inv;
}

NefResult minimality_check(const CoverData& c) {
    return is_nef_and_big(c.surface, double_canonical_pullclass(c));
}

}  // namespace canon8
