#pragma once

// Assembly and validation of Z2^m-cover building data on a surface model:
// the branch divisors D_1..D_{2^m-1}, the character classes L_chi solving
// 2*L_chi = sum of the D_i selected by the parity matrix, imposition of
// singular points by blowing up, and the invariants of the covering
// surface (K^2, p_g, chi(O), q).

#include <span>
#include <string>
#include <vector>

#include "canon8/group.hpp"
#include "canon8/picard.hpp"

namespace canon8 {

struct BranchAssumptions {
    bool components_smooth = true;
    bool normal_crossings = true;
    bool general_position = true;
};

struct BranchData {
    int m = 3;
    std::vector<DivisorClass> d;  // size 2^m - 1; index i-1 holds D_i
    std::vector<std::vector<Int>> imposed_points;
    BranchAssumptions assumptions;
};

struct CoverData {
    SurfaceModel surface;
    BranchData branch;
    std::vector<DivisorClass> l;          // size 2^m - 1; index j-1 holds L_chi_j
    std::vector<int> trivial_characters;  // characters whose L class is zero (degenerate cover)
};

struct Invariants {
    Int k2 = 0;
    Int pg = 0;
    Int chi = 0;
    Int q = 0;
    DivisorClass two_k_pullclass;  // M with 2K_X = f*(M)
};

// True iff every character row sum of k is even. Entries may be -1
// (exceptional divisor added to that branch component).
bool validate_point_type(int m, std::span<const Int> k);
bool validate_point_type(std::span<const Int> k);  // m = 3

struct ImposedBranch {
    SurfaceModel surface;
    BranchData branch;
};

// Blows up one point and replaces each D_i by D_i - k_i * E. Throws on an
// invalid point type.
ImposedBranch impose_point(const SurfaceModel& s, const BranchData& b, std::span<const Int> k);

// Halves each parity row sum of the D_i. Throws std::domain_error naming
// the first character whose row sum has an odd coordinate (no cover
// exists). Characters with a zero L class are recorded, not rejected.
CoverData solve_building_data(const SurfaceModel& s, const BranchData& b);

DivisorClass branch_total(const BranchData& b);  // sum of the D_i

// M = 2K_Y + sum D_i, the class with 2K_X = f*(M).
DivisorClass double_canonical_pullclass(const CoverData& c);

// Section count used for the adjoint classes L_chi + K_Y: zero whenever the
// section or fiber degree is negative (no effective representative),
// otherwise h0.
Int adjoint_sections(const SurfaceModel& s, const DivisorClass& d);

// h0(L_chi + K_Y) per character, in index order 1..2^m-1.
std::vector<Int> section_term_by_character(const CoverData& c);

// K^2 = 2*M^2, pg = sum of adjoint section counts, chi from the cover
// formula, q = 1 + pg - chi.
Invariants compute_invariants(const CoverData& c);

// Nef-and-big test of M; certifies minimality of the covering surface.
NefResult minimality_check(const CoverData& c);

}  // namespace canon8
