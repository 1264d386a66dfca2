#pragma once

// The nine parameterized families of minimal surfaces of general type with
// canonical map of degree 8, built as Z2^3-covers of F1 (possibly blown up
// at one point). Each constructor wires a base branch configuration, an
// optional imposed point, a double-cover tower, and (family 9) a
// contraction step into a full report.

#include <optional>
#include <string>
#include <vector>

#include "canon8/tower.hpp"

namespace canon8 {

struct ContractionRecord {
    DivisorClass curve;  // base-surface class of the contracted fibers' source
    Int count = 0;       // number of (-1)-curves contracted upstairs
};

struct FamilyReport {
    int family_id = 0;
    Int n = 0;           // public parameter, >= 2
    Int n_internal = 0;  // construction parameter (n + 1 for family 9)
    CoverData cover;
    Tower tower;
    Invariants inv;
    FixedPartReport fixed;
    DivisorClass moving_class;
    Int image_degree = 0;
    Int map_degree = 8;
    std::optional<Int> node_count;  // nodes ramifying the last tower step
    bool bpf = false;
    NefResult minimality;
    std::optional<ContractionRecord> contraction;
    std::vector<std::string> assumptions;
};

// Base configurations shared with the search module: which == 1 gives
// D2 = 2n*F, D3 = D6 = D7 in |2C0 + 2F|; which == 2 gives D3 = F,
// D4 in |2C0 + F|, D5 = D6 in |2C0 + 2F|, D7 = (2n+1)*F.
struct BaseConstruction {
    SurfaceModel surface;
    BranchData branch;
};
BaseConstruction construction_base(int which, Int n);

// Imposed point of each family; families 1 and 5 have none.
std::optional<std::vector<Int>> family_point(int id);

// Which base construction a family uses (1 or 2).
int family_base(int id);

// Tower steps of a family: the three characters, the curve branch of each
// step, and the node pairs of the final step.
std::vector<TowerStep> family_tower_steps(int id);

// Full pipeline for one family at public parameter n >= 2.
FamilyReport build_family(int id, Int n);

// Applies a contraction of `count` (-1)-curves lying over `curve` to a
// report: K^2 += count, the 2K pull class and moving class drop by the
// curve, pg and q unchanged. Throws unless curve has self-intersection -1
// and the count matches the class arithmetic.
void contract_step(FamilyReport& report, const DivisorClass& curve, Int count);

// All nine families at the same n, in table order.
std::vector<FamilyReport> family_table(Int n);

}  // namespace canon8
