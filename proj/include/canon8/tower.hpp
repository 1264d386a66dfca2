#pragma once

// A Z2^3-cover decomposed into three iterated double covers. Each step is
// branched on 2*L_chi for one character; its positive-dimensional branch
// components are the listed D_i, and the listed node pairs are the branch
// intersections that have become A1 points by that stage. Classes of
// objects upstairs are carried as base-surface classes: a pullback
// multiplies intersection numbers by 2 per step, and a step ramified along
// a tracked curve halves its class (f*C = 2C').
//
// Canonical classes accumulate half the curve branch of every step, so the
// doubled canonical class at each level stays integral.

#include <set>
#include <utility>
#include <vector>

#include "canon8/cover.hpp"

namespace canon8 {

struct TowerStep {
    int chi_index = 0;                            // character driving this double cover
    std::vector<int> curve_branch;                // D indices ramified as curves at this step
    std::vector<std::pair<int, int>> node_pairs;  // D index pairs whose crossings are nodes here
};

struct Tower {
    CoverData cover;
    std::vector<TowerStep> steps;  // three steps
};

Tower make_tower(CoverData cover, std::vector<TowerStep> steps);

// K-side class after one double cover branched on 2L: K + L.
DivisorClass step_canonical(const DivisorClass& k_side, const DivisorClass& l);

// Twice the base-surface expression of the canonical class at the given
// level (0 = base): 2K_Y + sum over steps of the curve branch classes.
DivisorClass two_canonical_level(const Tower& t, int level);

// Base-surface class of K at the 4:1 intermediate surface (levels 1..2 are
// full curve-branched covers in all the towers built here, so this is
// integral).
DivisorClass intermediate_canonical(const Tower& t);

// Intersection number of the pullbacks of A and B at the given level:
// 2^level * A.B.
Int pullback_intersection(const Tower& t, const DivisorClass& a, const DivisorClass& b, int level);

struct TrackedCurve {
    DivisorClass base_class;
    int level = 0;
    int ramified_count = 0;  // steps at which the class was halved
    Int self_int = 0;
    Int genus = 0;
};

// Pulls a base-surface curve class through the tower, doubling
// self-intersections at unramified steps and halving the class at ramified
// ones; genus via adjunction against the level canonical class. Throws on
// non-integral self-intersection or odd adjunction parity.
TrackedCurve pullback_curve(const Tower& t, const DivisorClass& c, const std::set<int>& ramified_steps,
                            int up_to_step);

// Nodes appearing at a step: 2 * sum of D_a.D_b over the step's node pairs.
Int count_nodes(const Tower& t, int step);

// Projection-formula section count of the pullback of a base class:
// h0(f*M) = h0(M) + h0(M - L_step), recursively through the tower.
Int h0_pullback(const Tower& t, const DivisorClass& m_class, int up_to_step);

struct FixedPartReport {
    DivisorClass moving_class;             // base class of K at the intermediate surface
    DivisorClass fixed_class;              // F with fixed part (1/2)f*(F); zero if none
    std::vector<TrackedCurve> fixed_curves;
    Int h0_canonical = 0;                  // p_g of the covering surface
    Int h0_moving = 0;                     // sections of the pulled-back moving class
    bool nontrivial_fixed = false;         // fixed class nonzero and h0 equality holds
    bool bpf_claimed = false;              // no fixed part detected
};

FixedPartReport fixed_part_report(const Tower& t);

// Image degree of the canonical map: 8*(M.M)/map_degree for the moving
// class M. Throws if the product is not divisible by the map degree.
Int canonical_image_degree(const SurfaceModel& s, const DivisorClass& moving_class, Int map_degree = 8);

}  // namespace canon8
