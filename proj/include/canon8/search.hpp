#pragma once

// Exhaustive enumeration of point-multiplicity vectors satisfying the
// parity constraints, and class-level scanning of candidate branch
// configurations. Candidates are advisory: they certify parity and
// invariant arithmetic, not the existence of actual smooth branch curves.

#include <optional>
#include <string>
#include <vector>

#include "canon8/families.hpp"

namespace canon8 {

// All nonzero k in [min_entry, max_entry]^7 passing the parity check, in
// lexicographic order. Entries of -1 appear only when allow_exceptional.
std::vector<std::vector<Int>> enumerate_point_types(Int min_entry, Int max_entry,
                                                    bool allow_exceptional);

struct ScanCandidate {
    std::optional<std::vector<Int>> point;  // nullopt for the unmodified base
    bool ok = false;                        // solve + invariants succeeded
    std::string failure;                    // failing check when !ok
    Invariants inv;                         // valid when ok
    bool minimal = false;
    std::string minimality_witness;
    std::vector<std::string> assumptions;   // class-level candidacy caveats
};

// Applies impose -> solve -> invariants -> minimality to the base
// construction and to each candidate point. Failures are data, not errors.
// Results are sorted by (K^2, pg, q), base first on ties.
std::vector<ScanCandidate> scan_configs(int base, Int n, const std::vector<std::vector<Int>>& points);

}  // namespace canon8
