#pragma once

// Text, JSON and CSV renderers for family reports and the nine-row table.
// Output is deterministic; the JSON and CSV schemas are part of the CLI
// contract.

#include <string>
#include <vector>

#include "canon8/families.hpp"
#include "canon8/search.hpp"

namespace canon8 {

std::string fixed_part_string(const FamilyReport& r);

// {family, n, K2, pg, chi, q, map_degree, image_degree, bpf, fixed_part,
//  nodes, assumptions}
std::string report_json(const FamilyReport& r, int indent = -1);
std::string table_json(const std::vector<FamilyReport>& rows, int indent = -1);

inline constexpr const char* kCsvHeader = "family,K2,pg,q,bpf,image_degree";
std::string report_csv_row(const FamilyReport& r);
std::string table_csv(const std::vector<FamilyReport>& rows);

std::string report_text(const FamilyReport& r);
std::string table_text(const std::vector<FamilyReport>& rows);

std::string point_string(const std::vector<Int>& k);
std::string scan_text(const std::vector<ScanCandidate>& candidates);
std::string scan_json(const std::vector<ScanCandidate>& candidates, int indent = -1);

}  // namespace canon8
