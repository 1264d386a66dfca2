#include "canon8/emit.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace canon8 {

using nlohmann::json;

namespace {

json report_to_json_object(const FamilyReport& r) {
    json j;
    j["family"] = r.family_id;
    j["n"] = r.n;
    j["K2"] = r.inv.k2;
    j["pg"] = r.inv.pg;
    j["chi"] = r.inv.chi;
    j["q"] = r.inv.q;
    j["map_degree"] = r.map_degree;
    j["image_degree"] = r.image_degree;
    j["bpf"] = r.bpf;
    j["fixed_part"] = fixed_part_string(r);
    if (r.node_count)
        j["nodes"] = *r.node_count;
    else
        j["nodes"] = nullptr;
    j["assumptions"] = r.assumptions;
    return j;
}

std::string dump(const json& j, int indent) { return indent < 0 ? j.dump() : j.dump(indent); }

}  // namespace

std::string fixed_part_string(const FamilyReport& r) {
    if (r.fixed.fixed_class.is_zero()) return "0";
    return "(1/2)f*(" + to_string(r.fixed.fixed_class) + ")";
}

std::string report_json(const FamilyReport& r, int indent) {
    return dump(report_to_json_object(r), indent);
}

std::string table_json(const std::vector<FamilyReport>& rows, int indent) {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(report_to_json_object(r));
    return dump(arr, indent);
}

std::string report_csv_row(const FamilyReport& r) {
    std::ostringstream out;
    out << r.family_id << ',' << r.inv.k2 << ',' << r.inv.pg << ',' << r.inv.q << ','
        << (r.bpf ? "yes" : "no") << ',' << r.image_degree;
    return out.str();
}

std::string table_csv(const std::vector<FamilyReport>& rows) {
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const auto& r : rows) out << report_csv_row(r) << '\n';
    return out.str();
}

std::string report_text(const FamilyReport& r) {
    std::ostringstream out;
    out << "family " << r.family_id << " (n = " << r.n;
    if (r.n_internal != r.n) out << ", construction parameter " << r.n_internal;
    out << ")\n";
    out << "  K^2: " << r.inv.k2 << "\n";
    out << "  pg: " << r.inv.pg << "\n";
    out << "  chi(O): " << r.inv.chi << "\n";
    out << "  q: " << r.inv.q << "\n";
    out << "  2K pull class: " << to_string(r.inv.two_k_pullclass) << "\n";
    out << "  map degree: " << r.map_degree << "\n";
    out << "  image degree: " << r.image_degree << "\n";
    out << "  base point free: " << (r.bpf ? "yes" : "no") << "\n";
    out << "  minimal: " << (r.minimality.ok ? "yes" : ("no (fails on " + r.minimality.witness + ")"))
        << "\n";

    out << "  branch divisors:\n";
    for (std::size_t i = 0; i < r.cover.branch.d.size(); ++i)
        out << "    D" << (i + 1) << " = " << to_string(r.cover.branch.d[i]) << "\n";
    out << "  building data:\n";
    for (int chi : table_character_order(r.cover.branch.m))
        out << "    L(" << bits_label(r.cover.branch.m, chi) << ") = " << to_string(r.cover.l[chi - 1])
            << "\n";

    out << "  tower: double covers on 2L(";
    for (std::size_t s = 0; s < r.tower.steps.size(); ++s) {
        if (s) out << "), 2L(";
        out << bits_label(r.cover.branch.m, r.tower.steps[s].chi_index);
    }
    out << ")\n";
    out << "  moving class (base expression): " << to_string(r.moving_class) << "\n";
    if (r.node_count) out << "  nodes: " << *r.node_count << "\n";
    out << "  fixed part: " << fixed_part_string(r);
    if (!r.fixed.fixed_curves.empty()) {
        out << "  [";
        for (std::size_t i = 0; i < r.fixed.fixed_curves.size(); ++i) {
            const auto& c = r.fixed.fixed_curves[i];
            if (i) out << "; ";
            out << "self-intersection " << c.self_int << ", genus " << c.genus;
        }
        out << "]";
    }
    out << "\n";
    out << "  h0(K): " << r.fixed.h0_canonical << ", h0(moving part): " << r.fixed.h0_moving << "\n";
    if (r.contraction)
        out << "  contraction: " << r.contraction->count << " (-1)-curves over "
            << to_string(r.contraction->curve) << "\n";
    out << "  assumptions:";
    for (const auto& a : r.assumptions) out << " " << a;
    out << "\n";
    return out.str();
}

std::string table_text(const std::vector<FamilyReport>& rows) {
    std::ostringstream out;
    out << std::left << std::setw(8) << "family" << std::setw(10) << "K2" << std::setw(8) << "pg"
        << std::setw(4) << "q" << std::setw(5) << "bpf" << "image_degree\n";
    for (const auto& r : rows)
        out << std::left << std::setw(8) << r.family_id << std::setw(10) << r.inv.k2 << std::setw(8)
            << r.inv.pg << std::setw(4) << r.inv.q << std::setw(5) << (r.bpf ? "yes" : "no")
            << r.image_degree << "\n";
    return out.str();
}

std::string point_string(const std::vector<Int>& k) {
    std::string s = "(";
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(k[i]);
    }
    return s + ")";
}

std::string scan_text(const std::vector<ScanCandidate>& candidates) {
    std::ostringstream out;
    for (const auto& c : candidates) {
        out << (c.point ? point_string(*c.point) : std::string("(base)"));
        if (!c.ok) {
            out << "  FAILED: " << c.failure << "\n";
            continue;
        }
        out << "  K2=" << c.inv.k2 << " pg=" << c.inv.pg << " q=" << c.inv.q
            << " minimal=" << (c.minimal ? "yes" : "no");
        if (!c.minimal) out << " (fails on " << c.minimality_witness << ")";
        out << "\n";
    }
    return out.str();
}

std::string scan_json(const std::vector<ScanCandidate>& candidates, int indent) {
    json arr = json::array();
    for (const auto& c : candidates) {
        json j;
        if (c.point)
            j["point"] = *c.point;
        else
            j["point"] = nullptr;
        j["ok"] = c.ok;
        if (c.ok) {
            j["K2"] = c.inv.k2;
            j["pg"] = c.inv.pg;
            j["q"] = c.inv.q;
            j["minimal"] = c.minimal;
            if (!c.minimal) j["minimality_witness"] = c.minimality_witness;
            j["assumptions"] = c.assumptions;
        } else {
            j["failure"] = c.failure;
        }
        arr.push_back(std::move(j));
    }
    return dump(arr, indent);
}

}  // namespace canon8
