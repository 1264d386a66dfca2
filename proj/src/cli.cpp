#include "canon8/cli.hpp"

#include <ostream>

#include <CLI11.hpp>

#include "canon8/emit.hpp"
#include "canon8/verify.hpp"

namespace canon8 {

namespace {

constexpr Int kMaxN = 1'000'000;

bool parse_range(const std::string& text, Int& lo, Int& hi) {
    const auto pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            lo = hi = std::stoll(text);
        } else {
            lo = std::stoll(text.substr(0, pos));
            hi = std::stoll(text.substr(pos + 2));
        }
    } catch (const std::exception&) {
        return false;
    }
    return lo >= 2 && lo <= hi && hi <= kMaxN;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact divisor-class engine for the nine degree-8 canonical families"};
    app.require_subcommand(1);

    int family_id = 0;
    Int n = 0;
    std::string format = "text";
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "text, json or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };

    CLI::App* cmd_family = app.add_subcommand("family", "report on one family");
    cmd_family->add_option("--id", family_id, "family id, 1..9")->required();
    cmd_family->add_option("--n", n, "family parameter, >= 2")->required();
    add_format(cmd_family);

    CLI::App* cmd_table = app.add_subcommand("table", "all nine families at one n");
    cmd_table->add_option("--n", n, "family parameter, >= 2")->required();
    add_format(cmd_table);

    std::string n_range = "2..10";
    CLI::App* cmd_verify = app.add_subcommand("verify", "run the verification suite");
    cmd_verify->add_option("--n-range", n_range, "A..B with 2 <= A <= B");

    Int max_mult = 2;
    bool allow_exceptional = false;
    int base = 1;
    CLI::App* cmd_search = app.add_subcommand("search", "enumerate valid points and scan them");
    cmd_search->add_option("--n", n, "family parameter, >= 2")->required();
    cmd_search->add_option("--max-mult", max_mult, "largest multiplicity entry (<= 4)");
    cmd_search->add_flag("--allow-exceptional", allow_exceptional, "permit -1 entries");
    cmd_search->add_option("--base", base, "base construction, 1 or 2")->check(CLI::IsMember({1, 2}));
    add_format(cmd_search);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_family->parsed() || cmd_table->parsed() || cmd_search->parsed()) {
            if (n < 2 || n > kMaxN) {
                err << "error: --n must be in 2.." << kMaxN << "\n";
                return 2;
            }
        }

        if (cmd_family->parsed()) {
            if (family_id < 1 || family_id > 9) {
                err << "error: --id must be in 1..9\n";
                return 2;
            }
            FamilyReport r = build_family(family_id, n);
            if (format == "json")
                out << report_json(r, 2) << "\n";
            else if (format == "csv")
                out << kCsvHeader << "\n" << report_csv_row(r) << "\n";
            else
                out << report_text(r);
            return 0;
        }

        if (cmd_table->parsed()) {
            const auto rows = family_table(n);
            if (format == "json")
                out << table_json(rows, 2) << "\n";
            else if (format == "csv")
                out << table_csv(rows);
            else
                out << table_text(rows);
            return 0;
        }

        if (cmd_verify->parsed()) {
            VerifyOptions opts;
            if (!parse_range(n_range, opts.n_lo, opts.n_hi)) {
                err << "error: --n-range must be A..B with 2 <= A <= B <= " << kMaxN << "\n";
                return 2;
            }
            const VerifySummary summary = run_verification(opts);
            out << summary_text(summary);
            return summary.all_passed() ? 0 : 1;
        }

        if (cmd_search->parsed()) {
            if (max_mult < 0 || max_mult > 4) {
                err << "error: --max-mult must be in 0..4\n";
                return 2;
            }
            if (format == "csv") {
                err << "error: search output is text or json\n";
                return 2;
            }
            const auto points =
                enumerate_point_types(allow_exceptional ? -1 : 0, max_mult, allow_exceptional);
            const auto candidates = scan_configs(base, n, points);
            if (format == "json")
                out << scan_json(candidates, 2) << "\n";
            else
                out << scan_text(candidates);
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace canon8
