#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "circulant/reports.hpp"

namespace {

using namespace circulant;

/// Comma-separated labelling distances, ranges allowed: "1,4-6,9".
std::vector<int> parse_set(const std::string& spec) {
    std::vector<int> out;
    if (spec.empty()) return out;
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) {
        const auto dash = token.find('-');
        if (dash == std::string::npos) {
            out.push_back(std::stoi(token));
        } else {
            const int lo = std::stoi(token.substr(0, dash));
            const int hi = std::stoi(token.substr(dash + 1));
            if (hi < lo) throw std::invalid_argument("descending range in --set: " + token);
            for (int v = lo; v <= hi; ++v) out.push_back(v);
        }
    }
    return out;
}

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::text;
    if (name == "json") return OutputFormat::json;
    return OutputFormat::csv;
}

struct CommonArgs {
    int n = 0;
    std::string set_spec;
    std::string format = "text";
    int field_char = 2;
    int oracle_bound = 20;
    int reg_bound = 16;
    int jobs = 1;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool needs_graph) {
    if (needs_graph) {
        cmd->add_option("--n", args.n, "number of vertices")->required();
        cmd->add_option("--set", args.set_spec,
                        "connection set: comma-separated distances, ranges allowed (1-4)");
    }
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--char", args.field_char, "coefficient field characteristic (prime)")
        ->capture_default_str();
    cmd->add_option("--oracle-bound", args.oracle_bound,
                    "largest n accepted by the exact matching oracle")
        ->capture_default_str();
    cmd->add_option("--reg-bound", args.reg_bound, "largest n accepted by Betti computations")
        ->capture_default_str();
    cmd->add_option("--jobs", args.jobs, "worker threads (output is order-independent)")
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circulant graph toolkit: chordality with certificates, induced matching "
                 "numbers, and edge-ring Betti tables"};
    app.require_subcommand(1);

    CommonArgs analyze_args, witness_args, table_args, audit_args, betti_args;
    bool analyze_witness = false, analyze_oracle = false, analyze_reg = false;
    bool witness_oracle = false, witness_reg = false;
    bool table_oracle = false, table_reg = false;
    bool folded_a = false, audit_folded_a = false;
    int table_max_n = 15, audit_max_n = 10, audit_min_n = 2;
    std::string audit_mode;
    bool betti_no_symmetry = false;

    auto* analyze_cmd = app.add_subcommand("analyze", "report on one circulant graph");
    add_common(analyze_cmd, analyze_args, true);
    analyze_cmd->add_flag("--witness", analyze_witness, "attach a chordless-cycle certificate");
    analyze_cmd->add_flag("--oracle", analyze_oracle, "run the exact matching oracle");
    analyze_cmd->add_flag("--reg", analyze_reg, "compute the edge-ring regularity");
    analyze_cmd->add_flag("--folded-a", folded_a, "fold r+a into a distance when building A");

    auto* witness_cmd =
        app.add_subcommand("witness", "analyze with the chordless-cycle certificate attached");
    add_common(witness_cmd, witness_args, true);
    witness_cmd->add_flag("--oracle", witness_oracle, "run the exact matching oracle");
    witness_cmd->add_flag("--reg", witness_reg, "compute the edge-ring regularity");

    auto* table_cmd = app.add_subcommand(
        "table", "cycle-power survey: nu and regularity for C_n(1..d), 6 <= n <= max-n");
    add_common(table_cmd, table_args, false);
    table_cmd->add_option("--max-n", table_max_n, "largest n")->required();
    table_cmd->add_flag("--oracle", table_oracle, "add the exact oracle column");
    table_cmd->add_flag("--reg", table_reg, "add the regularity column");

    auto* audit_cmd = app.add_subcommand(
        "audit", "sweep instances and compare independent computations of the same quantity");
    add_common(audit_cmd, audit_args, false);
    audit_cmd->add_option("--max-n", audit_max_n, "largest n")->required();
    audit_cmd->add_option("--min-n", audit_min_n, "smallest n")->capture_default_str();
    audit_cmd->add_option("--mode", audit_mode, "all-sets | cycle-powers | chordality")
        ->required()
        ->check(CLI::IsMember({"all-sets", "cycle-powers", "chordality"}));
    audit_cmd->add_flag("--folded-a", audit_folded_a,
                        "fold r+a into a distance when building A");

    auto* betti_cmd = app.add_subcommand("betti", "graded Betti table of the edge ring");
    add_common(betti_cmd, betti_args, true);
    betti_cmd->add_flag("--full-enumeration", betti_no_symmetry,
                        "enumerate every subset instead of one per rotation orbit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*analyze_cmd || *witness_cmd) {
            const bool is_witness = static_cast<bool>(*witness_cmd);
            CommonArgs& args = is_witness ? witness_args : analyze_args;
            CirculantGraph g(args.n, parse_set(args.set_spec));
            AnalyzeOptions opts;
            opts.witness = is_witness || analyze_witness;
            opts.oracle = is_witness ? witness_oracle : analyze_oracle;
            opts.reg = is_witness ? witness_reg : analyze_reg;
            opts.field_char = args.field_char;
            opts.oracle_max_n = args.oracle_bound;
            opts.reg_max_n = args.reg_bound;
            opts.jobs = args.jobs;
            opts.rule = folded_a ? ARule::folded : ARule::literal;
            std::cout << render_analyze(analyze(g, opts), parse_format(args.format));
        } else if (*table_cmd) {
            if (table_reg && table_max_n > table_args.reg_bound)
                throw SizeBoundError("table --reg limited to max-n <= " +
                                     std::to_string(table_args.reg_bound));
            if (table_oracle && table_max_n > table_args.oracle_bound)
                throw SizeBoundError("table --oracle limited to max-n <= " +
                                     std::to_string(table_args.oracle_bound));
            TableOptions opts;
            opts.oracle = table_oracle;
            opts.reg = table_reg;
            opts.field_char = table_args.field_char;
            opts.oracle_max_n = table_args.oracle_bound;
            opts.reg_max_n = table_args.reg_bound;
            opts.jobs = table_args.jobs;
            std::cout << render_table(reproduction_table(table_max_n, opts),
                                      parse_format(table_args.format));
        } else if (*audit_cmd) {
            const OutputFormat fmt = parse_format(audit_args.format);
            if (audit_mode == "chordality") {
                const auto rows = chordality_audit(audit_max_n, audit_min_n, audit_args.jobs);
                std::cout << render_chordality_audit(rows, fmt);
                if (fmt == OutputFormat::csv) {
                    std::size_t bad = 0;
                    for (const auto& row : rows) bad += row.agree ? 0 : 1;
                    std::cerr << "summary: " << rows.size() << " rows, " << bad
                              << " disagreements\n";
                }
            } else {
                AuditOptions opts;
                opts.min_n = audit_min_n;
                opts.oracle_max_n = audit_args.oracle_bound;
                opts.rule = audit_folded_a ? ARule::folded : ARule::literal;
                opts.jobs = audit_args.jobs;
                const AuditMode mode = audit_mode == "cycle-powers" ? AuditMode::cycle_powers
                                                                    : AuditMode::all_sets;
                const auto rows = matching_audit(audit_max_n, mode, opts);
                std::cout << render_matching_audit(rows, fmt);
                if (fmt == OutputFormat::csv) {
                    std::size_t bad = 0, skipped = 0;
                    for (const auto& row : rows) {
                        if (!row.nu_oracle)
                            ++skipped;
                        else if (!row.agree)
                            ++bad;
                    }
                    std::cerr << "summary: " << rows.size() << " rows, " << bad
                              << " disagreements, " << skipped << " skipped\n";
                }
            }
        } else if (*betti_cmd) {
            CirculantGraph g(betti_args.n, parse_set(betti_args.set_spec));
            HochsterOptions opts;
            opts.max_n = betti_args.reg_bound;
            opts.use_symmetry = !betti_no_symmetry;
            opts.jobs = betti_args.jobs;
            std::cout << render_betti(hochster_betti(g, betti_args.field_char, opts),
                                      parse_format(betti_args.format));
        }
    } catch (const SizeBoundError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
