#include "circulant/reports.hpp"

#include <sstream>

#include <json.hpp>

#include "circulant/parallel.hpp"

namespace circulant {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string join(const std::vector<int>& values, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

ordered_json witness_json(const CycleWitness& w) {
    ordered_json j;
    j["vertices"] = w.vertices;
    j["strategy"] = strategy_name(w.strategy);
    return j;
}

std::string align_columns(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c >= width.size()) width.resize(c + 1, 0);
            width[c] = std::max(width[c], row[c].size());
        }
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += "  ";
            out += row[c];
            if (c + 1 < row.size()) out.append(width[c] - row[c].size(), ' ');
        }
        out += '\n';
    }
    return out;
}

}  // namespace

std::string set_to_string(const std::vector<int>& set) { return join(set, "+"); }

std::string graph_name(int n, const std::vector<int>& set) {
    return "C" + std::to_string(n) + "(" + set_to_string(set) + ")";
}

AnalyzeResult analyze(const CirculantGraph& g, const AnalyzeOptions& opts) {
    AnalyzeResult r;
    r.n = g.vertex_count();
    r.set = g.connection_set();
    r.component_count = component_count(g);
    r.connected = r.component_count == 1;
    r.chordal_structural = is_chordal_structural(g);
    r.chordal_oracle = is_chordal_oracle(g);
    if (r.chordal_structural != r.chordal_oracle)
        throw InternalError("structural chordality test disagrees with the oracle on " +
                            graph_name(r.n, r.set));

    // Edgeless graphs sit outside the formula's precondition; by convention
    // they get nu = 0.
    r.nu_formula = g.connection_set().empty()
                       ? 0
                       : induced_matching_formula(g, opts.rule).nu_formula;

    if (opts.witness && !r.chordal_oracle) {
        auto w = find_chordless_cycle(g);
        if (!w) throw InternalError("non-chordal graph yielded no witness");
        if (!validate_witness(g, *w))
            throw InternalError("emitted witness failed re-validation on " +
                                graph_name(r.n, r.set));
        r.witness = std::move(w);
    }
    if (opts.oracle)
        r.nu_oracle = induced_matching_oracle(g, {opts.oracle_max_n, false}).size;
    if (opts.reg) {
        HochsterOptions hopts;
        hopts.max_n = opts.reg_max_n;
        hopts.use_symmetry = true;
        hopts.jobs = opts.jobs;
        r.regularity = regularity(g, opts.field_char, hopts);
        r.field_char = opts.field_char;
    }
    return r;
}

std::vector<TableRow> reproduction_table(int max_n, const TableOptions& opts) {
    std::vector<TableRow> rows;
    for (int n = 6; n <= max_n; ++n)
        for (int d = 1; d < n / 2; ++d) rows.push_back({n, d, 0, {}, {}});

    parallel_for(rows.size(), opts.jobs, [&](std::size_t i) {
        TableRow& row = rows[i];
        std::vector<int> set(static_cast<std::size_t>(row.d));
        for (int k = 0; k < row.d; ++k) set[static_cast<std::size_t>(k)] = k + 1;
        CirculantGraph g(row.n, set);
        row.nu_formula = induced_matching_formula(g).nu_formula;
        if (opts.oracle) row.nu_oracle = induced_matching_oracle(g, {opts.oracle_max_n, false}).size;
        if (opts.reg) {
            HochsterOptions hopts;
            hopts.max_n = opts.reg_max_n;
            hopts.use_symmetry = true;
            row.reg = regularity(g, opts.field_char, hopts);
        }
    });
    return rows;
}

std::vector<ChordalityAuditRow> chordality_audit(int max_n, int min_n, int jobs) {
    std::vector<ChordalityAuditRow> rows;
    for (int n = std::max(2, min_n); n <= max_n; ++n) {
        const int half = n / 2;
        for (unsigned mask = 0; mask < (1u << half); ++mask) {
            ChordalityAuditRow row;
            row.n = n;
            for (int b = 0; b < half; ++b)
                if (mask & (1u << b)) row.set.push_back(b + 1);
            rows.push_back(std::move(row));
        }
    }
    parallel_for(rows.size(), jobs, [&](std::size_t i) {
        ChordalityAuditRow& row = rows[i];
        CirculantGraph g(row.n, row.set);
        row.structural = is_chordal_structural(g);
        row.oracle = is_chordal_oracle(g);
        row.agree = row.structural == row.oracle;
    });
    return rows;
}

std::string render_analyze(const AnalyzeResult& r, OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        ordered_json j;
        j["n"] = r.n;
        j["S"] = r.set;
        j["connected"] = r.connected;
        j["component_count"] = r.component_count;
        j["chordal_structural"] = r.chordal_structural;
        j["chordal_oracle"] = r.chordal_oracle;
        if (r.witness) j["witness"] = witness_json(*r.witness);
        j["nu_formula"] = r.nu_formula;
        if (r.nu_oracle) j["nu_oracle"] = *r.nu_oracle;
        if (r.regularity) j["regularity"] = *r.regularity;
        if (r.field_char) j["field_char"] = *r.field_char;
        return j.dump(2) + "\n";
    }
    if (fmt == OutputFormat::csv) {
        std::string out =
            "n,S,connected,component_count,chordal_structural,chordal_oracle,witness,"
            "witness_strategy,nu_formula,nu_oracle,regularity,field_char\n";
        out += std::to_string(r.n) + "," + set_to_string(r.set) + "," + bool_str(r.connected) +
               "," + std::to_string(r.component_count) + "," + bool_str(r.chordal_structural) +
               "," + bool_str(r.chordal_oracle) + ",";
        out += r.witness ? join(r.witness->vertices, "+") : "";
        out += ",";
        out += r.witness ? strategy_name(r.witness->strategy) : "";
        out += "," + std::to_string(r.nu_formula) + ",";
        out += r.nu_oracle ? std::to_string(*r.nu_oracle) : "";
        out += ",";
        out += r.regularity ? std::to_string(*r.regularity) : "";
        out += ",";
        out += r.field_char ? std::to_string(*r.field_char) : "";
        out += "\n";
        return out;
    }
    std::ostringstream out;
    out << "graph: " << graph_name(r.n, r.set) << "\n";
    out << "connected: " << bool_str(r.connected) << " (" << r.component_count
        << " component" << (r.component_count == 1 ? "" : "s") << ")\n";
    out << "chordal_structural: " << bool_str(r.chordal_structural) << "\n";
    out << "chordal_oracle: " << bool_str(r.chordal_oracle) << "\n";
    if (r.witness)
        out << "witness: " << join(r.witness->vertices, " ") << "  ["
            << strategy_name(r.witness->strategy) << "]\n";
    out << "nu_formula: " << r.nu_formula << "\n";
    if (r.nu_oracle) out << "nu_oracle: " << *r.nu_oracle << "\n";
    if (r.regularity)
        out << "regularity: " << *r.regularity << " (char " << *r.field_char << ")\n";
    return out.str();
}

std::string render_table(const std::vector<TableRow>& rows, OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        ordered_json j;
        j["rows"] = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json item;
            std::vector<int> set(static_cast<std::size_t>(row.d));
            for (int k = 0; k < row.d; ++k) set[static_cast<std::size_t>(k)] = k + 1;
            item["graph"] = graph_name(row.n, set);
            item["n"] = row.n;
            item["d"] = row.d;
            item["nu_formula"] = row.nu_formula;
            if (row.nu_oracle) item["nu_oracle"] = *row.nu_oracle;
            if (row.reg) item["reg"] = *row.reg;
            j["rows"].push_back(std::move(item));
        }
        j["summary"] = {{"rows", rows.size()}};
        return j.dump(2) + "\n";
    }
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"graph", "nu_formula", "nu_oracle", "reg"});
    for (const auto& row : rows) {
        std::vector<int> set(static_cast<std::size_t>(row.d));
        for (int k = 0; k < row.d; ++k) set[static_cast<std::size_t>(k)] = k + 1;
        cells.push_back({graph_name(row.n, set), std::to_string(row.nu_formula),
                         row.nu_oracle ? std::to_string(*row.nu_oracle) : "",
                         row.reg ? std::to_string(*row.reg) : ""});
    }
    if (fmt == OutputFormat::csv) {
        std::string out;
        for (const auto& row : cells) {
            for (std::size_t c = 0; c < row.size(); ++c) out += (c ? "," : "") + row[c];
            out += '\n';
        }
        return out;
    }
    return align_columns(cells);
}

std::string render_matching_audit(const std::vector<MatchingAuditRow>& rows, OutputFormat fmt) {
    std::size_t disagreements = 0, skipped = 0;
    for (const auto& row : rows) {
        if (!row.nu_oracle)
            ++skipped;
        else if (!row.agree)
            ++disagreements;
    }
    if (fmt == OutputFormat::json) {
        ordered_json j;
        j["rows"] = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json item;
            item["n"] = row.n;
            item["S"] = row.set;
            item["nu_formula"] = row.nu_formula;
            if (row.nu_oracle) {
                item["nu_oracle"] = *row.nu_oracle;
                item["agree"] = row.agree;
            } else {
                item["nu_oracle"] = nullptr;
                item["agree"] = "skipped";
            }
            j["rows"].push_back(std::move(item));
        }
        j["summary"] = {{"rows", rows.size()},
                        {"disagreements", disagreements},
                        {"skipped", skipped}};
        return j.dump(2) + "\n";
    }
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"n", "S", "nu_formula", "nu_oracle", "agree"});
    for (const auto& row : rows)
        cells.push_back({std::to_string(row.n), set_to_string(row.set),
                         std::to_string(row.nu_formula),
                         row.nu_oracle ? std::to_string(*row.nu_oracle) : "skipped",
                         row.nu_oracle ? bool_str(row.agree) : "skipped"});
    if (fmt == OutputFormat::csv) {
        std::string out;
        for (const auto& row : cells) {
            for (std::size_t c = 0; c < row.size(); ++c) out += (c ? "," : "") + row[c];
            out += '\n';
        }
        return out;
    }
    std::string out = align_columns(cells);
    out += "summary: " + std::to_string(rows.size()) + " rows, " +
           std::to_string(disagreements) + " disagreements, " + std::to_string(skipped) +
           " skipped\n";
    return out;
}

std::string render_chordality_audit(const std::vector<ChordalityAuditRow>& rows,
                                    OutputFormat fmt) {
    std::size_t disagreements = 0;
    for (const auto& row : rows)
        if (!row.agree) ++disagreements;
    if (fmt == OutputFormat::json) {
        ordered_json j;
        j["rows"] = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json item;
            item["n"] = row.n;
            item["S"] = row.set;
            item["structural"] = row.structural;
            item["oracle"] = row.oracle;
            item["agree"] = row.agree;
            j["rows"].push_back(std::move(item));
        }
        j["summary"] = {{"rows", rows.size()}, {"disagreements", disagreements}};
        return j.dump(2) + "\n";
    }
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"n", "S", "structural", "oracle", "agree"});
    for (const auto& row : rows)
        cells.push_back({std::to_string(row.n), set_to_string(row.set),
                         bool_str(row.structural), bool_str(row.oracle), bool_str(row.agree)});
    if (fmt == OutputFormat::csv) {
        std::string out;
        for (const auto& row : cells) {
            for (std::size_t c = 0; c < row.size(); ++c) out += (c ? "," : "") + row[c];
            out += '\n';
        }
        return out;
    }
    std::string out = align_columns(cells);
    out += "summary: " + std::to_string(rows.size()) + " rows, " +
           std::to_string(disagreements) + " disagreements\n";
    return out;
}

std::string render_betti(const BettiTable& table, OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        ordered_json j;
        j["characteristic"] = table.characteristic;
        j["entries"] = ordered_json::array();
        for (const auto& [key, value] : table.entries) {
            ordered_json item;
            item["i"] = key.first;
            item["j"] = key.second;
            item["beta"] = value;
            j["entries"].push_back(std::move(item));
        }
        j["regularity"] = table.regularity;
        return j.dump(2) + "\n";
    }
    if (fmt == OutputFormat::csv) {
        std::string out = "i,j,beta\n";
        for (const auto& [key, value] : table.entries)
            out += std::to_string(key.first) + "," + std::to_string(key.second) + "," +
                   std::to_string(value) + "\n";
        out += "regularity,," + std::to_string(table.regularity) + "\n";
        return out;
    }
    std::ostringstream out;
    out << "characteristic: " << table.characteristic << "\n";
    for (const auto& [key, value] : table.entries)
        out << "beta(" << key.first << "," << key.second << ") = " << value << "\n";
    out << "regularity: " << table.regularity << "\n";
    return out.str();
}

}  // namespace circulant
