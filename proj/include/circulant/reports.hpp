#pragma once

#include <optional>
#include <string>
#include <vector>

#include "circulant/chordal.hpp"
#include "circulant/core.hpp"
#include "circulant/matching.hpp"
#include "circulant/regularity.hpp"

namespace circulant {

enum class OutputFormat { text, json, csv };

/// Connection sets render as "2+3+4+7" in machine formats (comma-free).
std::string set_to_string(const std::vector<int>& set);
std::string graph_name(int n, const std::vector<int>& set);

struct AnalyzeOptions {
    bool witness = false;
    bool oracle = false;
    bool reg = false;
    int field_char = 2;
    int oracle_max_n = 20;
    int reg_max_n = 16;
    int jobs = 1;
    ARule rule = ARule::literal;
};

struct AnalyzeResult {
    int n = 0;
    std::vector<int> set;
    bool connected = false;
    int component_count = 0;
    bool chordal_structural = false;
    bool chordal_oracle = false;
    std::optional<CycleWitness> witness;
    long long nu_formula = 0;
    std::optional<long long> nu_oracle;
    std::optional<int> regularity;
    std::optional<int> field_char;
};

/// Full single-graph report. The chordality oracle and structural test are
/// always both run and must agree; emitted witnesses are re-validated.
/// Throws InternalError if either check fails.
AnalyzeResult analyze(const CirculantGraph& g, const AnalyzeOptions& opts);

struct TableOptions {
    bool oracle = false;
    bool reg = false;
    int field_char = 2;
    int oracle_max_n = 20;
    int reg_max_n = 16;
    int jobs = 1;
};

struct TableRow {
    int n = 0;
    int d = 0;  // S = {1..d}
    long long nu_formula = 0;
    std::optional<long long> nu_oracle;
    std::optional<int> reg;
};

/// One row per cycle power C_n(1..d), 6 <= n <= max_n, 1 <= d < floor(n/2).
std::vector<TableRow> reproduction_table(int max_n, const TableOptions& opts);

struct ChordalityAuditRow {
    int n = 0;
    std::vector<int> set;
    bool structural = false;
    bool oracle = false;
    bool agree = false;
};

/// Structural-vs-oracle chordality sweep over every S (including empty).
std::vector<ChordalityAuditRow> chordality_audit(int max_n, int min_n = 2, int jobs = 1);

std::string render_analyze(const AnalyzeResult& r, OutputFormat fmt);
std::string render_table(const std::vector<TableRow>& rows, OutputFormat fmt);
std::string render_matching_audit(const std::vector<MatchingAuditRow>& rows, OutputFormat fmt);
std::string render_chordality_audit(const std::vector<ChordalityAuditRow>& rows,
                                    OutputFormat fmt);
std::string render_betti(const BettiTable& table, OutputFormat fmt);

}  // namespace circulant
