#include "circulant/matching.hpp"

#include <algorithm>

#include "circulant/bitset.hpp"
#include "circulant/parallel.hpp"

namespace circulant {

namespace {

/// Exact maximum independent set by branch and bound: branch on the vertex
/// of maximum degree inside the candidate set (smallest index on ties),
/// prune with a greedy clique-cover bound. Deterministic.
class MaxIndependentSet {
  public:
    explicit MaxIndependentSet(std::vector<Bitset> adj) : adj_(std::move(adj)), n_(adj_.size()) {}

    std::vector<int> solve() {
        Bitset all(n_);
        for (std::size_t v = 0; v < n_; ++v) all.set(v);
        best_.clear();
        current_.clear();
        expand(all);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

  private:
    void expand(const Bitset& candidates) {
        if (!candidates.any()) {
            if (current_.size() > best_.size()) best_ = current_;
            return;
        }
        if (current_.size() + clique_cover_bound(candidates) <= best_.size()) return;

        std::size_t branch = n_;
        std::size_t branch_deg = 0;
        for (std::size_t v = candidates.next_set(0); v < n_; v = candidates.next_set(v + 1)) {
            const std::size_t deg = adj_[v].count_and(candidates);
            if (branch == n_ || deg > branch_deg) {
                branch = v;
                branch_deg = deg;
            }
        }

        Bitset included = candidates;
        included.reset(branch);
        included.and_not(adj_[branch]);
        current_.push_back(static_cast<int>(branch));
        expand(included);
        current_.pop_back();

        Bitset excluded = candidates;
        excluded.reset(branch);
        expand(excluded);
    }

    /// Partition the candidates greedily into cliques; an independent set
    /// meets each clique at most once.
    std::size_t clique_cover_bound(const Bitset& candidates) const {
        std::vector<Bitset> clique_common;  // vertices adjacent to every member
        for (std::size_t v = candidates.next_set(0); v < n_; v = candidates.next_set(v + 1)) {
            bool placed = false;
            for (auto& common : clique_common)
                if (common.test(v)) {
                    common &= adj_[v];
                    placed = true;
                    break;
                }
            if (!placed) clique_common.push_back(adj_[v]);
        }
        return clique_common.size();
    }

    std::vector<Bitset> adj_;
    std::size_t n_;
    std::vector<int> best_;
    std::vector<int> current_;
};

bool edges_conflict(int n, const std::vector<Bitset>& vertex_adj, Edge e, Edge f) {
    if (e.first == f.first || e.first == f.second || e.second == f.first ||
        e.second == f.second)
        return true;
    (void)n;
    for (int u : {e.first, e.second})
        for (int v : {f.first, f.second})
            if (vertex_adj[static_cast<std::size_t>(u)].test(static_cast<std::size_t>(v)))
                return true;
    return false;
}

}  // namespace

bool are_2_adjacent(const CirculantGraph& g, Edge e, Edge f) {
    e = make_edge(e.first, e.second);
    f = make_edge(f.first, f.second);
    if (e == f) return false;
    for (int u : {e.first, e.second})
        for (int v : {f.first, f.second})
            if (g.is_edge(u, v)) return true;
    return false;
}

bool is_induced_matching(const CirculantGraph& g, const std::vector<Edge>& edges) {
    for (const Edge& e : edges)
        if (!g.is_edge(e.first, e.second)) return false;
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const Edge &e = edges[i], &f = edges[j];
            if (e.first == f.first || e.first == f.second || e.second == f.first ||
                e.second == f.second)
                return false;
            if (are_2_adjacent(g, e, f)) return false;
        }
    return true;
}

std::vector<int> compute_A(const CirculantGraph& g, ARule rule) {
    if (g.connection_set().empty())
        throw std::invalid_argument("compute_A requires a non-empty connection set");
    const int n = g.vertex_count();
    const int r = g.connection_set().front();
    std::vector<int> a_set;
    for (int a : g.connection_set()) {
        const int label = (r + a) % n;
        const bool in_s = rule == ARule::literal
                              ? std::binary_search(g.connection_set().begin(),
                                                   g.connection_set().end(), label)
                              : g.contains_distance(labelling_distance(n, label, 0));
        if (!in_s) a_set.push_back(label);
    }
    std::sort(a_set.begin(), a_set.end());
    a_set.erase(std::unique(a_set.begin(), a_set.end()), a_set.end());
    return a_set;
}

MatchingReport induced_matching_formula(const CirculantGraph& g, ARule rule) {
    if (g.connection_set().empty())
        throw std::invalid_argument("induced matching formula requires a non-empty connection set");
    const int n = g.vertex_count();
    const int d = component_count(g);
    if (d > 1) {
        auto decomposition = components(g);
        auto inner = induced_matching_formula(decomposition.quotient, rule);
        MatchingReport report;
        report.r = inner.r;
        report.s = inner.s;
        report.a_set = inner.a_set;
        report.t = inner.t;
        report.components_factor = d;
        report.nu_formula = static_cast<long long>(d) * inner.nu_formula;
        report.quotient = std::make_shared<const MatchingReport>(std::move(inner));
        return report;
    }

    MatchingReport report;
    report.r = g.connection_set().front();
    report.s = static_cast<int>(g.connection_set().size());
    report.a_set = compute_A(g, rule);
    const long long s = report.s;
    const long long a = static_cast<long long>(report.a_set.size());
    report.t = s * s + (a + 1) * s;
    if (n % 2 == 0 && g.contains_distance(n / 2)) report.t -= 2;
    report.nu_formula = edge_count(g) / report.t;
    return report;
}

long long power_cycle_formula(int n, int d) {
    if (d < 1 || d >= n / 2)
        throw std::invalid_argument("power_cycle_formula requires 1 <= d < floor(n/2)");
    return n / (d + 2);
}

InducedMatching max_induced_matching(int vertex_count, const std::vector<Edge>& edges) {
    std::vector<Bitset> vertex_adj(static_cast<std::size_t>(vertex_count),
                                   Bitset(static_cast<std::size_t>(vertex_count)));
    std::vector<Edge> sorted = edges;
    for (Edge& e : sorted) e = make_edge(e.first, e.second);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (auto [u, v] : sorted) {
        vertex_adj[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
        vertex_adj[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
    }

    const std::size_t m = sorted.size();
    std::vector<Bitset> conflict(m, Bitset(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (edges_conflict(vertex_count, vertex_adj, sorted[i], sorted[j])) {
                conflict[i].set(j);
                conflict[j].set(i);
            }

    MaxIndependentSet solver(std::move(conflict));
    auto chosen = solver.solve();
    InducedMatching result;
    result.size = static_cast<long long>(chosen.size());
    for (int idx : chosen) result.edges.push_back(sorted[static_cast<std::size_t>(idx)]);
    std::sort(result.edges.begin(), result.edges.end());
    return result;
}

InducedMatching induced_matching_oracle(const CirculantGraph& g, OracleOptions opts) {
    if (g.vertex_count() > opts.max_n)
        throw SizeBoundError("induced matching oracle limited to n <= " +
                             std::to_string(opts.max_n) + " (got n = " +
                             std::to_string(g.vertex_count()) + ")");
    if (g.connection_set().empty()) return {};

    const int d = component_count(g);
    if (d > 1 && !opts.full_graph) {
        // Components are disjoint isomorphic copies of the quotient: solve it
        // once and replicate the witness across cosets.
        auto decomposition = components(g);
        auto inner = induced_matching_oracle(decomposition.quotient, opts);
        InducedMatching result;
        result.size = static_cast<long long>(d) * inner.size;
        for (int c = 0; c < d; ++c)
            for (const Edge& e : inner.edges)
                result.edges.push_back(make_edge(c + e.first * d, c + e.second * d));
        std::sort(result.edges.begin(), result.edges.end());
        return result;
    }
    return max_induced_matching(g.vertex_count(), edge_list(g));
}

std::vector<MatchingAuditRow> matching_audit(int max_n, AuditMode mode, AuditOptions opts) {
    std::vector<std::pair<int, std::vector<int>>> instances;
    for (int n = std::max(2, opts.min_n); n <= max_n; ++n) {
        const int half = n / 2;
        if (mode == AuditMode::cycle_powers) {
            for (int d = 1; d < half; ++d) {
                std::vector<int> set(static_cast<std::size_t>(d));
                for (int i = 0; i < d; ++i) set[static_cast<std::size_t>(i)] = i + 1;
                instances.emplace_back(n, std::move(set));
            }
        } else {
            for (unsigned mask = 1; mask < (1u << half); ++mask) {
                std::vector<int> set;
                for (int b = 0; b < half; ++b)
                    if (mask & (1u << b)) set.push_back(b + 1);
                instances.emplace_back(n, std::move(set));
            }
        }
    }

    std::vector<MatchingAuditRow> rows(instances.size());
    parallel_for(instances.size(), opts.jobs, [&](std::size_t i) {
        const auto& [n, set] = instances[i];
        CirculantGraph g(n, set);
        MatchingAuditRow row;
        row.n = n;
        row.set = set;
        row.nu_formula = induced_matching_formula(g, opts.rule).nu_formula;
        if (n <= opts.oracle_max_n) {
            row.nu_oracle = induced_matching_oracle(g, {opts.oracle_max_n, false}).size;
            row.agree = (*row.nu_oracle == row.nu_formula);
        }
        rows[i] = std::move(row);
    });
    return rows;
}

}  // namespace circulant
