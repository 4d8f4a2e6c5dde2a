#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "circulant/core.hpp"

namespace circulant {

/// Two distinct edges are 2-adjacent when an endpoint of one is adjacent to
/// an endpoint of the other.
bool are_2_adjacent(const CirculantGraph& g, Edge e, Edge f);

/// True iff the edges are pairwise vertex-disjoint and no two are
/// 2-adjacent: the defining predicate of an induced matching.
bool is_induced_matching(const CirculantGraph& g, const std::vector<Edge>& edges);

/// How the membership test "r+a in V(G) \ S" is read when building A.
/// `literal` treats S as a subset of vertex labels (the default);
/// `folded` first folds r+a into a labelling distance.
enum class ARule { literal, folded };

/// A = {(r+a) mod n : a in S, (r+a) mod n not in S}, r = min S. Sorted.
std::vector<int> compute_A(const CirculantGraph& g, ARule rule = ARule::literal);

struct MatchingReport {
    int r = 0;               // min S
    int s = 0;               // |S|
    std::vector<int> a_set;  // the set A
    long long t = 0;         // s^2 + (|A|+1)s, minus 2 when n/2 in S
    long long nu_formula = 0;
    int components_factor = 1;  // d = gcd(n, S)
    std::optional<long long> nu_oracle;
    std::optional<std::vector<Edge>> witness;
    std::shared_ptr<const MatchingReport> quotient;  // set when d > 1
};

/// Closed-formula induced matching number: floor(|E|/t) for connected G,
/// d times the quotient value otherwise. Requires S non-empty.
MatchingReport induced_matching_formula(const CirculantGraph& g, ARule rule = ARule::literal);

/// floor(n / (d+2)), the closed form for the d-th power of a cycle.
/// Requires 1 <= d < floor(n/2).
long long power_cycle_formula(int n, int d);

struct OracleOptions {
    int max_n = 20;          // refuse larger instances
    bool full_graph = false; // skip the component decomposition
};

struct InducedMatching {
    long long size = 0;
    std::vector<Edge> edges;  // one optimal witness, sorted
};

/// Exact maximum induced matching, computed as a maximum independent set of
/// the conflict graph (edges of G, adjacency = shares a vertex or
/// 2-adjacent) by branch and bound. Throws SizeBoundError beyond max_n.
InducedMatching induced_matching_oracle(const CirculantGraph& g, OracleOptions opts = {});

/// Exact maximum induced matching of an arbitrary simple graph, same
/// algorithm; exposed for cross-checks on relabelled graphs.
InducedMatching max_induced_matching(int vertex_count, const std::vector<Edge>& edges);

enum class AuditMode { all_sets, cycle_powers };

struct MatchingAuditRow {
    int n = 0;
    std::vector<int> set;
    long long nu_formula = 0;
    std::optional<long long> nu_oracle;  // empty = skipped (instance too large)
    bool agree = true;                   // meaningful only when the oracle ran
};

struct AuditOptions {
    int min_n = 2;
    int oracle_max_n = 20;
    ARule rule = ARule::literal;
    int jobs = 1;
};

/// Formula-vs-oracle sweep; rows sorted by (n, S). Disagreements are data,
/// not errors.
std::vector<MatchingAuditRow> matching_audit(int max_n, AuditMode mode, AuditOptions opts = {});

}  // namespace circulant
