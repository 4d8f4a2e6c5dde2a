#include "circulant/chordal.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <tuple>

#include "circulant/bitset.hpp"

namespace circulant {

namespace {

long long mod_n(long long x, int n) {
    long long r = x % n;
    return r < 0 ? r + n : r;
}

/// Labelling distance of a residue (or any integer) from 0.
int fold(int n, long long x) {
    long long r = mod_n(x, n);
    return static_cast<int>(std::min(r, n - r));
}

/// Extended Euclid: returns (g, x, y) with a*x + b*y = g, g >= 0.
std::tuple<long long, long long, long long> ext_gcd(long long a, long long b) {
    if (b == 0) return {a, 1, 0};
    auto [g, x, y] = ext_gcd(b, a % b);
    return {g, y, x - (a / b) * y};
}

std::vector<Bitset> adjacency(int n, const std::vector<Edge>& edges) {
    std::vector<Bitset> adj(n, Bitset(static_cast<std::size_t>(n)));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw std::invalid_argument("edge endpoints must be distinct vertices in 0..n-1");
        adj[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
        adj[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
    }
    return adj;
}

/// Generic hole search: for an edge {v,u} and w adjacent to v but outside
/// N[u], a shortest w->u path avoiding N[v]\{u,w} closes an induced cycle
/// through v. Total on non-chordal graphs.
std::optional<CycleWitness> generic_hole(int n, const std::vector<Bitset>& adj) {
    for (int v = 0; v < n; ++v) {
        const auto nv = static_cast<std::size_t>(v);
        for (std::size_t u = adj[nv].next_set(0); u < adj[nv].size(); u = adj[nv].next_set(u + 1)) {
            for (std::size_t w = adj[nv].next_set(0); w < adj[nv].size();
                 w = adj[nv].next_set(w + 1)) {
                if (w == u || adj[u].test(w)) continue;
                Bitset blocked = adj[nv];
                blocked.reset(u);
                blocked.reset(w);
                blocked.set(nv);
                std::vector<int> parent(static_cast<std::size_t>(n), -1);
                std::queue<std::size_t> q;
                parent[w] = static_cast<int>(w);
                q.push(w);
                while (!q.empty() && parent[u] == -1) {
                    std::size_t x = q.front();
                    q.pop();
                    for (std::size_t y = adj[x].next_set(0); y < adj[x].size();
                         y = adj[x].next_set(y + 1)) {
                        if (blocked.test(y) || parent[y] != -1) continue;
                        parent[y] = static_cast<int>(x);
                        q.push(y);
                    }
                }
                if (parent[u] == -1) continue;
                std::vector<int> path;  // u back to w
                for (std::size_t x = u;; x = static_cast<std::size_t>(parent[x])) {
                    path.push_back(static_cast<int>(x));
                    if (x == w) break;
                }
                std::vector<int> cycle{v};
                cycle.insert(cycle.end(), path.rbegin(), path.rend());  // v, w, ..., u
                return CycleWitness{std::move(cycle), WitnessStrategy::generic_fallback};
            }
        }
    }
    return std::nullopt;
}

std::optional<CycleWitness> generic_hole(const CirculantGraph& g) {
    return generic_hole(g.vertex_count(), adjacency(g.vertex_count(), edge_list(g)));
}

/// The missing-multiple construction. Returns nullopt when the hypothesis
/// does not hold for a, or when the constructed cycle fails validation.
std::optional<CycleWitness> orda_candidate(const CirculantGraph& g, int a) {
    const int n = g.vertex_count();
    const int k = ord(n, a);
    if (k < 4 || !g.contains_distance(fold(n, a))) return std::nullopt;
    const int half = k / 2;
    auto multiple_present = [&](long long m) {
        return g.contains_distance(fold(n, m * a));
    };

    int r = 1;
    while (r + 1 <= half && multiple_present(r + 1)) ++r;
    if (r >= half) return std::nullopt;  // every multiple present
    int next = 0;                        // first present multiple after the gap
    for (int m = r + 2; m <= half; ++m)
        if (multiple_present(m)) {
            next = m;
            break;
        }

    std::vector<long long> steps;
    WitnessStrategy tag;
    if (next != 0) {
        // Case (1S): a..ra present, (r+1)a..(r+t-1)a absent, (r+t)a present.
        tag = WitnessStrategy::orda_1s;
        const int t = next - r;
        if (multiple_present(t - 1)) {
            steps = {0, a, static_cast<long long>(r + 1) * a, static_cast<long long>(r + t) * a};
        } else {
            // Division algorithm r+t = (r+1)q + s: reach q(r+1)a from a by
            // alternating +a and +ra, then close over sa when s > 0.
            const int q = (r + t) / (r + 1);
            const int s = (r + t) % (r + 1);
            steps = {0, a};
            for (int j = 1; j < q; ++j) {
                steps.push_back(static_cast<long long>(j) * (r + 1) * a);
                steps.push_back((static_cast<long long>(j) * (r + 1) + 1) * a);
            }
            steps.push_back(static_cast<long long>(q) * (r + 1) * a);
            if (s > 0) steps.push_back(static_cast<long long>(r + t) * a);
        }
    } else {
        // Case (2S): everything past ra absent. Two chains of ra-steps, one
        // from 0 and one from floor(k/2)a, closed by a ta-step and an sa-step.
        tag = WitnessStrategy::orda_2s;
        const int q = half / r;
        for (int j = 0; j <= q; ++j) steps.push_back(static_cast<long long>(j) * r * a);
        for (int j = 0; j <= q; ++j)
            steps.push_back((static_cast<long long>(half) + static_cast<long long>(j) * r) * a);
    }

    std::vector<int> cycle;
    for (long long v : steps) {
        int x = static_cast<int>(mod_n(v, n));
        if (!cycle.empty() && cycle.back() == x) continue;  // t = 0 contraction
        cycle.push_back(x);
    }
    while (cycle.size() > 1 && cycle.back() == cycle.front()) cycle.pop_back();

    CycleWitness w{std::move(cycle), tag};
    if (validate_witness(g, w)) return w;
    return std::nullopt;
}

/// The Bezout construction for two generators of S whose gcd misses S.
/// Iterates over divisor pairs of n as long as the candidate 4-cycle keeps
/// acquiring a chord; delegates to the missing-multiple construction when a
/// required intermediate distance already misses S.
std::optional<CycleWitness> notch_candidate(const CirculantGraph& g, int a1, int a2) {
    const int n = g.vertex_count();
    const long long c = gcd_ll(a1, a2);
    if (g.contains_distance(static_cast<int>(c))) return std::nullopt;

    const long long a = gcd_ll(a1, n);
    if (!g.contains_distance(static_cast<int>(a))) return orda_candidate(g, a1);
    const long long b = gcd_ll(a2, n);
    if (!g.contains_distance(static_cast<int>(b))) return orda_candidate(g, a2);
    const long long d = gcd_ll(a, b);
    // c is a multiple of d with |c|_n = c missing from S.
    if (g.contains_distance(static_cast<int>(d)))
        return orda_candidate(g, static_cast<int>(d));

    long long cur_a = a, cur_b = b;
    std::set<std::pair<long long, long long>> seen;
    while (seen.insert({cur_a, cur_b}).second) {
        auto [gg, r, s] = ext_gcd(cur_a, cur_b);
        if (gg != d) break;
        const long long va = mod_n(r * cur_a, n);
        const long long vb = mod_n(s * cur_b, n);
        if (!g.contains_distance(fold(n, va)))
            return orda_candidate(g, static_cast<int>(cur_a));
        if (!g.contains_distance(fold(n, vb))) {
            // vb is a multiple of the original divisors a and b
            if (auto w = orda_candidate(g, static_cast<int>(a))) return w;
            return orda_candidate(g, static_cast<int>(b));
        }

        CycleWitness cand{{0, static_cast<int>(va), static_cast<int>(d), static_cast<int>(vb)},
                          WitnessStrategy::notch};
        if (validate_witness(g, cand)) return cand;

        const long long diff = mod_n(va - vb, n);
        if (diff == 0) break;
        const long long kd = gcd_ll(diff, n);
        if (!g.contains_distance(static_cast<int>(kd))) {
            const int dx = fold(n, diff);
            if (g.contains_distance(dx)) return orda_candidate(g, dx);
            break;
        }
        if (kd / d <= 1) break;
        const long long next_b = cur_a / d * cur_b;  // lcm(cur_a, cur_b)
        if (next_b >= n) break;
        cur_a = kd;
        cur_b = next_b;
    }
    return std::nullopt;
}

}  // namespace

std::string strategy_name(WitnessStrategy s) {
    switch (s) {
        case WitnessStrategy::orda_1s: return "orda-1S";
        case WitnessStrategy::orda_2s: return "orda-2S";
        case WitnessStrategy::notch: return "notch";
        case WitnessStrategy::generic_fallback: return "generic-fallback";
    }
    return "unknown";
}

int ord(int n, int a) {
    if (a < 1 || a > n) throw std::invalid_argument("ord requires 1 <= a <= n");
    return static_cast<int>(n / gcd_ll(n, a));
}

bool is_chordal_structural(const CirculantGraph& g) {
    if (g.connection_set().empty()) return true;
    const int d = component_count(g);
    const int m = g.vertex_count() / d;
    std::vector<int> expected;
    for (int j = 1; j <= m / 2; ++j) expected.push_back(j * d);
    return g.connection_set() == expected;
}

bool is_chordal_oracle(int vertex_count, const std::vector<Edge>& edges) {
    if (vertex_count < 0) throw std::invalid_argument("vertex count must be non-negative");
    if (vertex_count <= 3) return true;
    const std::size_t n = static_cast<std::size_t>(vertex_count);
    const auto adj = adjacency(vertex_count, edges);

    // Maximum cardinality search; ties go to the smallest label.
    std::vector<int> weight(n, 0);
    std::vector<char> visited(n, 0);
    std::vector<std::size_t> order;
    order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        for (std::size_t v = 0; v < n; ++v)
            if (!visited[v] && (best == n || weight[v] > weight[best])) best = v;
        visited[best] = 1;
        order.push_back(best);
        const auto& nb = adj[best];
        for (std::size_t u = nb.next_set(0); u < n; u = nb.next_set(u + 1))
            if (!visited[u]) ++weight[u];
    }

    // The reverse of the visit order is a perfect elimination ordering iff
    // the graph is chordal: check each vertex's later neighborhood through
    // its earliest later neighbor.
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = n - 1 - i;
    for (std::size_t v = 0; v < n; ++v) {
        const auto& nb = adj[v];
        std::size_t parent = n;
        for (std::size_t u = nb.next_set(0); u < n; u = nb.next_set(u + 1))
            if (pos[u] > pos[v] && (parent == n || pos[u] < pos[parent])) parent = u;
        if (parent == n) continue;
        for (std::size_t u = nb.next_set(0); u < n; u = nb.next_set(u + 1)) {
            if (pos[u] <= pos[v] || u == parent) continue;
            if (!adj[parent].test(u)) return false;
        }
    }
    return true;
}

bool is_chordal_oracle(const CirculantGraph& g) {
    return is_chordal_oracle(g.vertex_count(), edge_list(g));
}

bool validate_witness(const CirculantGraph& g, const CycleWitness& w) {
    const auto& vs = w.vertices;
    const int len = static_cast<int>(vs.size());
    if (len < 4) return false;
    const int n = g.vertex_count();
    std::set<int> distinct;
    for (int v : vs) {
        if (v < 0 || v >= n) return false;
        if (!distinct.insert(v).second) return false;
    }
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j) {
            const bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
            if (g.is_edge(vs[static_cast<std::size_t>(i)], vs[static_cast<std::size_t>(j)]) !=
                consecutive)
                return false;
        }
    return true;
}

CycleWitness witness_orda(const CirculantGraph& g, int a) {
    const int n = g.vertex_count();
    const int k = ord(n, a);
    bool hypothesis = k >= 4 && g.contains_distance(fold(n, a));
    if (hypothesis) {
        hypothesis = false;
        for (int m = 2; m <= k / 2; ++m)
            if (!g.contains_distance(fold(n, static_cast<long long>(m) * a))) {
                hypothesis = true;
                break;
            }
    }
    if (!hypothesis) throw std::invalid_argument("lemma hypothesis not satisfied");
    if (auto w = orda_candidate(g, a)) return *w;
    auto w = generic_hole(g);
    if (!w) throw InternalError("missing-multiple hypothesis held on a chordal graph");
    return *w;
}

CycleWitness witness_notch(const CirculantGraph& g, const std::vector<int>& generators) {
    if (generators.size() < 2)
        throw std::invalid_argument("need at least two generators");
    long long all = 0;
    for (int x : generators) {
        if (!g.contains_distance(x))
            throw std::invalid_argument("generator not in the connection set");
        all = gcd_ll(all, x);
    }
    if (g.contains_distance(static_cast<int>(all)))
        throw std::invalid_argument("gcd of generators lies in the connection set");

    // Inductive reduction: walk prefix gcds until one falls out of S, then
    // apply the two-generator construction to (previous prefix, next element).
    long long prefix = generators[0];
    for (std::size_t i = 1; i < generators.size(); ++i) {
        const long long next = gcd_ll(prefix, generators[i]);
        if (!g.contains_distance(static_cast<int>(next))) {
            if (auto w = notch_candidate(g, static_cast<int>(prefix), generators[i]))
                return *w;
            break;
        }
        prefix = next;
    }
    auto w = generic_hole(g);
    if (!w) throw InternalError("gcd hypothesis held on a chordal graph");
    return *w;
}

std::optional<CycleWitness> generic_chordless_cycle(int vertex_count,
                                                    const std::vector<Edge>& edges) {
    return generic_hole(vertex_count, adjacency(vertex_count, edges));
}

std::optional<CycleWitness> find_chordless_cycle(const CirculantGraph& g) {
    if (is_chordal_oracle(g)) return std::nullopt;
    for (int a : g.connection_set())
        if (auto w = orda_candidate(g, a)) return w;
    const auto& s = g.connection_set();
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (auto w = notch_candidate(g, s[i], s[j])) return w;
    auto w = generic_hole(g);
    if (!w) throw InternalError("oracle says non-chordal but no witness was found");
    return w;
}

}  // namespace circulant
