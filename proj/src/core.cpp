#include "circulant/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace circulant {

long long gcd_ll(long long a, long long b) {
    while (b != 0) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

int labelling_distance(int n, int i, int j) {
    int k = (i - j) % n;
    if (k < 0) k += n;
    return std::min(k, n - k);
}

CirculantGraph::CirculantGraph(int n, std::vector<int> connection_set)
    : n_(n), set_(std::move(connection_set)) {
    if (n_ < 2) throw std::invalid_argument("circulant graph needs n >= 2");
    std::sort(set_.begin(), set_.end());
    const int half = n_ / 2;
    dist_mask_.assign(half + 1, 0);
    int prev = 0;
    for (int s : set_) {
        if (s < 1 || s > half)
            throw std::invalid_argument("connection set element " + std::to_string(s) +
                                        " outside {1.." + std::to_string(half) + "}");
        if (s == prev)
            throw std::invalid_argument("duplicate connection set element " + std::to_string(s));
        prev = s;
        dist_mask_[s] = 1;
    }
}

int CirculantGraph::degree() const {
    int d = 2 * static_cast<int>(set_.size());
    if (n_ % 2 == 0 && contains_distance(n_ / 2)) d -= 1;
    return d;
}

long long edge_count(const CirculantGraph& g) {
    const long long n = g.vertex_count();
    long long e = n * static_cast<long long>(g.connection_set().size());
    if (n % 2 == 0 && g.contains_distance(static_cast<int>(n / 2))) e -= n / 2;
    return e;
}

std::vector<Edge> edge_list(const CirculantGraph& g) {
    const int n = g.vertex_count();
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * g.connection_set().size());
    for (int i = 0; i < n; ++i)
        for (int s : g.connection_set()) {
            int j = (i + s) % n;
            edges.push_back(make_edge(i, j));
        }
    std::sort(edges.begin(), edges.end());
    // Antipodal edges (offset n/2) are generated from both endpoints.
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

int component_count(const CirculantGraph& g) {
    long long d = g.vertex_count();
    for (int s : g.connection_set()) d = gcd_ll(d, s);
    return static_cast<int>(d);
}

ComponentDecomposition components(const CirculantGraph& g) {
    if (g.connection_set().empty())
        throw std::invalid_argument("components() requires a non-empty connection set");
    const int n = g.vertex_count();
    const int d = component_count(g);
    const int k = n / d;

    // Quotient connection set: divide through by d, then fold anything above
    // floor(k/2) back into range (x -> k - x) and merge duplicates.
    std::vector<int> quotient_set;
    for (int s : g.connection_set()) {
        int q = s / d;
        if (q > k / 2) q = k - q;
        quotient_set.push_back(q);
    }
    std::sort(quotient_set.begin(), quotient_set.end());
    quotient_set.erase(std::unique(quotient_set.begin(), quotient_set.end()), quotient_set.end());

    std::vector<std::vector<int>> cosets(d);
    for (int c = 0; c < d; ++c) {
        cosets[c].reserve(k);
        for (int v = c; v < n; v += d) cosets[c].push_back(v);
    }
    return ComponentDecomposition{d, CirculantGraph(k, std::move(quotient_set)),
                                  std::move(cosets)};
}

CirculantGraph complement(const CirculantGraph& g) {
    std::vector<int> rest;
    for (int s = 1; s <= g.vertex_count() / 2; ++s)
        if (!g.contains_distance(s)) rest.push_back(s);
    return CirculantGraph(g.vertex_count(), std::move(rest));
}

}  // namespace circulant
