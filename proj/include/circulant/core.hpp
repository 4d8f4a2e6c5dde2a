#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace circulant {

/// Unordered vertex pair, normalized so first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Thrown when an instance exceeds a configured solvable bound.
struct SizeBoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when an internal consistency check fails; must never happen.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Cyclic distance between labels i and j on Z_n: min(|k|, n - |k|).
int labelling_distance(int n, int i, int j);

/// Circulant graph C_n(S) on vertices 0..n-1: i ~ j iff the labelling
/// distance |i-j|_n lies in the connection set S.
///
/// S is kept both as a sorted list and as a membership table indexed by
/// labelling distance, so adjacency queries are O(1).
class CirculantGraph {
  public:
    /// Validates n >= 2, every element of S in {1..n/2}, no duplicates.
    CirculantGraph(int n, std::vector<int> connection_set);

    int vertex_count() const { return n_; }
    const std::vector<int>& connection_set() const { return set_; }

    /// True iff d is a labelling distance realized as an edge (d in S).
    bool contains_distance(int d) const {
        return d >= 0 && d < static_cast<int>(dist_mask_.size()) && dist_mask_[d];
    }

    bool is_edge(int i, int j) const {
        return contains_distance(labelling_distance(n_, i, j)) && i != j;
    }

    /// Degree of every vertex: 2|S|, minus one when n is even and n/2 in S.
    int degree() const;

    bool operator==(const CirculantGraph& other) const {
        return n_ == other.n_ && set_ == other.set_;
    }

  private:
    int n_;
    std::vector<int> set_;
    std::vector<char> dist_mask_;  // indexed by distance 0..floor(n/2)
};

/// |E(G)|: n|S| when n is odd or n/2 not in S, else n|S| - n/2.
long long edge_count(const CirculantGraph& g);

/// All edges {i, j}, i < j, sorted lexicographically.
std::vector<Edge> edge_list(const CirculantGraph& g);

/// Number of connected components: gcd(n, a_1, ..., a_r).
/// Empty S gives n (every vertex isolated).
int component_count(const CirculantGraph& g);

struct ComponentDecomposition {
    int count;                             // d = gcd(n, S)
    CirculantGraph quotient;               // C_{n/d}(S/d), each component is a copy
    std::vector<std::vector<int>> cosets;  // the d residue classes mod d
};

/// Splits G into its d = gcd(n, S) isomorphic components. Requires S non-empty.
ComponentDecomposition components(const CirculantGraph& g);

/// C_n(T \ S) with T = {1..floor(n/2)}.
CirculantGraph complement(const CirculantGraph& g);

long long gcd_ll(long long a, long long b);

}  // namespace circulant
