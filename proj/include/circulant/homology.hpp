#pragma once

#include <cstdint>
#include <vector>

#include "circulant/core.hpp"

namespace circulant {

/// All independent subsets of a ground set W inside some graph, grouped by
/// face size (size k = dimension k-1). faces_by_size[0] holds the single
/// empty face; faces are bitmasks over positions in `ground`, each level
/// sorted ascending.
struct IndependenceComplex {
    std::vector<int> ground;  // vertex labels, ascending
    std::vector<std::vector<std::uint32_t>> faces_by_size;

    std::size_t face_count() const {
        std::size_t c = 0;
        for (const auto& level : faces_by_size) c += level.size();
        return c;
    }
};

/// Faces = independent subsets of W in G (depth-first enumeration with
/// adjacency pruning). W may be empty; ground sets are limited to 30
/// vertices so faces fit in 32-bit masks.
IndependenceComplex independence_complex(const CirculantGraph& g, const std::vector<int>& w);

/// Same construction for an arbitrary simple graph given by adjacency masks
/// over 0..n-1 (adjacency[i] bit j set iff i ~ j).
IndependenceComplex independence_complex_masks(const std::vector<std::uint32_t>& adjacency,
                                               std::uint32_t w_mask);

/// Reduced homology dimensions: dims[l+1] = dim H~_l, starting at l = -1.
struct HomologySummary {
    std::vector<long long> dims;

    long long reduced_dim(int ell) const {  // ell >= -1
        const std::size_t idx = static_cast<std::size_t>(ell + 1);
        return idx < dims.size() ? dims[idx] : 0;
    }
};

/// Reduced simplicial homology over the field with p elements via boundary
/// matrix ranks: dim H~_l = dim ker d_l - rank d_{l+1}. Row reduction is
/// bit-packed when p = 2. p must be prime.
HomologySummary reduced_homology_dims(const IndependenceComplex& complex, int p);

/// Rank of a dense matrix over GF(2); rows are bit-packed, words_per_row =
/// ceil(cols/64). Consumes the rows.
int rank_gf2(std::vector<std::uint64_t>& rows, std::size_t row_count, std::size_t words_per_row);

/// Rank of a dense matrix over GF(p) by in-place elimination.
int rank_mod_p(std::vector<std::vector<int>>& rows, int p);

}  // namespace circulant
