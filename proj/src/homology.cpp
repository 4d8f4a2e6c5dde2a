#include "circulant/homology.hpp"

#include <algorithm>

namespace circulant {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

void enumerate_independent(const std::vector<std::uint32_t>& adjacency, std::uint32_t face,
                           std::uint32_t candidates,
                           std::vector<std::vector<std::uint32_t>>& out) {
    const int size = __builtin_popcount(face);
    if (static_cast<std::size_t>(size) >= out.size()) out.resize(static_cast<std::size_t>(size) + 1);
    out[static_cast<std::size_t>(size)].push_back(face);
    std::uint32_t rest = candidates;
    while (rest) {
        const int v = __builtin_ctz(rest);
        const std::uint32_t bit = std::uint32_t{1} << v;
        rest &= rest - 1;
        // only extend with higher-indexed vertices to emit each set once
        const std::uint32_t higher = ~((bit << 1) - 1);
        enumerate_independent(adjacency, face | bit,
                              candidates & higher & ~adjacency[static_cast<std::size_t>(v)], out);
    }
}

}  // namespace

IndependenceComplex independence_complex_masks(const std::vector<std::uint32_t>& adjacency,
                                               std::uint32_t w_mask) {
    IndependenceComplex complex;
    for (std::size_t v = 0; v < adjacency.size(); ++v)
        if (w_mask & (std::uint32_t{1} << v)) complex.ground.push_back(static_cast<int>(v));
    complex.faces_by_size.resize(1);
    enumerate_independent(adjacency, 0, w_mask, complex.faces_by_size);
    for (auto& level : complex.faces_by_size) std::sort(level.begin(), level.end());

    // Remap ground-set labels to positions 0..|W|-1 so faces are compact.
    if (!complex.ground.empty() &&
        complex.ground.back() != static_cast<int>(complex.ground.size()) - 1) {
        std::vector<int> position(adjacency.size(), -1);
        for (std::size_t i = 0; i < complex.ground.size(); ++i)
            position[static_cast<std::size_t>(complex.ground[i])] = static_cast<int>(i);
        for (auto& level : complex.faces_by_size)
            for (auto& face : level) {
                std::uint32_t compact = 0, rest = face;
                while (rest) {
                    const int v = __builtin_ctz(rest);
                    rest &= rest - 1;
                    compact |= std::uint32_t{1} << position[static_cast<std::size_t>(v)];
                }
                face = compact;
            }
        for (auto& level : complex.faces_by_size) std::sort(level.begin(), level.end());
    }
    return complex;
}

IndependenceComplex independence_complex(const CirculantGraph& g, const std::vector<int>& w) {
    const int n = g.vertex_count();
    if (n > 30) throw SizeBoundError("independence complexes limited to 30 vertices");
    std::vector<std::uint32_t> adjacency(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.is_edge(i, j)) adjacency[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;
    std::uint32_t w_mask = 0;
    for (int v : w) {
        if (v < 0 || v >= n) throw std::invalid_argument("ground set vertex out of range");
        w_mask |= std::uint32_t{1} << v;
    }
    return independence_complex_masks(adjacency, w_mask);
}

int rank_gf2(std::vector<std::uint64_t>& rows, std::size_t row_count, std::size_t words_per_row) {
    std::size_t rank = 0;
    const std::size_t cols = words_per_row * 64;
    for (std::size_t col = 0; col < cols && rank < row_count; ++col) {
        const std::size_t word = col >> 6;
        const std::uint64_t bit = std::uint64_t{1} << (col & 63);
        std::size_t pivot = row_count;
        for (std::size_t r = rank; r < row_count; ++r)
            if (rows[r * words_per_row + word] & bit) {
                pivot = r;
                break;
            }
        if (pivot == row_count) continue;
        for (std::size_t wdx = 0; wdx < words_per_row; ++wdx)
            std::swap(rows[rank * words_per_row + wdx], rows[pivot * words_per_row + wdx]);
        for (std::size_t r = rank + 1; r < row_count; ++r)
            if (rows[r * words_per_row + word] & bit)
                for (std::size_t wdx = word; wdx < words_per_row; ++wdx)
                    rows[r * words_per_row + wdx] ^= rows[rank * words_per_row + wdx];
        ++rank;
    }
    return static_cast<int>(rank);
}

int rank_mod_p(std::vector<std::vector<int>>& rows, int p) {
    const std::size_t row_count = rows.size();
    const std::size_t cols = row_count ? rows[0].size() : 0;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < row_count; ++col) {
        std::size_t pivot = row_count;
        for (std::size_t r = rank; r < row_count; ++r)
            if (rows[r][col] % p != 0) {
                pivot = r;
                break;
            }
        if (pivot == row_count) continue;
        std::swap(rows[rank], rows[pivot]);
        // normalize pivot to 1 via Fermat inverse
        long long inv = 1, base = ((rows[rank][col] % p) + p) % p, e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (auto& x : rows[rank]) x = static_cast<int>(((static_cast<long long>(x) * inv) % p + p) % p);
        for (std::size_t r = rank + 1; r < row_count; ++r) {
            const int factor = ((rows[r][col] % p) + p) % p;
            if (factor == 0) continue;
            for (std::size_t cdx = col; cdx < cols; ++cdx)
                rows[r][cdx] = static_cast<int>(
                    ((rows[r][cdx] - static_cast<long long>(factor) * rows[rank][cdx]) % p + p) % p);
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

namespace {

/// Rank of the boundary map from size-k faces to size-(k-1) faces.
int boundary_rank(const IndependenceComplex& complex, std::size_t k, int p) {
    const auto& sources = complex.faces_by_size[k];
    const auto& targets = complex.faces_by_size[k - 1];
    if (sources.empty() || targets.empty()) return 0;
    const std::size_t cols = targets.size();

    auto target_index = [&](std::uint32_t face) {
        return static_cast<std::size_t>(
            std::lower_bound(targets.begin(), targets.end(), face) - targets.begin());
    };

    if (p == 2) {
        const std::size_t words = (cols + 63) / 64;
        std::vector<std::uint64_t> rows(sources.size() * words, 0);
        for (std::size_t r = 0; r < sources.size(); ++r) {
            std::uint32_t rest = sources[r];
            while (rest) {
                const std::uint32_t bit = rest & (~rest + 1);
                rest &= rest - 1;
                const std::size_t idx = target_index(sources[r] & ~bit);
                rows[r * words + (idx >> 6)] ^= std::uint64_t{1} << (idx & 63);
            }
        }
        return rank_gf2(rows, sources.size(), words);
    }

    std::vector<std::vector<int>> rows(sources.size(), std::vector<int>(cols, 0));
    for (std::size_t r = 0; r < sources.size(); ++r) {
        std::uint32_t rest = sources[r];
        int position = 0;  // index of the removed vertex within the face
        while (rest) {
            const std::uint32_t bit = rest & (~rest + 1);
            rest &= rest - 1;
            const std::size_t idx = target_index(sources[r] & ~bit);
            rows[r][idx] = (position % 2 == 0) ? 1 : p - 1;
            ++position;
        }
    }
    return rank_mod_p(rows, p);
}

}  // namespace

HomologySummary reduced_homology_dims(const IndependenceComplex& complex, int p) {
    if (!is_prime(p)) throw std::invalid_argument("coefficient characteristic must be prime");
    HomologySummary summary;
    const std::size_t levels = complex.faces_by_size.size();
    if (levels == 0) return summary;

    std::vector<int> ranks(levels + 1, 0);  // ranks[k] = rank of d_k, k >= 1
    for (std::size_t k = 1; k < levels; ++k) ranks[k] = boundary_rank(complex, k, p);

    summary.dims.resize(levels, 0);
    for (std::size_t k = 0; k < levels; ++k) {
        const long long faces = static_cast<long long>(complex.faces_by_size[k].size());
        summary.dims[k] = faces - ranks[k] - ranks[k + 1];
    }
    while (!summary.dims.empty() && summary.dims.back() == 0) summary.dims.pop_back();
    return summary;
}

}  // namespace circulant
