#include "circulant/regularity.hpp"

#include <algorithm>

#include "circulant/chordal.hpp"
#include "circulant/parallel.hpp"

namespace circulant {

namespace {

std::uint32_t rotate_mask(std::uint32_t mask, int by, int n) {
    const std::uint32_t low = (n == 32) ? 0xFFFFFFFFu : ((std::uint32_t{1} << n) - 1);
    return ((mask << by) | (mask >> (n - by))) & low;
}

struct Orbit {
    std::uint32_t representative;
    long long weight;  // orbit size under the cyclic shift
};

/// Representatives (the minimal mask of each orbit) of the shift action on
/// subsets of Z_n, with their orbit sizes.
std::vector<Orbit> shift_orbits(int n) {
    std::vector<Orbit> orbits;
    const std::uint32_t limit = std::uint32_t{1} << n;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        int period = n;  // smallest shift fixing the mask; always divides n
        bool minimal = true;
        for (int by = 1; by <= n; ++by) {
            const std::uint32_t shifted = rotate_mask(mask, by, n);
            if (shifted < mask) {
                minimal = false;
                break;
            }
            if (shifted == mask) {
                period = by;
                break;
            }
        }
        // the orbit {W, W+1, ...} has exactly `period` distinct members
        if (minimal) orbits.push_back({mask, period});
    }
    return orbits;
}

void accumulate(std::map<std::pair<int, int>, long long>& table,
                const std::vector<std::uint32_t>& adjacency, std::uint32_t w_mask,
                long long weight, int p) {
    const int j = __builtin_popcount(w_mask);
    const auto complex = independence_complex_masks(adjacency, w_mask);
    const auto homology = reduced_homology_dims(complex, p);
    for (std::size_t idx = 0; idx < homology.dims.size(); ++idx) {
        if (homology.dims[idx] == 0) continue;
        const int ell = static_cast<int>(idx) - 1;
        table[{j - ell - 1, j}] += weight * homology.dims[idx];
    }
}

}  // namespace

BettiTable hochster_betti(const CirculantGraph& g, int p, HochsterOptions opts) {
    const int n = g.vertex_count();
    if (n > opts.max_n)
        throw SizeBoundError("Betti computation limited to n <= " + std::to_string(opts.max_n) +
                             " (got n = " + std::to_string(n) + ")");
    if (n > 30) throw SizeBoundError("subset masks limited to 30 vertices");

    std::vector<std::uint32_t> adjacency(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.is_edge(i, j)) adjacency[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;

    const std::vector<Orbit> orbits = opts.use_symmetry ? shift_orbits(n) : std::vector<Orbit>{};
    const std::size_t count = opts.use_symmetry ? orbits.size() : (std::size_t{1} << n);

    // Chunked by position; merging is commutative addition, so the final
    // table is identical for every job count.
    const int jobs = std::max(1, opts.jobs);
    std::vector<std::map<std::pair<int, int>, long long>> partial(static_cast<std::size_t>(jobs));
    const std::size_t chunk = (count + static_cast<std::size_t>(jobs) - 1) /
                              static_cast<std::size_t>(jobs);
    parallel_for(static_cast<std::size_t>(jobs), jobs, [&](std::size_t t) {
        const std::size_t hi = std::min(count, (t + 1) * chunk);
        for (std::size_t i = t * chunk; i < hi; ++i) {
            if (opts.use_symmetry)
                accumulate(partial[t], adjacency, orbits[i].representative, orbits[i].weight, p);
            else
                accumulate(partial[t], adjacency, static_cast<std::uint32_t>(i), 1, p);
        }
    });

    BettiTable table;
    table.characteristic = p;
    for (const auto& local : partial)
        for (const auto& [key, value] : local) table.entries[key] += value;
    for (auto it = table.entries.begin(); it != table.entries.end();)
        it = it->second == 0 ? table.entries.erase(it) : std::next(it);

    table.regularity = 0;
    for (const auto& [key, value] : table.entries)
        table.regularity = std::max(table.regularity, key.second - key.first);
    return table;
}

int regularity(const CirculantGraph& g, int p, HochsterOptions opts) {
    return hochster_betti(g, p, opts).regularity;
}

int jacques_formula(int n) {
    if (n < 3) throw std::invalid_argument("jacques_formula requires n >= 3");
    return n / 3 + (n % 3 == 2 ? 1 : 0);
}

FrobergCheck froberg_check(const CirculantGraph& g, int p, HochsterOptions opts) {
    FrobergCheck check;
    check.regularity_le_one = regularity(g, p, opts) <= 1;
    check.complement_chordal = is_chordal_oracle(complement(g));
    check.agree = check.regularity_le_one == check.complement_chordal;
    return check;
}

}  // namespace circulant
