#pragma once

#include <map>
#include <utility>

#include "circulant/core.hpp"
#include "circulant/homology.hpp"

namespace circulant {

/// Graded Betti numbers of the edge ring over GF(p), with the regularity
/// max{j - i : beta_{i,j} != 0} derived from them.
struct BettiTable {
    int characteristic = 2;
    std::map<std::pair<int, int>, long long> entries;  // (i, j) -> beta
    int regularity = 0;

    long long beta(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
};

struct HochsterOptions {
    int max_n = 16;            // refuse larger instances
    bool use_symmetry = false; // aggregate one subset per rotation orbit
    int jobs = 1;
};

/// beta_{i,j} = sum over |W| = j of dim H~_{j-i-1}(Ind(G[W])) over GF(p).
/// Subsets are enumerated in a fixed order; with use_symmetry only one
/// representative per cyclic-shift orbit is computed and weighted by its
/// orbit size, which leaves every entry unchanged.
BettiTable hochster_betti(const CirculantGraph& g, int p = 2, HochsterOptions opts = {});

/// Castelnuovo-Mumford regularity of the edge ring over GF(p).
int regularity(const CirculantGraph& g, int p = 2, HochsterOptions opts = {});

/// Regularity of the n-cycle's edge ring: floor(n/3), plus 1 when
/// n = 2 (mod 3). Requires n >= 3.
int jacques_formula(int n);

struct FrobergCheck {
    bool regularity_le_one = false;  // reg <= 1
    bool complement_chordal = false; // complement passes the chordality oracle
    bool agree = false;
};

/// Checks "reg <= 1 iff complement chordal" on both sides independently.
FrobergCheck froberg_check(const CirculantGraph& g, int p = 2, HochsterOptions opts = {});

}  // namespace circulant
