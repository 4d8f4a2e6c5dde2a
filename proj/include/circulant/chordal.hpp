#pragma once

#include <optional>
#include <string>
#include <vector>

#include "circulant/core.hpp"

namespace circulant {

/// How a chordless-cycle certificate was produced.
enum class WitnessStrategy { orda_1s, orda_2s, notch, generic_fallback };

std::string strategy_name(WitnessStrategy s);

/// An ordered vertex cycle certifying non-chordality: consecutive pairs
/// (cyclically) are edges, every other pair is a non-edge, length >= 4.
struct CycleWitness {
    std::vector<int> vertices;
    WitnessStrategy strategy;
};

/// Order of a in the additive group Z_n: n / gcd(n, a).
int ord(int n, int a);

/// Structural chordality test: with d = gcd(n, S) and m = n/d, G is chordal
/// iff S = {d, 2d, ..., floor(m/2)*d}. Empty S counts as chordal.
bool is_chordal_structural(const CirculantGraph& g);

/// Ground-truth chordality for an arbitrary simple graph: runs maximum
/// cardinality search and verifies the resulting elimination ordering.
bool is_chordal_oracle(int vertex_count, const std::vector<Edge>& edges);
bool is_chordal_oracle(const CirculantGraph& g);

/// Chordless cycle from the missing-multiple construction applied to a in S.
/// Requires ord(n, a) >= 4 and some multiple m*a, 2 <= m <= ord/2, with
/// |m*a|_n outside S; throws std::invalid_argument otherwise. Falls back to
/// the generic search if the constructed candidate fails validation.
CycleWitness witness_orda(const CirculantGraph& g, int a);

/// Chordless 4-cycle from the Bezout-identity construction applied to
/// generators in S whose gcd is not in S; throws std::invalid_argument when
/// that precondition fails. Falls back to the generic search if no
/// iteration produces a valid candidate.
CycleWitness witness_notch(const CirculantGraph& g, const std::vector<int>& generators);

/// Returns a validated witness when G is not chordal (preferring the
/// missing-multiple construction, then the Bezout construction, then the
/// generic search), or nullopt when G is chordal.
std::optional<CycleWitness> find_chordless_cycle(const CirculantGraph& g);

/// The generic hole search on an arbitrary simple graph: for an edge {v,u}
/// and a neighbor w of v outside N[u], a shortest w-u path avoiding
/// N[v]\{u,w} closes an induced cycle through v. Returns nullopt iff the
/// graph is chordal; used as the fallback behind the arithmetic
/// constructions.
std::optional<CycleWitness> generic_chordless_cycle(int vertex_count,
                                                    const std::vector<Edge>& edges);

/// Checks all three CycleWitness invariants against G.
bool validate_witness(const CirculantGraph& g, const CycleWitness& w);

}  // namespace circulant
