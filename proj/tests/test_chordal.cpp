#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "circulant/chordal.hpp"

using namespace circulant;

namespace {

std::vector<int> set_from_mask(unsigned mask) {
    std::vector<int> set;
    for (int b = 0; mask; ++b, mask >>= 1)
        if (mask & 1) set.push_back(b + 1);
    return set;
}

std::set<int> vertex_set(const CycleWitness& w) {
    return {w.vertices.begin(), w.vertices.end()};
}

/// Exhaustive scan: does any 4-subset induce a chordless 4-cycle?
bool has_chordless_4_cycle(const CirculantGraph& g) {
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    const int verts[4] = {a, b, c, d};
                    // try the three cyclic orders of four vertices
                    static const int orders[3][4] = {{0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}};
                    for (const auto& ord4 : orders) {
                        bool cycle = true;
                        for (int i = 0; i < 4 && cycle; ++i) {
                            const bool edge =
                                g.is_edge(verts[ord4[i]], verts[ord4[(i + 1) % 4]]);
                            if (!edge) cycle = false;
                        }
                        if (!cycle) continue;
                        if (!g.is_edge(verts[ord4[0]], verts[ord4[2]]) &&
                            !g.is_edge(verts[ord4[1]], verts[ord4[3]]))
                            return true;
                    }
                }
    return false;
}

}  // namespace

TEST_CASE("ord of a group element") {
    CHECK(ord(30, 5) == 6);
    CHECK(ord(30, 2) == 15);
    CHECK(ord(15, 2) == 15);
    CHECK(ord(10, 10) == 1);
    CHECK_THROWS_AS(ord(10, 0), std::invalid_argument);
    CHECK_THROWS_AS(ord(10, 11), std::invalid_argument);
}

TEST_CASE("structural chordality") {
    CHECK_FALSE(is_chordal_structural(CirculantGraph(15, {2, 3, 4, 7})));
    CHECK(is_chordal_structural(CirculantGraph(6, {1, 2, 3})));
    CHECK(is_chordal_structural(CirculantGraph(12, {3, 6})));  // 3 copies of K_4
    CHECK(is_chordal_structural(CirculantGraph(9, {})));
    CHECK(is_chordal_structural(CirculantGraph(9, {3})));  // 3 triangles
    CHECK_FALSE(is_chordal_structural(CirculantGraph(8, {1})));
}

TEST_CASE("chordality oracle on hand-built graphs") {
    // 4-cycle has no chord
    CHECK_FALSE(is_chordal_oracle(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
    // K_4
    CHECK(is_chordal_oracle(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
    // trees and paths
    CHECK(is_chordal_oracle(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
    CHECK(is_chordal_oracle(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}}));
    // triangle with a pendant
    CHECK(is_chordal_oracle(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}}));
    // 5-cycle plus one chord still has a 4-hole
    CHECK_FALSE(is_chordal_oracle(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}}));
    // 5-cycle with two chords from the same vertex is chordal
    CHECK(is_chordal_oracle(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}, {0, 3}}));
    // empty and tiny graphs
    CHECK(is_chordal_oracle(0, {}));
    CHECK(is_chordal_oracle(3, {{0, 1}, {1, 2}, {2, 0}}));
    CHECK_FALSE(is_chordal_oracle(CirculantGraph(10, {3, 4})));
}

TEST_CASE("witness validation") {
    CirculantGraph g(15, {2, 3, 4, 7});
    CHECK(validate_witness(g, {{0, 2, 6, 8}, WitnessStrategy::orda_1s}));
    CHECK_FALSE(validate_witness(g, {{0, 2, 6}, WitnessStrategy::orda_1s}));        // too short
    CHECK_FALSE(validate_witness(g, {{0, 2, 6, 6}, WitnessStrategy::orda_1s}));     // repeat
    CHECK_FALSE(validate_witness(g, {{0, 2, 6, 15}, WitnessStrategy::orda_1s}));    // range
    CHECK_FALSE(validate_witness(g, {{0, 2, 4, 8}, WitnessStrategy::orda_1s}));     // chord 0-4
    CHECK_FALSE(validate_witness(g, {{0, 2, 6, 9}, WitnessStrategy::orda_1s}));     // non-edge 9-0

    CirculantGraph h(10, {3, 4});
    CHECK_FALSE(validate_witness(h, {{0, 3, 6, 9}, WitnessStrategy::generic_fallback}));
}

TEST_CASE("missing-multiple witness construction") {
    SUBCASE("case 1S") {
        CirculantGraph g(15, {2, 3, 4, 7});
        auto w = witness_orda(g, 2);
        CHECK(w.strategy == WitnessStrategy::orda_1s);
        CHECK(w.vertices == std::vector<int>{0, 2, 6, 8});
        CHECK(validate_witness(g, w));
    }
    SUBCASE("case 2S") {
        CirculantGraph g(10, {3, 4});
        auto w = witness_orda(g, 3);
        CHECK(w.strategy == WitnessStrategy::orda_2s);
        CHECK(w.vertices == std::vector<int>{0, 6, 2, 5, 1, 7});
        CHECK(validate_witness(g, w));
    }
    SUBCASE("complete graph admits no hypothesis") {
        CirculantGraph g(6, {1, 2, 3});
        for (int a = 1; a <= 3; ++a)
            CHECK_THROWS_AS(witness_orda(g, a), std::invalid_argument);
    }
    SUBCASE("every eligible element of every small non-chordal graph") {
        for (int n = 4; n <= 14; ++n)
            for (unsigned mask = 1; mask < (1u << (n / 2)); ++mask) {
                CirculantGraph g(n, set_from_mask(mask));
                for (int a : g.connection_set()) {
                    const int k = ord(n, a);
                    if (k < 4) continue;
                    bool missing = false;
                    for (int m = 2; m <= k / 2; ++m)
                        if (!g.contains_distance(labelling_distance(
                                n, static_cast<int>((static_cast<long long>(m) * a) % n), 0)))
                            missing = true;
                    if (!missing) continue;
                    auto w = witness_orda(g, a);
                    CHECK(validate_witness(g, w));
                }
            }
    }
}

TEST_CASE("Bezout witness construction") {
    CirculantGraph g(30, {2, 3, 4, 5, 6, 8, 9, 10, 12, 14, 15});
    SUBCASE("generators (5, 2)") {
        auto w = witness_notch(g, {5, 2});
        CHECK(w.strategy == WitnessStrategy::notch);
        CHECK(validate_witness(g, w));
        // The first Bezout attempt gives {0, 5, 1, 26}, rejected for its
        // chord (|5 - 26| folds to 9, which lies in S); the divisor
        // iteration then lands on {0, 10, 1, 21}.
        CHECK_FALSE(validate_witness(g, {{0, 5, 1, 26}, WitnessStrategy::notch}));
        CHECK(vertex_set(w) == std::set<int>{0, 1, 10, 21});
    }
    SUBCASE("gcd present in S is rejected") {
        CirculantGraph k6(6, {1, 2, 3});
        CHECK_THROWS_AS(witness_notch(k6, {2, 3}), std::invalid_argument);
        CHECK_THROWS_AS(witness_notch(g, {2, 4}), std::invalid_argument);  // gcd 2 in S
        CHECK_THROWS_AS(witness_notch(g, {5}), std::invalid_argument);    // one generator
        CHECK_THROWS_AS(witness_notch(g, {7, 2}), std::invalid_argument); // 7 not in S
    }
    SUBCASE("three generators reduce to a pair") {
        auto w = witness_notch(g, {15, 10, 6});  // gcd 1, pairwise gcds 5, 2
        CHECK(validate_witness(g, w));
    }
}

TEST_CASE("find_chordless_cycle") {
    SUBCASE("paper examples pick the lemma strategies") {
        auto w1 = find_chordless_cycle(CirculantGraph(15, {2, 3, 4, 7}));
        REQUIRE(w1.has_value());
        CHECK(w1->strategy == WitnessStrategy::orda_1s);

        auto w2 = find_chordless_cycle(CirculantGraph(10, {3, 4}));
        REQUIRE(w2.has_value());
        CHECK(w2->strategy == WitnessStrategy::orda_2s);

        auto w3 = find_chordless_cycle(
            CirculantGraph(30, {2, 3, 4, 5, 6, 8, 9, 10, 12, 14, 15}));
        REQUIRE(w3.has_value());
        CHECK(w3->strategy == WitnessStrategy::notch);
        CHECK(validate_witness(CirculantGraph(30, {2, 3, 4, 5, 6, 8, 9, 10, 12, 14, 15}), *w3));
    }
    SUBCASE("chordal inputs return nothing") {
        CHECK_FALSE(find_chordless_cycle(CirculantGraph(12, {3, 6})).has_value());
        CHECK_FALSE(find_chordless_cycle(CirculantGraph(6, {1, 2, 3})).has_value());
        CHECK_FALSE(find_chordless_cycle(CirculantGraph(9, {})).has_value());
    }
    SUBCASE("witnesses are valid and rotate") {
        for (int n = 4; n <= 13; ++n)
            for (unsigned mask = 0; mask < (1u << (n / 2)); ++mask) {
                CirculantGraph g(n, set_from_mask(mask));
                auto w = find_chordless_cycle(g);
                CHECK(w.has_value() != is_chordal_oracle(g));
                if (!w) continue;
                CHECK(validate_witness(g, *w));
                CycleWitness shifted = *w;
                for (int& v : shifted.vertices) v = (v + 1) % n;
                CHECK(validate_witness(g, shifted));
            }
    }
    SUBCASE("declared-chordal graphs have no chordless 4-cycle") {
        for (int n = 4; n <= 16; ++n)
            for (unsigned mask = 0; mask < (1u << (n / 2)); ++mask) {
                CirculantGraph g(n, set_from_mask(mask));
                if (find_chordless_cycle(g).has_value()) continue;
                CHECK_FALSE(has_chordless_4_cycle(g));
            }
    }
}

TEST_CASE("generic hole search on arbitrary graphs") {
    auto induced_cycle = [](int n, const std::vector<Edge>& edges,
                            const std::vector<int>& cycle) {
        if (cycle.size() < 4) return false;
        std::set<Edge> edge_set;
        for (auto [u, v] : edges) edge_set.insert(make_edge(u, v));
        std::set<int> distinct(cycle.begin(), cycle.end());
        if (distinct.size() != cycle.size()) return false;
        for (int v : cycle)
            if (v < 0 || v >= n) return false;
        const int len = static_cast<int>(cycle.size());
        for (int i = 0; i < len; ++i)
            for (int j = i + 1; j < len; ++j) {
                const bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
                const bool edge = edge_set.count(
                    make_edge(cycle[static_cast<std::size_t>(i)],
                              cycle[static_cast<std::size_t>(j)])) > 0;
                if (edge != consecutive) return false;
            }
        return true;
    };

    SUBCASE("plain 4-cycle") {
        std::vector<Edge> square{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
        auto w = generic_chordless_cycle(4, square);
        REQUIRE(w.has_value());
        CHECK(w->strategy == WitnessStrategy::generic_fallback);
        CHECK(induced_cycle(4, square, w->vertices));
    }
    SUBCASE("Petersen graph has 5-holes") {
        std::vector<Edge> petersen{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                   {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                   {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}};
        auto w = generic_chordless_cycle(10, petersen);
        REQUIRE(w.has_value());
        CHECK(w->vertices.size() == 5);
        CHECK(induced_cycle(10, petersen, w->vertices));
    }
    SUBCASE("chordal inputs yield nothing") {
        CHECK_FALSE(generic_chordless_cycle(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})
                        .has_value());
        CHECK_FALSE(generic_chordless_cycle(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}).has_value());
        CHECK_FALSE(generic_chordless_cycle(3, {}).has_value());
    }
    SUBCASE("random graphs: found iff non-chordal, always induced") {
        std::mt19937 rng(99);
        for (int trial = 0; trial < 400; ++trial) {
            const int n = 4 + static_cast<int>(rng() % 8);
            std::vector<Edge> edges;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (rng() % 3 == 0) edges.emplace_back(i, j);
            auto w = generic_chordless_cycle(n, edges);
            CHECK(w.has_value() != is_chordal_oracle(n, edges));
            if (w) CHECK(induced_cycle(n, edges, w->vertices));
        }
    }
}

TEST_CASE("structural test agrees with the oracle, exhaustively to n = 24") {
    for (int n = 4; n <= 24; ++n)
        for (unsigned mask = 0; mask < (1u << (n / 2)); ++mask) {
            CirculantGraph g(n, set_from_mask(mask));
            CHECK(is_chordal_structural(g) == is_chordal_oracle(g));
        }
}

TEST_CASE("chordal structural implies every component is complete") {
    for (int n = 4; n <= 16; ++n)
        for (unsigned mask = 1; mask < (1u << (n / 2)); ++mask) {
            CirculantGraph g(n, set_from_mask(mask));
            if (!is_chordal_structural(g)) continue;
            auto decomposition = components(g);
            for (const auto& coset : decomposition.cosets)
                for (std::size_t i = 0; i < coset.size(); ++i)
                    for (std::size_t j = i + 1; j < coset.size(); ++j)
                        CHECK(g.is_edge(coset[i], coset[j]));
        }
}
