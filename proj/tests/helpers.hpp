#ifndef DISTSPEC_TEST_HELPERS_HPP
#define DISTSPEC_TEST_HELPERS_HPP

#include "distspec/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace distspec::testing {

// Published graph6 strings used as a regression corpus: the smallest
// known vertex-transitive optimistic graphs of diameter 3 and 4, and a
// non-regular self-complementary optimistic graph on 17 vertices.
inline const std::string kOptimistic22Diam3 =
    "UsaCC@u]QwLODoIo@wBI?So?{??@~??lw?h{?Bv?";
inline const std::string kOptimistic26Diam4 =
    "YsP@?__C?A?O@@AA?GOCA?C??_G?g?@O?G??@?????o_?Cc???S???g_";
// single backslash; the doubled form is a typesetting artifact and does
// not decode (wrong body length)
inline const std::string kSelfComplementary17 = "P?BMP{}kmh[X\\SjCrHisfYJ[";
inline const std::string kSelfComplementary17DoubledBackslash =
    "P?BMP{}kmh[X\\\\SjCrHisfYJ[";

inline Graph petersen() {
    // Kneser graph K(5,2): vertices are 2-subsets of {0..4}, edges join
    // disjoint pairs
    std::vector<std::pair<int, int>> subsets;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
    Graph g(10);
    for (int i = 0; i < 10; ++i)
        for (int j = i + 1; j < 10; ++j) {
            auto [a, b] = subsets[i];
            auto [c, d] = subsets[j];
            if (a != c && a != d && b != c && b != d) g.set_edge(i, j);
        }
    return g;
}

inline Graph shrikhande() {
    // Z4 x Z4, differences {+-(1,0), +-(0,1), +-(1,1)}
    Graph g(16);
    auto idx = [](int r, int c) { return ((r % 4 + 4) % 4) * 4 + ((c % 4 + 4) % 4); };
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            g.set_edge(idx(r, c), idx(r + 1, c));
            g.set_edge(idx(r, c), idx(r, c + 1));
            g.set_edge(idx(r, c), idx(r + 1, c + 1));
        }
    return g;
}

inline Graph random_graph(int n, std::mt19937_64& rng, double p = 0.5) {
    Graph g(n);
    const std::uint64_t threshold =
        static_cast<std::uint64_t>(p * 18446744073709551615.0);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (rng() < threshold) g.set_edge(u, v);
    return g;
}

inline Graph random_connected_graph(int n, std::mt19937_64& rng, double p = 0.5) {
    for (;;) {
        Graph g = random_graph(n, rng, p);
        if (is_connected(g)) return g;
    }
}

inline Graph permuted(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.order());
    for (int v = 1; v < g.order(); ++v)
        for (int u = 0; u < v; ++u)
            if (g.adjacent(u, v)) h.set_edge(perm[u], perm[v]);
    return h;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng() % (i + 1)]);
    return perm;
}

// brute-force oracle: is there a permutation mapping g onto h?
inline bool isomorphic_brute_force(const Graph& g, const Graph& h) {
    if (g.order() != h.order()) return false;
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (int v = 1; v < g.order() && match; ++v)
            for (int u = 0; u < v && match; ++u)
                if (g.adjacent(u, v) != h.adjacent(perm[u], perm[v])) match = false;
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// brute-force oracle: orbit of every vertex under all automorphisms
inline bool vertex_transitive_brute_force(const Graph& g) {
    const int n = g.order();
    std::vector<bool> in_orbit_of_zero(n, false);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool automorphism = true;
        for (int v = 1; v < n && automorphism; ++v)
            for (int u = 0; u < v && automorphism; ++u)
                if (g.adjacent(u, v) != g.adjacent(perm[u], perm[v])) automorphism = false;
        if (automorphism) in_orbit_of_zero[perm[0]] = true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::all_of(in_orbit_of_zero.begin(), in_orbit_of_zero.end(),
                       [](bool b) { return b; });
}

} // namespace distspec::testing

#endif
