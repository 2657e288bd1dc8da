#include "distspec/errors.hpp"
#include "distspec/graph.hpp"
#include "distspec/graph6.hpp"
#include "distspec/iso.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace distspec;

TEST_CASE("distance matrix of small graphs") {
    DistanceMatrix p3 = distance_matrix(path_graph(3));
    const int expected[3][3] = {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(p3.at(i, j) == expected[i][j]);

    DistanceMatrix k5 = distance_matrix(complete_graph(5));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK(k5.at(i, j) == (i == j ? 0 : 1));

    DistanceMatrix pet = distance_matrix(testing::petersen());
    CHECK(pet.max_entry() == 2);
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j)
            if (i != j) CHECK((pet.at(i, j) == 1 || pet.at(i, j) == 2));
}

TEST_CASE("distance matrix rejects disconnected graphs") {
    Graph two_parts(4);
    two_parts.set_edge(0, 1);
    two_parts.set_edge(2, 3);
    CHECK_FALSE(is_connected(two_parts));
    CHECK_THROWS_AS(distance_matrix(two_parts), DomainError);
    CHECK_THROWS_AS(diameter(two_parts), DomainError);
    CHECK(is_connected(Graph(1)));
}

TEST_CASE("distance matrix properties on random connected graphs") {
    std::mt19937_64 rng(555);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 2 + static_cast<int>(rng() % 9);
        Graph g = testing::random_connected_graph(n, rng);
        DistanceMatrix d = distance_matrix(g);
        for (int i = 0; i < n; ++i) {
            CHECK(d.at(i, i) == 0);
            for (int j = 0; j < n; ++j) {
                CHECK(d.at(i, j) == d.at(j, i));
                if (i != j) CHECK((d.at(i, j) == 1) == g.adjacent(i, j));
                for (int k = 0; k < n; ++k)
                    CHECK(d.at(i, k) <= d.at(i, j) + d.at(j, k));
            }
        }
    }
}

TEST_CASE("complement is an involution and complements edges") {
    std::mt19937_64 rng(556);
    Graph g = testing::random_graph(9, rng);
    Graph c = complement(g);
    for (int v = 1; v < 9; ++v)
        for (int u = 0; u < v; ++u) CHECK(g.adjacent(u, v) != c.adjacent(u, v));
    CHECK(complement(c) == g);
}

TEST_CASE("constructors") {
    CHECK(complete_graph(4).edge_count() == 6);
    CHECK(path_graph(5).edge_count() == 4);
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK_THROWS_AS(cycle_graph(2), DomainError);

    Graph k333 = complete_multipartite({3, 3, 3});
    CHECK(k333.order() == 9);
    int deg = 0;
    CHECK(is_regular(k333, &deg));
    CHECK(deg == 6);

    Graph rook = rook_graph(4);
    CHECK(rook.order() == 16);
    CHECK(is_regular(rook, &deg));
    CHECK(deg == 6);
    CHECK(rook.edge_count() == 48);

    CHECK_THROWS_AS(complete_multipartite({}), DomainError);
    CHECK_THROWS_AS(Graph(0), DomainError);
}

TEST_CASE("random trees are trees, uniform per seed") {
    std::mt19937_64 seeds(77);
    for (int iter = 0; iter < 50; ++iter) {
        int n = 1 + static_cast<int>(seeds() % 12);
        std::uint64_t seed = seeds();
        Graph t = random_tree(n, seed);
        CHECK(t.order() == n);
        CHECK(t.edge_count() == n - 1);
        CHECK(is_connected(t));
        CHECK(random_tree(n, seed) == t); // deterministic
    }
}

TEST_CASE("isomorphism finds and verifies mappings") {
    std::mt19937_64 rng(301);
    Graph g = testing::random_connected_graph(9, rng);
    auto identity = are_isomorphic(g, g);
    REQUIRE(identity.has_value());

    for (int iter = 0; iter < 20; ++iter) {
        auto perm = testing::random_permutation(9, rng);
        Graph h = testing::permuted(g, perm);
        auto phi = are_isomorphic(g, h);
        REQUIRE(phi.has_value());
        for (int v = 1; v < 9; ++v)
            for (int u = 0; u < v; ++u)
                CHECK(g.adjacent(u, v) == h.adjacent((*phi)[u], (*phi)[v]));
    }
}

TEST_CASE("isomorphism rejects non-isomorphic graphs") {
    CHECK_FALSE(are_isomorphic(cycle_graph(5), path_graph(5)).has_value());
    CHECK_FALSE(are_isomorphic(complete_graph(4), cycle_graph(4)).has_value());
    // same SRG parameters (16,6,2,2), different graphs
    CHECK_FALSE(are_isomorphic(rook_graph(4), testing::shrikhande()).has_value());
    CHECK(are_isomorphic(rook_graph(4), rook_graph(4)).has_value());
    CHECK(are_isomorphic(testing::shrikhande(), testing::shrikhande()).has_value());
}

TEST_CASE("isomorphism agrees with brute force on small random pairs") {
    std::mt19937_64 rng(302);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 2 + static_cast<int>(rng() % 5);
        Graph g = testing::random_graph(n, rng);
        Graph h = testing::random_graph(n, rng);
        CHECK(are_isomorphic(g, h).has_value() == testing::isomorphic_brute_force(g, h));
    }
}

TEST_CASE("self-complementary classics") {
    CHECK(is_self_complementary(cycle_graph(5)));
    CHECK(is_self_complementary(path_graph(4)));
    CHECK_FALSE(is_self_complementary(complete_graph(3)));
    CHECK_FALSE(is_self_complementary(path_graph(3)));
    CHECK(is_self_complementary(decode_graph6(testing::kSelfComplementary17)));
}

TEST_CASE("vertex transitivity") {
    CHECK(is_vertex_transitive(cycle_graph(5)));
    CHECK(is_vertex_transitive(complete_graph(6)));
    CHECK(is_vertex_transitive(testing::petersen()));
    CHECK_FALSE(is_vertex_transitive(path_graph(3)));
    CHECK_FALSE(is_vertex_transitive(path_graph(4)));
    Graph k33 = complete_multipartite({3, 3});
    CHECK(is_vertex_transitive(k33));
}

TEST_CASE("self-complementarity and transitivity agree with brute force up to order 6") {
    std::mt19937_64 rng(303);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 2 + static_cast<int>(rng() % 5);
        Graph g = testing::random_graph(n, rng);
        CHECK(is_self_complementary(g) ==
              testing::isomorphic_brute_force(g, complement(g)));
        CHECK(is_vertex_transitive(g) == testing::vertex_transitive_brute_force(g));
    }
    // include the known self-complementary orders explicitly
    CHECK(is_self_complementary(path_graph(4)) ==
          testing::isomorphic_brute_force(path_graph(4), complement(path_graph(4))));
    CHECK(is_vertex_transitive(cycle_graph(6)) ==
          testing::vertex_transitive_brute_force(cycle_graph(6)));
}
