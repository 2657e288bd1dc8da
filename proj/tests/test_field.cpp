#include "distspec/errors.hpp"
#include "distspec/finite_field.hpp"
#include "distspec/graph.hpp"
#include "distspec/iso.hpp"
#include "distspec/srg.hpp"

#include <doctest.h>

#include <set>

using namespace distspec;

TEST_CASE("primality and prime power factoring") {
    CHECK(is_prime(2));
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(49));

    auto pp = factor_prime_power(49);
    REQUIRE(pp.has_value());
    CHECK(pp->p == 7);
    CHECK(pp->k == 2);
    CHECK(factor_prime_power(8)->p == 2);
    CHECK(factor_prime_power(8)->k == 3);
    CHECK(factor_prime_power(13)->k == 1);
    CHECK_FALSE(factor_prime_power(12).has_value());
    CHECK_FALSE(factor_prime_power(1).has_value());
}

TEST_CASE("field construction picks the smallest irreducible modulus") {
    FiniteField f13 = make_field(13, 1);
    CHECK(f13.size() == 13);
    CHECK(f13.modulus() == std::vector<int>{0, 1}); // x

    FiniteField f9 = make_field(3, 2);
    CHECK(f9.size() == 9);
    CHECK(f9.modulus() == std::vector<int>{1, 0, 1}); // x^2 + 1, rootless mod 3

    FiniteField f4 = make_field(2, 2);
    CHECK(f4.modulus() == std::vector<int>{1, 1, 1}); // x^2 + x + 1

    FiniteField f25 = make_field(5, 2);
    CHECK(f25.modulus() == std::vector<int>{2, 0, 1}); // x^2 + 2; x^2 + 1 has root 2

    FiniteField f8 = make_field(2, 3);
    CHECK(f8.size() == 8);
    CHECK(f8.modulus() == std::vector<int>{1, 1, 0, 1}); // x^3 + x + 1

    CHECK_THROWS_AS(make_field(4, 1), DomainError);
    CHECK_THROWS_AS(make_field(3, 0), DomainError);
}

TEST_CASE("explicit modulus constructor validates irreducibility") {
    CHECK_NOTHROW(FiniteField(3, 2, {2, 2, 1})); // x^2 + 2x + 2, irreducible
    CHECK_THROWS_AS(FiniteField(3, 2, {2, 0, 1}), DomainError);  // x^2+2 = (x+1)(x+2)
    CHECK_THROWS_AS(FiniteField(3, 2, {1, 0, 2}), DomainError);  // not monic
    CHECK_THROWS_AS(FiniteField(3, 2, {1, 0, 0, 1}), DomainError); // wrong degree
}

TEST_CASE("field arithmetic axioms") {
    for (auto [p, k] : {std::pair{3, 2}, std::pair{5, 2}, std::pair{2, 3}, std::pair{7, 1}}) {
        FiniteField f(p, k);
        const std::int64_t q = f.size();
        for (std::int64_t a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.sub(a, a) == 0);
            if (a != 0) {
                CHECK(f.mul(a, f.inverse(a)) == 1);
                CHECK(f.pow(a, q - 1) == 1); // multiplicative group order q-1
            }
            for (std::int64_t b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                CHECK(f.sub(f.add(a, b), b) == a);
            }
        }
    }
}

TEST_CASE("euler criterion squares") {
    FiniteField f13 = make_field(13, 1);
    std::set<std::int64_t> squares;
    for (std::int64_t a = 1; a < 13; ++a)
        if (f13.is_square(a)) squares.insert(a);
    CHECK(squares == std::set<std::int64_t>{1, 3, 4, 9, 10, 12});
    CHECK_FALSE(f13.is_square(2)); // 2^6 = 64 = -1 (mod 13)

    FiniteField f9 = make_field(3, 2);
    // -1 in F9 is the element with coefficient vector (2, 0), index 2
    CHECK(f9.is_square(f9.sub(0, 1)));

    CHECK_THROWS_AS(f13.is_square(0), DomainError);
    FiniteField f4 = make_field(2, 2);
    CHECK_THROWS_AS(f4.is_square(3), DomainError); // even characteristic
}

TEST_CASE("exactly half the nonzero elements are squares") {
    for (std::int64_t q : {5, 9, 13, 25, 27, 49}) {
        auto pp = factor_prime_power(q);
        REQUIRE(pp.has_value());
        FiniteField f(static_cast<int>(pp->p), pp->k);
        std::int64_t count = 0;
        for (std::int64_t a = 1; a < q; ++a)
            if (f.is_square(a)) ++count;
        CHECK(count == (q - 1) / 2);
    }
}

TEST_CASE("paley graphs of prime order") {
    CHECK(paley_graph(5) == cycle_graph(5));
    CHECK(detect_srg(paley_graph(13)) == SrgParams{13, 6, 2, 3});
    CHECK(detect_srg(paley_graph(17)) == SrgParams{17, 8, 3, 4});
}

TEST_CASE("paley graphs of prime power order") {
    Graph p9 = paley_graph(9);
    CHECK(detect_srg(p9) == SrgParams{9, 4, 1, 2});
    CHECK(is_self_complementary(p9));

    Graph p25 = paley_graph(25);
    CHECK(detect_srg(p25) == SrgParams{25, 12, 5, 6});

    Graph p49 = paley_graph(49);
    CHECK(detect_srg(p49) == SrgParams{49, 24, 11, 12});
}

TEST_CASE("paley rejects bad orders") {
    CHECK_THROWS_AS(paley_graph(8), DomainError);  // 8 = 0 (mod 4)
    CHECK_THROWS_AS(paley_graph(7), DomainError);  // 7 = 3 (mod 4)
    CHECK_THROWS_AS(paley_graph(27), DomainError); // 27 = 3 (mod 4)
    CHECK_THROWS_AS(paley_graph(12), DomainError); // not a prime power
}

TEST_CASE("paley graphs match conference parameters") {
    for (std::int64_t q : {5, 9, 13, 17, 25, 29, 37, 41, 49}) {
        auto params = detect_srg(paley_graph(q));
        REQUIRE(params.has_value());
        CHECK(*params == conference_params(static_cast<int>(q)));
    }
}

TEST_CASE("paley graphs are self-complementary and vertex-transitive") {
    for (std::int64_t q : {5, 9, 13, 17, 25, 29}) {
        Graph g = paley_graph(q);
        CHECK(is_self_complementary(g));
        CHECK(is_vertex_transitive(g));
    }
}

TEST_CASE("paley graph does not depend on the modulus choice") {
    FiniteField default_f9 = make_field(3, 2);            // x^2 + 1
    FiniteField other_f9(3, 2, {2, 2, 1});                // x^2 + 2x + 2
    Graph a = paley_graph(default_f9);
    Graph b = paley_graph(other_f9);
    CHECK(a.order() == b.order());
    CHECK(are_isomorphic(a, b).has_value());
}
