#ifndef DISTSPEC_FINITE_FIELD_HPP
#define DISTSPEC_FINITE_FIELD_HPP

#include "distspec/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace distspec {

// F_{p^k}: elements are degree-<k coefficient vectors over F_p, reduced
// modulo a monic irreducible polynomial.  Element index i encodes the
// coefficients as base-p digits with the constant coefficient fastest,
// which fixes the vertex numbering of derived graphs.
class FiniteField {
public:
    // finds the lexicographically smallest monic irreducible modulus by
    // trial division; throws DomainError unless p is prime and k >= 1
    FiniteField(int p, int k);

    // explicit modulus (constant coefficient first, leading 1 included);
    // throws DomainError if it is not monic irreducible of degree k
    FiniteField(int p, int k, std::vector<int> modulus);

    int characteristic() const { return p_; }
    int degree() const { return k_; }
    std::int64_t size() const { return q_; }
    // modulus coefficients, constant first, including the leading 1
    const std::vector<int>& modulus() const { return modulus_; }

    std::int64_t add(std::int64_t a, std::int64_t b) const;
    std::int64_t sub(std::int64_t a, std::int64_t b) const;
    std::int64_t mul(std::int64_t a, std::int64_t b) const;
    std::int64_t pow(std::int64_t a, std::int64_t e) const;
    std::int64_t inverse(std::int64_t a) const; // throws DomainError on 0

    // Euler criterion a^((q-1)/2) == 1; requires odd q and a != 0.
    bool is_square(std::int64_t a) const;

private:
    int p_;
    int k_;
    std::int64_t q_;
    std::vector<int> modulus_;

    std::vector<int> to_poly(std::int64_t a) const;
    std::int64_t from_poly(const std::vector<int>& c) const;
};

bool is_prime(std::int64_t n);

// q = p^k for prime p, or nullopt
struct PrimePower {
    std::int64_t p;
    int k;
};
std::optional<PrimePower> factor_prime_power(std::int64_t q);

FiniteField make_field(int p, int k);

// Vertices are the field elements in index order; {a,b} is an edge iff
// a-b is a nonzero square.  Requires field size = 1 (mod 4).
Graph paley_graph(const FiniteField& f);

// convenience: factors q and builds the field first
Graph paley_graph(std::int64_t q);

} // namespace distspec

#endif
