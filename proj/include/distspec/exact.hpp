#ifndef DISTSPEC_EXACT_HPP
#define DISTSPEC_EXACT_HPP

#include "distspec/graph.hpp"
#include "distspec/rational.hpp"

#include <vector>

namespace distspec {

// Eigenvalue sign counts of a symmetric matrix.
struct InertiaTriple {
    int n_plus = 0;
    int n_zero = 0;
    int n_minus = 0;

    int order() const { return n_plus + n_zero + n_minus; }
    bool operator==(const InertiaTriple&) const = default;
};

// Dense symmetric matrix of exact rationals, row-major.
struct RatMatrix {
    int n = 0;
    std::vector<BigRational> a;

    explicit RatMatrix(int order = 0) : n(order), a(static_cast<std::size_t>(order) * order) {}
    BigRational& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const BigRational& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
    bool is_symmetric() const;

    static RatMatrix from_distance(const DistanceMatrix& d);
};

// Dense integer matrix, row-major.
struct IntMatrix {
    int n = 0;
    std::vector<BigInt> a;

    explicit IntMatrix(int order = 0) : n(order), a(static_cast<std::size_t>(order) * order) {}
    BigInt& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const BigInt& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    static IntMatrix from_distance(const DistanceMatrix& d);
    static IntMatrix adjacency(const Graph& g);
};

// Integer polynomial, constant term first, no trailing zero coefficients
// (the zero polynomial has an empty coefficient vector).
struct IntPolynomial {
    std::vector<BigInt> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool operator==(const IntPolynomial&) const = default;
};

// Exact signature by symmetric congruence reduction (Sylvester's law):
// diagonal pivots (largest |value|, lowest index on ties) with rational
// Schur complements, hyperbolic 2x2 blocks when the active diagonal is
// all zero.  Throws DomainError on a non-symmetric matrix.
InertiaTriple inertia(RatMatrix m);
InertiaTriple inertia(const DistanceMatrix& d);

// Exact determinant by rational Gaussian elimination.
BigRational determinant(RatMatrix m);
BigRational determinant(const DistanceMatrix& d);

// det(xI - M) with exact integer coefficients (Faddeev-LeVerrier).
IntPolynomial char_poly(const IntMatrix& m);
IntPolynomial char_poly(const DistanceMatrix& d);

// Inertia of a real-rooted polynomial by Descartes' rule: zero roots from
// trailing zero coefficients, positive roots = sign changes of p(x),
// negative roots = sign changes of p(-x).  Exact because all roots are
// real (caller's guarantee).  Throws DomainError on the zero polynomial.
InertiaTriple inertia_from_charpoly(const IntPolynomial& p);

// Cyclic Jacobi rotations; ascending eigenvalue approximations.  Reporting
// and screening only -- never the source of an optimism verdict.
std::vector<double> float_eigenvalues(std::vector<double> flat, int n);
std::vector<double> float_eigenvalues(const DistanceMatrix& d);

// Exact inertia of a small integer symmetric matrix via an int64
// Faddeev-LeVerrier + Descartes route.  Entries and order must be small
// enough that no intermediate exceeds int64 (checked; throws
// CapabilityError if not).  Used as the fast exact path in bulk search.
// The pointer overload is allocation-free (row-major n*n, n <= 8).
InertiaTriple inertia_small_int(const int* entries, int n);
InertiaTriple inertia_small_int(const DistanceMatrix& d);

} // namespace distspec

#endif
