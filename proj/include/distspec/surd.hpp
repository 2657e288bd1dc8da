#ifndef DISTSPEC_SURD_HPP
#define DISTSPEC_SURD_HPP

#include "distspec/rational.hpp"

#include <cstdint>
#include <string>

namespace distspec {

// Exact quadratic irrational a + b*sqrt(d) with rational a, b and
// square-free d.  Canonical form: the square part of d is folded into b,
// d = 0 and b = 0 when the value is rational.  Closed under +, -, * as
// long as operands share the radicand (or one side is rational).
class Surd {
public:
    Surd() = default;
    Surd(BigRational rational) : a_(std::move(rational)) {}
    Surd(std::int64_t v) : a_(v) {}
    Surd(BigRational a, BigRational b, std::int64_t d); // normalizes

    static Surd sqrt_of(std::int64_t d) { return {BigRational(0), BigRational(1), d}; }

    const BigRational& rational_part() const { return a_; }
    const BigRational& radical_coeff() const { return b_; }
    std::int64_t radicand() const { return d_; }
    bool is_rational() const { return d_ == 0; }

    int sign() const; // exact: -1, 0, +1
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    Surd operator-() const;
    Surd operator+(const Surd& rhs) const;
    Surd operator-(const Surd& rhs) const;
    Surd operator*(const Surd& rhs) const;

    bool operator==(const Surd& rhs) const = default;

    double to_double() const;
    // "(-3+sqrt(13))/2" style: integers A, B, C with value (A + B*sqrt(d))/C
    std::string to_string() const;
    struct QuadForm {
        std::int64_t a = 0, b = 0, d = 0, c = 1; // (a + b*sqrt(d)) / c
    };
    QuadForm quad_form() const; // throws CapabilityError if parts exceed int64

private:
    BigRational a_;
    BigRational b_;
    std::int64_t d_ = 0;
};

} // namespace distspec

#endif
