#ifndef DISTSPEC_RATIONAL_HPP
#define DISTSPEC_RATIONAL_HPP

#include "distspec/bigint.hpp"

#include <compare>
#include <string>

namespace distspec {

// Exact rational, always reduced, denominator > 0.
class BigRational {
public:
    BigRational() : num_(0), den_(1) {}
    BigRational(std::int64_t v) : num_(v), den_(1) {}
    BigRational(BigInt n) : num_(std::move(n)), den_(1) {}
    BigRational(BigInt n, BigInt d); // reduces, throws DomainError on d = 0
    static BigRational of(std::int64_t n, std::int64_t d) { return {BigInt(n), BigInt(d)}; }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    int sign() const { return num_.sign(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }

    BigRational operator-() const;
    BigRational abs() const;
    BigRational reciprocal() const; // throws DomainError on 0

    BigRational& operator+=(const BigRational& r);
    BigRational& operator-=(const BigRational& r);
    BigRational& operator*=(const BigRational& r);
    BigRational& operator/=(const BigRational& r);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    std::weak_ordering operator<=>(const BigRational& rhs) const;
    bool operator==(const BigRational& rhs) const { return num_ == rhs.num_ && den_ == rhs.den_; }

    double to_double() const;
    std::string to_string() const; // "n" or "n/d"

private:
    BigInt num_;
    BigInt den_;
    void reduce();
};

} // namespace distspec

#endif
