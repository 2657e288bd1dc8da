#include "distspec/surd.hpp"

#include "distspec/errors.hpp"

#include <cmath>
#include <utility>

namespace distspec {

namespace {

// d = square * rest with rest square-free
void split_square(std::int64_t d, std::int64_t& square_root, std::int64_t& rest) {
    square_root = 1;
    rest = 1;
    for (std::int64_t f = 2; f * f <= d; ++f) {
        int mult = 0;
        while (d % f == 0) {
            d /= f;
            ++mult;
        }
        for (int i = 0; i < mult / 2; ++i) square_root *= f;
        if (mult % 2) rest *= f;
    }
    rest *= d;
}

} // namespace

Surd::Surd(BigRational a, BigRational b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)) {
    if (d < 0) throw DomainError("negative radicand");
    if (b_.is_zero() || d == 0) { // b*sqrt(0) contributes nothing
        b_ = BigRational(0);
        d_ = 0;
        return;
    }
    std::int64_t sq, rest;
    split_square(d, sq, rest);
    if (rest == 1) {
        a_ += b_ * BigRational(sq);
        b_ = BigRational(0);
        d_ = 0;
    } else {
        if (sq != 1) b_ *= BigRational(sq);
        d_ = rest;
    }
}

int Surd::sign() const {
    if (b_.is_zero()) return a_.sign();
    if (a_.is_zero()) return b_.sign();
    if (a_.sign() == b_.sign()) return a_.sign();
    // opposite signs: compare a^2 with b^2 d
    BigRational a2 = a_ * a_;
    BigRational b2d = b_ * b_ * BigRational(d_);
    auto c = a2 <=> b2d;
    if (c == std::weak_ordering::equivalent) return 0; // only possible if sqrt(d) rational
    return (c == std::weak_ordering::greater) ? a_.sign() : b_.sign();
}

Surd Surd::operator-() const {
    Surd r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

Surd Surd::operator+(const Surd& rhs) const {
    if (is_rational() || rhs.is_rational() || d_ == rhs.d_) {
        std::int64_t d = is_rational() ? rhs.d_ : d_;
        return {a_ + rhs.a_, b_ + rhs.b_, d};
    }
    throw DomainError("sum of surds with different radicands is not a quadratic surd");
}

Surd Surd::operator-(const Surd& rhs) const { return *this + (-rhs); }

Surd Surd::operator*(const Surd& rhs) const {
    if (is_rational() || rhs.is_rational() || d_ == rhs.d_) {
        std::int64_t d = is_rational() ? rhs.d_ : d_;
        BigRational rad(d);
        return {a_ * rhs.a_ + b_ * rhs.b_ * rad, a_ * rhs.b_ + b_ * rhs.a_, d};
    }
    throw DomainError("product of surds with different radicands is not a quadratic surd");
}

double Surd::to_double() const {
    return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(d_));
}

Surd::QuadForm Surd::quad_form() const {
    BigInt c_big = a_.den();
    if (!b_.is_zero()) {
        BigInt g = BigInt::gcd(a_.den(), b_.den());
        c_big = a_.den() * (b_.den() / g);
    }
    BigInt a_big = a_.num() * (c_big / a_.den());
    BigInt b_big = b_.num() * (c_big / b_.den());
    if (!a_big.fits_int64() || !b_big.fits_int64() || !c_big.fits_int64())
        throw CapabilityError("surd components exceed int64");
    return {a_big.to_int64(), b_big.to_int64(), d_, c_big.to_int64()};
}

std::string Surd::to_string() const {
    QuadForm q = quad_form();
    if (q.b == 0) {
        std::string s = std::to_string(q.a);
        if (q.c != 1) s += "/" + std::to_string(q.c);
        return s;
    }
    std::string radical = (q.b == 1 ? "" : (q.b == -1 ? "-" : std::to_string(q.b) + "*")) +
                          "sqrt(" + std::to_string(q.d) + ")";
    std::string body;
    if (q.a == 0)
        body = radical;
    else
        body = std::to_string(q.a) + (q.b > 0 ? "+" : "") + radical;
    if (q.c == 1) return body;
    return "(" + body + ")/" + std::to_string(q.c);
}

} // namespace distspec
