#include "distspec/rational.hpp"

#include "distspec/errors.hpp"

#include <cmath>
#include <utility>

namespace distspec {

BigRational::BigRational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw DomainError("rational with zero denominator");
    reduce();
}

void BigRational::reduce() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
}

BigRational BigRational::operator-() const {
    BigRational r = *this;
    r.num_ = -r.num_;
    return r;
}

BigRational BigRational::abs() const {
    BigRational r = *this;
    r.num_ = r.num_.abs();
    return r;
}

BigRational BigRational::reciprocal() const {
    if (is_zero()) throw DomainError("reciprocal of zero");
    return {den_, num_};
}

BigRational& BigRational::operator+=(const BigRational& r) {
    num_ = num_ * r.den_ + r.num_ * den_;
    den_ *= r.den_;
    reduce();
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& r) {
    num_ = num_ * r.den_ - r.num_ * den_;
    den_ *= r.den_;
    reduce();
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& r) {
    num_ *= r.num_;
    den_ *= r.den_;
    reduce();
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& r) {
    if (r.is_zero()) throw DomainError("division by zero rational");
    num_ *= r.den_;
    den_ *= r.num_;
    reduce();
    return *this;
}

std::weak_ordering BigRational::operator<=>(const BigRational& rhs) const {
    // denominators positive, so cross multiplication preserves order
    BigInt lhs_val = num_ * rhs.den_;
    BigInt rhs_val = rhs.num_ * den_;
    auto c = lhs_val <=> rhs_val;
    if (c == std::strong_ordering::less) return std::weak_ordering::less;
    if (c == std::strong_ordering::greater) return std::weak_ordering::greater;
    return std::weak_ordering::equivalent;
}

double BigRational::to_double() const {
    if (num_.is_zero()) return 0.0;
    // scale both operands into double range before dividing
    double n = num_.to_double();
    double d = den_.to_double();
    if (std::isfinite(n) && std::isfinite(d)) return n / d;
    auto [q, r] = BigInt::divmod(num_, den_);
    return q.to_double() + (r.to_double() / d);
}

std::string BigRational::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

} // namespace distspec
