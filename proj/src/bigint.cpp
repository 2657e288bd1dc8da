#include "distspec/bigint.hpp"

#include "distspec/errors.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace distspec {

namespace {
constexpr std::uint64_t LIMB_BASE = std::uint64_t{1} << 32;
}

BigInt::BigInt(std::int64_t v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // avoid UB negating INT64_MIN
    std::uint64_t u = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffu));
    if (u >> 32) mag_.push_back(static_cast<std::uint32_t>(u >> 32));
}

BigInt BigInt::from_string(std::string_view text) {
    if (text.empty()) throw ParseError("empty integer literal");
    bool neg = false;
    std::size_t i = 0;
    if (text[0] == '-' || text[0] == '+') {
        neg = text[0] == '-';
        i = 1;
    }
    if (i == text.size()) throw ParseError("integer literal has no digits");
    BigInt r;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c < '0' || c > '9') throw ParseError("bad digit in integer literal");
        r *= BigInt(10);
        r += BigInt(c - '0');
    }
    if (neg) r.sign_ = -r.sign_;
    return r;
}

bool BigInt::is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& lo = a.size() >= b.size() ? b : a;
    const auto& hi = a.size() >= b.size() ? a : b;
    std::vector<std::uint32_t> r(hi.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        std::uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
        r[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    r[hi.size()] = static_cast<std::uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    assert(cmp_mag(a, b) >= 0);
    std::vector<std::uint32_t> r(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (d < 0) {
            d += static_cast<std::int64_t>(LIMB_BASE);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<std::uint32_t>(d);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = r[i + j] + ai * b[j] + carry;
            r[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        r[i + b.size()] = static_cast<std::uint32_t>(carry);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (rhs.sign_ == 0) return *this;
    if (sign_ == 0) return *this = rhs;
    if (sign_ == rhs.sign_) {
        mag_ = add_mag(mag_, rhs.mag_);
        return *this;
    }
    int c = cmp_mag(mag_, rhs.mag_);
    if (c == 0) {
        sign_ = 0;
        mag_.clear();
    } else if (c > 0) {
        mag_ = sub_mag(mag_, rhs.mag_);
    } else {
        mag_ = sub_mag(rhs.mag_, mag_);
        sign_ = rhs.sign_;
    }
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt& BigInt::operator*=(const BigInt& rhs) {
    if (sign_ == 0 || rhs.sign_ == 0) {
        sign_ = 0;
        mag_.clear();
        return *this;
    }
    mag_ = mul_mag(mag_, rhs.mag_);
    sign_ *= rhs.sign_;
    return *this;
}

// Knuth TAOCP vol.2 algorithm D on 32-bit limbs.
BigInt::DivResult BigInt::divmod(const BigInt& num, const BigInt& den) {
    if (den.sign_ == 0) throw DomainError("division by zero");
    if (num.sign_ == 0) return {BigInt(), BigInt()};
    int c = cmp_mag(num.mag_, den.mag_);
    if (c < 0) return {BigInt(), num};

    DivResult res;
    if (den.mag_.size() == 1) {
        std::uint64_t d = den.mag_[0];
        std::vector<std::uint32_t> q(num.mag_.size(), 0);
        std::uint64_t rem = 0;
        for (std::size_t i = num.mag_.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | num.mag_[i];
            q[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        res.quot.mag_ = std::move(q);
        if (rem) res.rem.mag_.push_back(static_cast<std::uint32_t>(rem));
    } else {
        // normalize so the divisor's top limb has its high bit set
        int shift = 0;
        for (std::uint32_t top = den.mag_.back(); !(top & 0x80000000u); top <<= 1) ++shift;
        auto shl = [shift](const std::vector<std::uint32_t>& v) {
            std::vector<std::uint32_t> r(v.size() + 1, 0);
            for (std::size_t i = 0; i < v.size(); ++i) {
                r[i] |= shift ? (v[i] << shift) : v[i];
                if (shift) r[i + 1] = v[i] >> (32 - shift);
            }
            while (!r.empty() && r.back() == 0) r.pop_back();
            return r;
        };
        std::vector<std::uint32_t> u = shl(num.mag_);
        std::vector<std::uint32_t> v = shl(den.mag_);
        std::size_t n = v.size(), m = u.size() - n;
        u.resize(u.size() + 1, 0);
        std::vector<std::uint32_t> q(m + 1, 0);
        for (std::size_t j = m + 1; j-- > 0;) {
            std::uint64_t top = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            std::uint64_t qhat = top / v[n - 1];
            std::uint64_t rhat = top % v[n - 1];
            while (qhat >= LIMB_BASE ||
                   qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
                --qhat;
                rhat += v[n - 1];
                if (rhat >= LIMB_BASE) break;
            }
            // u[j..j+n] -= qhat * v
            std::int64_t borrow = 0;
            std::uint64_t carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t p = qhat * v[i] + carry;
                carry = p >> 32;
                std::int64_t t = static_cast<std::int64_t>(u[i + j]) -
                                 static_cast<std::int64_t>(p & 0xffffffffu) - borrow;
                if (t < 0) {
                    t += static_cast<std::int64_t>(LIMB_BASE);
                    borrow = 1;
                } else {
                    borrow = 0;
                }
                u[i + j] = static_cast<std::uint32_t>(t);
            }
            std::int64_t t = static_cast<std::int64_t>(u[j + n]) -
                             static_cast<std::int64_t>(carry) - borrow;
            if (t < 0) {
                // qhat was one too large; add v back
                t += static_cast<std::int64_t>(LIMB_BASE);
                --qhat;
                std::uint64_t c2 = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t s = c2 + u[i + j] + v[i];
                    u[i + j] = static_cast<std::uint32_t>(s);
                    c2 = s >> 32;
                }
                t += static_cast<std::int64_t>(c2);
            }
            u[j + n] = static_cast<std::uint32_t>(t);
            q[j] = static_cast<std::uint32_t>(qhat);
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        res.quot.mag_ = std::move(q);
        // denormalize the remainder
        u.resize(n);
        std::vector<std::uint32_t> r(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            r[i] = shift ? (u[i] >> shift) : u[i];
            if (shift && i + 1 < n) r[i] |= u[i + 1] << (32 - shift);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        res.rem.mag_ = std::move(r);
    }
    res.quot.sign_ = res.quot.mag_.empty() ? 0 : num.sign_ * den.sign_;
    res.rem.sign_ = res.rem.mag_.empty() ? 0 : num.sign_;
    return res;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.sign_ = a.mag_.empty() ? 0 : 1;
    b.sign_ = b.mag_.empty() ? 0 : 1;
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt BigInt::pow(const BigInt& base, unsigned exp) {
    BigInt result(1), b = base;
    while (exp) {
        if (exp & 1u) result *= b;
        exp >>= 1u;
        if (exp) b *= b;
    }
    return result;
}

std::strong_ordering BigInt::operator<=>(const BigInt& rhs) const {
    if (sign_ != rhs.sign_) return sign_ <=> rhs.sign_;
    int c = cmp_mag(mag_, rhs.mag_) * sign_;
    return c <=> 0;
}

bool BigInt::fits_int64() const {
    if (mag_.size() > 2) return false;
    if (mag_.size() < 2) return true;
    std::uint64_t u = (static_cast<std::uint64_t>(mag_[1]) << 32) | mag_[0];
    return sign_ > 0 ? u <= 0x7fffffffffffffffull : u <= 0x8000000000000000ull;
}

std::int64_t BigInt::to_int64() const {
    std::uint64_t u = 0;
    if (!mag_.empty()) u = mag_[0];
    if (mag_.size() > 1) u |= static_cast<std::uint64_t>(mag_[1]) << 32;
    return static_cast<std::int64_t>(sign_ < 0 ? ~u + 1 : u); // two's complement negate
}

double BigInt::to_double() const {
    double r = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) r = r * 4294967296.0 + mag_[i];
    return sign_ < 0 ? -r : r;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint32_t> chunks; // base 10^9, little-endian
    std::vector<std::uint32_t> cur = mag_;
    while (!cur.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = cur.size(); i-- > 0;) {
            std::uint64_t x = (rem << 32) | cur[i];
            cur[i] = static_cast<std::uint32_t>(x / 1000000000u);
            rem = x % 1000000000u;
        }
        chunks.push_back(static_cast<std::uint32_t>(rem));
        while (!cur.empty() && cur.back() == 0) cur.pop_back();
    }
    std::string s = sign_ < 0 ? "-" : "";
    s += std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        s += std::string(9 - part.size(), '0') + part;
    }
    return s;
}

} // namespace distspec
