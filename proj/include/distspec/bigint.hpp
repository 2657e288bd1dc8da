#ifndef DISTSPEC_BIGINT_HPP
#define DISTSPEC_BIGINT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace distspec {

// Signed arbitrary-precision integer, sign-magnitude over 32-bit limbs
// (little-endian, no leading zero limbs, zero has an empty limb vector).
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v);
    static BigInt from_string(std::string_view text); // decimal, optional '-'

    int sign() const { return sign_; } // -1, 0, +1
    bool is_zero() const { return sign_ == 0; }
    bool is_one() const;

    BigInt operator-() const;
    BigInt abs() const;

    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    // Truncated division: quotient rounds toward zero, remainder has
    // the dividend's sign, |remainder| < |divisor|.
    struct DivResult;
    static DivResult divmod(const BigInt& num, const BigInt& den);

    static BigInt gcd(BigInt a, BigInt b); // nonnegative
    static BigInt pow(const BigInt& base, unsigned exp);

    std::strong_ordering operator<=>(const BigInt& rhs) const;
    bool operator==(const BigInt& rhs) const = default;

    bool fits_int64() const;
    std::int64_t to_int64() const; // caller checked fits_int64
    double to_double() const;
    std::string to_string() const;

    std::size_t limb_count() const { return mag_.size(); }

private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
};

inline BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r = a;
    r *= b;
    return r;
}

struct BigInt::DivResult {
    BigInt quot;
    BigInt rem;
};

inline BigInt operator/(const BigInt& a, const BigInt& b) { return BigInt::divmod(a, b).quot; }
inline BigInt operator%(const BigInt& a, const BigInt& b) { return BigInt::divmod(a, b).rem; }

} // namespace distspec

#endif
