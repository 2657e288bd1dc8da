#include "distspec/finite_field.hpp"

#include "distspec/errors.hpp"

#include <string>
#include <unordered_set>

namespace distspec {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

std::optional<PrimePower> factor_prime_power(std::int64_t q) {
    if (q < 2) return std::nullopt;
    std::int64_t p = q;
    for (std::int64_t f = 2; f * f <= q; ++f)
        if (q % f == 0) {
            p = f;
            break;
        }
    int k = 0;
    std::int64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) return std::nullopt;
    return PrimePower{p, k};
}

namespace {

// polynomials over F_p as coefficient vectors, constant first, no
// trailing zeros

std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
    while (a.size() >= m.size()) {
        int lead = a.back();
        if (lead != 0) {
            std::size_t shift = a.size() - m.size();
            for (std::size_t i = 0; i < m.size(); ++i)
                a[shift + i] = static_cast<int>(
                    ((a[shift + i] - static_cast<std::int64_t>(lead) * m[i]) % p + p) % p);
        }
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& m, int p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = static_cast<int>(
                (prod[i + j] + static_cast<std::int64_t>(a[i]) * b[j]) % p);
    return poly_mod(std::move(prod), m, p);
}

// has the candidate a monic divisor of degree 1..deg/2?
bool is_irreducible(const std::vector<int>& candidate, int p) {
    int deg = static_cast<int>(candidate.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        // all monic polynomials of degree d
        std::int64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::int64_t code = 0; code < count; ++code) {
            std::vector<int> divisor(d + 1);
            std::int64_t c = code;
            for (int i = 0; i < d; ++i) {
                divisor[i] = static_cast<int>(c % p);
                c /= p;
            }
            divisor[d] = 1;
            if (poly_mod(candidate, divisor, p).empty()) return false;
        }
    }
    return true;
}

} // namespace

FiniteField::FiniteField(int p, int k, std::vector<int> modulus) : FiniteField(p, k) {
    if (static_cast<int>(modulus.size()) != k + 1 || modulus.back() != 1)
        throw DomainError("modulus must be monic of degree k");
    for (int c : modulus)
        if (c < 0 || c >= p) throw DomainError("modulus coefficients must lie in 0..p-1");
    if (k > 1 && !is_irreducible(modulus, p))
        throw DomainError("modulus polynomial is reducible");
    modulus_ = std::move(modulus);
}

FiniteField::FiniteField(int p, int k) : p_(p), k_(k) {
    if (!is_prime(p)) throw DomainError("field characteristic must be prime, got " +
                                        std::to_string(p));
    if (k < 1) throw DomainError("field degree must be >= 1");
    q_ = 1;
    for (int i = 0; i < k; ++i) {
        q_ *= p;
        if (q_ > 1'000'000) throw CapabilityError("field size beyond desk scale");
    }

    if (k == 1) {
        modulus_ = {0, 1}; // x
        return;
    }
    // smallest monic irreducible of degree k: count the non-leading
    // coefficients upward as a base-p number (constant coefficient in the
    // lowest digit), which is lexicographic on (c_{k-1}, ..., c_0)
    std::int64_t count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (std::int64_t code = 0; code < count; ++code) {
        std::vector<int> candidate(k + 1);
        std::int64_t rem = code;
        for (int i = 0; i < k; ++i) {
            candidate[i] = static_cast<int>(rem % p);
            rem /= p;
        }
        candidate[k] = 1;
        if (is_irreducible(candidate, p)) {
            modulus_ = candidate;
            return;
        }
    }
    throw DomainError("no irreducible polynomial found"); // unreachable for prime p
}

std::vector<int> FiniteField::to_poly(std::int64_t a) const {
    std::vector<int> c(k_);
    for (int i = 0; i < k_; ++i) {
        c[i] = static_cast<int>(a % p_);
        a /= p_;
    }
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

std::int64_t FiniteField::from_poly(const std::vector<int>& c) const {
    std::int64_t a = 0;
    for (std::size_t i = c.size(); i-- > 0;) a = a * p_ + c[i];
    return a;
}

std::int64_t FiniteField::add(std::int64_t a, std::int64_t b) const {
    std::int64_t r = 0, scale = 1;
    for (int i = 0; i < k_; ++i) {
        r += scale * ((a % p_ + b % p_) % p_);
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return r;
}

std::int64_t FiniteField::sub(std::int64_t a, std::int64_t b) const {
    std::int64_t r = 0, scale = 1;
    for (int i = 0; i < k_; ++i) {
        r += scale * (((a % p_ - b % p_) % p_ + p_) % p_);
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return r;
}

std::int64_t FiniteField::mul(std::int64_t a, std::int64_t b) const {
    return from_poly(poly_mul_mod(to_poly(a), to_poly(b), modulus_, p_));
}

std::int64_t FiniteField::pow(std::int64_t a, std::int64_t e) const {
    std::int64_t result = 1, base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::int64_t FiniteField::inverse(std::int64_t a) const {
    if (a == 0) throw DomainError("zero has no multiplicative inverse");
    return pow(a, q_ - 2);
}

bool FiniteField::is_square(std::int64_t a) const {
    if (q_ % 2 == 0) throw DomainError("squareness test undefined in characteristic 2");
    if (a == 0) throw DomainError("squareness test excludes zero");
    return pow(a, (q_ - 1) / 2) == 1;
}

FiniteField make_field(int p, int k) { return FiniteField(p, k); }

Graph paley_graph(const FiniteField& f) {
    const std::int64_t q = f.size();
    if (q % 4 != 1)
        throw DomainError("Paley graph needs field size = 1 (mod 4), got " + std::to_string(q));

    std::unordered_set<std::int64_t> squares;
    for (std::int64_t x = 1; x < q; ++x) squares.insert(f.mul(x, x));

    Graph g(static_cast<int>(q));
    for (std::int64_t b = 1; b < q; ++b)
        for (std::int64_t a = 0; a < b; ++a)
            if (squares.count(f.sub(a, b)))
                g.set_edge(static_cast<int>(a), static_cast<int>(b));
    return g;
}

Graph paley_graph(std::int64_t q) {
    auto pp = factor_prime_power(q);
    if (!pp) throw DomainError("Paley graph needs a prime power order, got " + std::to_string(q));
    FiniteField f(static_cast<int>(pp->p), pp->k);
    return paley_graph(f);
}

} // namespace distspec
