#include "distspec/exact.hpp"

#include "distspec/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

namespace distspec {

bool RatMatrix::is_symmetric() const {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

RatMatrix RatMatrix::from_distance(const DistanceMatrix& d) {
    RatMatrix m(d.n);
    for (int i = 0; i < d.n; ++i)
        for (int j = 0; j < d.n; ++j) m.at(i, j) = BigRational(d.at(i, j));
    return m;
}

IntMatrix IntMatrix::from_distance(const DistanceMatrix& d) {
    IntMatrix m(d.n);
    for (int i = 0; i < d.n; ++i)
        for (int j = 0; j < d.n; ++j) m.at(i, j) = BigInt(d.at(i, j));
    return m;
}

IntMatrix IntMatrix::adjacency(const Graph& g) {
    IntMatrix m(g.order());
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < g.order(); ++j) m.at(i, j) = BigInt(g.adjacent(i, j) ? 1 : 0);
    return m;
}

InertiaTriple inertia(RatMatrix m) {
    if (!m.is_symmetric()) throw DomainError("inertia requires a symmetric matrix");
    std::vector<int> active(m.n);
    std::iota(active.begin(), active.end(), 0);
    InertiaTriple sig;

    while (!active.empty()) {
        // diagonal pivot: largest absolute value, lowest index on ties
        int pivot = -1;
        BigRational best;
        for (int i : active) {
            const BigRational& di = m.at(i, i);
            if (di.is_zero()) continue;
            BigRational mag = di.abs();
            if (pivot < 0 || mag > best) {
                pivot = i;
                best = mag;
            }
        }
        if (pivot >= 0) {
            const BigRational d = m.at(pivot, pivot);
            (d.sign() > 0 ? sig.n_plus : sig.n_minus) += 1;
            std::vector<int> rest;
            rest.reserve(active.size() - 1);
            for (int i : active)
                if (i != pivot) rest.push_back(i);
            for (std::size_t a = 0; a < rest.size(); ++a) {
                int i = rest[a];
                if (m.at(i, pivot).is_zero()) continue;
                BigRational f = m.at(i, pivot) / d;
                for (std::size_t b = a; b < rest.size(); ++b) {
                    int j = rest[b];
                    BigRational upd = m.at(i, j) - f * m.at(pivot, j);
                    m.at(i, j) = upd;
                    if (i != j) m.at(j, i) = std::move(upd);
                }
            }
            active = std::move(rest);
            continue;
        }

        // all-zero diagonal: eliminate a hyperbolic pair on the largest
        // off-diagonal entry (lexicographic tie-break)
        int pi = -1, pj = -1;
        BigRational bestOff;
        for (std::size_t a = 0; a < active.size(); ++a)
            for (std::size_t b = a + 1; b < active.size(); ++b) {
                const BigRational& x = m.at(active[a], active[b]);
                if (x.is_zero()) continue;
                BigRational mag = x.abs();
                if (pi < 0 || mag > bestOff) {
                    pi = active[a];
                    pj = active[b];
                    bestOff = mag;
                }
            }
        if (pi < 0) {
            sig.n_zero += static_cast<int>(active.size());
            break;
        }
        const BigRational a = m.at(pi, pj);
        sig.n_plus += 1;
        sig.n_minus += 1;
        std::vector<int> rest;
        rest.reserve(active.size() - 2);
        for (int i : active)
            if (i != pi && i != pj) rest.push_back(i);
        for (std::size_t x = 0; x < rest.size(); ++x) {
            int u = rest[x];
            for (std::size_t y = x; y < rest.size(); ++y) {
                int v = rest[y];
                BigRational upd =
                    m.at(u, v) - (m.at(u, pi) * m.at(pj, v) + m.at(u, pj) * m.at(pi, v)) / a;
                m.at(u, v) = upd;
                if (u != v) m.at(v, u) = std::move(upd);
            }
        }
        active = std::move(rest);
    }
    return sig;
}

InertiaTriple inertia(const DistanceMatrix& d) { return inertia(RatMatrix::from_distance(d)); }

BigRational determinant(RatMatrix m) {
    const int n = m.n;
    BigRational det(1);
    int sign = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        BigRational best;
        for (int r = col; r < n; ++r) {
            if (m.at(r, col).is_zero()) continue;
            BigRational mag = m.at(r, col).abs();
            if (pivot < 0 || mag > best) {
                pivot = r;
                best = mag;
            }
        }
        if (pivot < 0) return BigRational(0);
        if (pivot != col) {
            for (int c = 0; c < n; ++c) std::swap(m.at(pivot, c), m.at(col, c));
            sign = -sign;
        }
        const BigRational& p = m.at(col, col);
        det *= p;
        for (int r = col + 1; r < n; ++r) {
            if (m.at(r, col).is_zero()) continue;
            BigRational f = m.at(r, col) / p;
            for (int c = col; c < n; ++c) m.at(r, c) -= f * m.at(col, c);
        }
    }
    return sign < 0 ? -det : det;
}

BigRational determinant(const DistanceMatrix& d) {
    return determinant(RatMatrix::from_distance(d));
}

IntPolynomial char_poly(const IntMatrix& m) {
    const int n = m.n;
    // Faddeev-LeVerrier: integer-preserving, c[n] = 1,
    // M_k = A (M_{k-1} + c_{n-k+1} I),  c_{n-k} = -tr(M_k)/k  (exact division)
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1);
    c[n] = BigInt(1);
    IntMatrix work(n); // M_{k-1} + c I
    IntMatrix prod(n);
    for (int k = 1; k <= n; ++k) {
        if (k == 1) {
            prod = m;
        } else {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    work.at(i, j) = prod.at(i, j);
                    if (i == j) work.at(i, j) += c[n - k + 1];
                }
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    BigInt s(0);
                    for (int l = 0; l < n; ++l) s += m.at(i, l) * work.at(l, j);
                    prod.at(i, j) = std::move(s);
                }
        }
        BigInt tr(0);
        for (int i = 0; i < n; ++i) tr += prod.at(i, i);
        c[n - k] = -(tr / BigInt(k));
    }
    IntPolynomial p;
    p.coeffs = std::move(c);
    while (!p.coeffs.empty() && p.coeffs.back().is_zero()) p.coeffs.pop_back();
    return p;
}

IntPolynomial char_poly(const DistanceMatrix& d) { return char_poly(IntMatrix::from_distance(d)); }

namespace {

int descartes_sign_changes(const std::vector<int>& signs) {
    int changes = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

} // namespace

InertiaTriple inertia_from_charpoly(const IntPolynomial& p) {
    if (p.is_zero()) throw DomainError("inertia of the zero polynomial");
    std::size_t first_nonzero = 0;
    while (p.coeffs[first_nonzero].is_zero()) ++first_nonzero;

    InertiaTriple sig;
    sig.n_zero = static_cast<int>(first_nonzero);
    std::vector<int> signs, alt_signs;
    for (std::size_t i = first_nonzero; i < p.coeffs.size(); ++i) {
        int s = p.coeffs[i].sign();
        signs.push_back(s);
        alt_signs.push_back((i - first_nonzero) % 2 ? -s : s); // p(-x)
    }
    sig.n_plus = descartes_sign_changes(signs);
    sig.n_minus = descartes_sign_changes(alt_signs);
    return sig;
}

std::vector<double> float_eigenvalues(std::vector<double> a, int n) {
    auto at = [&a, n](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
    double initial_off = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) initial_off += 2 * at(i, j) * at(i, j);
    double frob = initial_off;
    for (int i = 0; i < n; ++i) frob += at(i, i) * at(i, i);
    const double target = 1e-24 * frob + 1e-300; // (1e-12 * ||A||_F)^2

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += 2 * at(i, j) * at(i, j);
        if (off <= target) break;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (apq == 0.0) continue;
                double theta = (at(q, q) - at(p, p)) / (2 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double cosf = 1.0 / std::sqrt(t * t + 1.0);
                double sinf = t * cosf;
                for (int k = 0; k < n; ++k) {
                    double akp = at(k, p), akq = at(k, q);
                    at(k, p) = cosf * akp - sinf * akq;
                    at(k, q) = sinf * akp + cosf * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = cosf * apk - sinf * aqk;
                    at(q, k) = sinf * apk + cosf * aqk;
                }
            }
    }
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = at(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

std::vector<double> float_eigenvalues(const DistanceMatrix& d) {
    std::vector<double> a(d.d.begin(), d.d.end());
    return float_eigenvalues(std::move(a), d.n);
}

InertiaTriple inertia_small_int(const int* entries, int n) {
    // Intermediate Faddeev-LeVerrier entries are bounded by
    // 2^n (n max)^(n+1): coefficients are elementary symmetric functions
    // of eigenvalues |lambda| <= n max.  Keep that under 2^62.
    int max_entry = 1;
    for (int i = 0; i < n * n; ++i) max_entry = std::max(max_entry, std::abs(entries[i]));
    double bound = std::pow(2.0, n) *
                   std::pow(static_cast<double>(n) * max_entry, static_cast<double>(n) + 1);
    if (n > 12 || bound > 4.6e18)
        throw CapabilityError("matrix too large for the int64 inertia fast path");

    std::int64_t prod[144], work[144], c[13];
    c[n] = 1;
    for (int k = 1; k <= n; ++k) {
        if (k == 1) {
            for (int i = 0; i < n * n; ++i) prod[i] = entries[i];
        } else {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    work[i * n + j] = prod[i * n + j] + (i == j ? c[n - k + 1] : 0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    std::int64_t s = 0;
                    for (int l = 0; l < n; ++l)
                        s += static_cast<std::int64_t>(entries[i * n + l]) * work[l * n + j];
                    prod[i * n + j] = s;
                }
        }
        std::int64_t tr = 0;
        for (int i = 0; i < n; ++i) tr += prod[i * n + i];
        c[n - k] = -(tr / k);
    }

    InertiaTriple sig;
    int first_nonzero = 0;
    while (first_nonzero <= n && c[first_nonzero] == 0) ++first_nonzero;
    sig.n_zero = first_nonzero;
    int prev = 0, changes = 0, alt_prev = 0, alt_changes = 0;
    for (int i = first_nonzero; i <= n; ++i) {
        int s = c[i] > 0 ? 1 : (c[i] < 0 ? -1 : 0);
        if (s != 0) {
            if (prev != 0 && s != prev) ++changes;
            prev = s;
            int as = (i - first_nonzero) % 2 ? -s : s;
            if (alt_prev != 0 && as != alt_prev) ++alt_changes;
            alt_prev = as;
        }
    }
    sig.n_plus = changes;
    sig.n_minus = alt_changes;
    return sig;
}

InertiaTriple inertia_small_int(const DistanceMatrix& d) {
    return inertia_small_int(d.d.data(), d.n);
}

} // namespace distspec
