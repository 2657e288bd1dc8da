#include "distspec/srg.hpp"

#include "distspec/errors.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace distspec {

void check_feasible(const SrgParams& p) {
    if (p.v < 2 || p.k <= 0 || p.k >= p.v - 1)
        throw DomainError("SRG parameters need 0 < k < v-1");
    if (p.lambda < 0 || p.mu < 1)
        throw DomainError("SRG parameters need lambda >= 0 and mu >= 1");
    std::int64_t lhs = static_cast<std::int64_t>(p.k) * (p.k - p.lambda - 1);
    std::int64_t rhs = static_cast<std::int64_t>(p.v - p.k - 1) * p.mu;
    if (lhs != rhs)
        throw DomainError("infeasible SRG parameters: k(k-lambda-1) = " + std::to_string(lhs) +
                          " but (v-k-1)mu = " + std::to_string(rhs));
    std::int64_t disc = static_cast<std::int64_t>(p.lambda - p.mu) * (p.lambda - p.mu) +
                        4 * static_cast<std::int64_t>(p.k - p.mu);
    if (disc <= 0) throw DomainError("infeasible SRG parameters: nonpositive discriminant");
}

std::int64_t SpectrumTable::total_multiplicity() const {
    std::int64_t total = 0;
    for (const Entry& e : entries) total += e.multiplicity;
    return total;
}

InertiaTriple SpectrumTable::inertia() const {
    InertiaTriple sig;
    for (const Entry& e : entries) {
        int s = e.value.sign();
        if (s > 0)
            sig.n_plus += static_cast<int>(e.multiplicity);
        else if (s < 0)
            sig.n_minus += static_cast<int>(e.multiplicity);
        else
            sig.n_zero += static_cast<int>(e.multiplicity);
    }
    return sig;
}

bool SpectrumTable::trace_is_zero() const {
    BigRational rational_sum;
    std::map<std::int64_t, BigRational> radical_sums;
    for (const Entry& e : entries) {
        BigRational mult(e.multiplicity);
        rational_sum += e.value.rational_part() * mult;
        if (!e.value.is_rational())
            radical_sums[e.value.radicand()] += e.value.radical_coeff() * mult;
    }
    if (!rational_sum.is_zero()) return false;
    for (const auto& [d, coeff] : radical_sums)
        if (!coeff.is_zero()) return false;
    return true;
}

std::optional<SrgParams> detect_srg(const Graph& g) {
    const int n = g.order();
    int k = 0;
    if (n < 2 || !is_regular(g, &k) || k == 0 || k == n - 1) return std::nullopt;

    // common-neighbor counts straight from A^2 entries
    int lambda = -1, mu = -1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int common = 0;
            for (int w = 0; w < n; ++w)
                if (g.adjacent(u, w) && g.adjacent(v, w)) ++common;
            int& expected = g.adjacent(u, v) ? lambda : mu;
            if (expected < 0)
                expected = common;
            else if (expected != common)
                return std::nullopt;
        }
    if (lambda < 0 || mu < 1) return std::nullopt; // no edge, or disconnected (mu = 0)
    return SrgParams{n, k, lambda, mu};
}

SpectrumTable adjacency_spectrum(const SrgParams& p) {
    check_feasible(p);
    const std::int64_t diff = p.lambda - p.mu;
    const std::int64_t disc = diff * diff + 4 * static_cast<std::int64_t>(p.k - p.mu);
    const std::int64_t beta = 2 * static_cast<std::int64_t>(p.k) +
                              static_cast<std::int64_t>(p.v - 1) * diff;

    Surd theta(BigRational(diff), BigRational(1), disc);
    theta = theta * Surd(BigRational::of(1, 2));
    Surd tau(BigRational(diff), BigRational(-1), disc);
    tau = tau * Surd(BigRational::of(1, 2));

    std::int64_t m_theta, m_tau;
    if (theta.is_rational()) {
        // disc is a perfect square; integer multiplicities required
        std::int64_t s = 1;
        while (s * s < disc) ++s;
        std::int64_t num_theta = (p.v - 1) - beta / s;
        std::int64_t num_tau = (p.v - 1) + beta / s;
        if (beta % s != 0 || num_theta % 2 != 0 || num_tau % 2 != 0)
            throw DomainError("infeasible SRG parameters: non-integral eigenvalue multiplicity");
        m_theta = num_theta / 2;
        m_tau = num_tau / 2;
    } else {
        // irrational eigenvalues force the conference split
        if (beta != 0 || (p.v - 1) % 2 != 0)
            throw DomainError("infeasible SRG parameters: non-integral eigenvalue multiplicity");
        m_theta = m_tau = (p.v - 1) / 2;
    }
    if (m_theta < 0 || m_tau < 0)
        throw DomainError("infeasible SRG parameters: negative eigenvalue multiplicity");

    SpectrumTable table;
    table.entries.push_back({Surd(BigRational(p.k)), 1});
    if (m_theta > 0) table.entries.push_back({theta, m_theta});
    if (m_tau > 0) table.entries.push_back({tau, m_tau});
    return table;
}

Surd distance_eigenvalue_map(const SrgParams& p, const Surd& nu) {
    BigRational mu(p.mu);
    Surd quadratic = nu * nu * Surd(BigRational(2) / mu);
    Surd linear = nu * Surd(BigRational(1) - BigRational(2 * p.lambda) / mu);
    Surd constant(-(BigRational(2 * p.k) / mu));
    return quadratic + linear + constant;
}

SpectrumTable distance_spectrum_from_params(const SrgParams& p) {
    SpectrumTable adjacency = adjacency_spectrum(p);
    SpectrumTable table;
    for (const auto& [value, mult] : adjacency.entries) {
        Surd image = distance_eigenvalue_map(p, value);
        auto existing = std::find_if(table.entries.begin(), table.entries.end(),
                                     [&image](const auto& e) { return e.value == image; });
        if (existing != table.entries.end())
            existing->multiplicity += mult;
        else
            table.entries.push_back({image, mult});
    }
    std::sort(table.entries.begin(), table.entries.end(),
              [](const auto& x, const auto& y) { return (x.value - y.value).sign() > 0; });
    return table;
}

bool is_conference(const SrgParams& p) {
    return 2 * p.k == p.v - 1 && 4 * p.lambda == p.v - 5 && 4 * p.mu == p.v - 1;
}

SrgParams conference_params(int v) {
    if (v < 5 || v % 4 != 1)
        throw DomainError("conference graphs need v = 1 (mod 4), v >= 5; got v = " +
                          std::to_string(v));
    return SrgParams{v, (v - 1) / 2, (v - 5) / 4, (v - 1) / 4};
}

ConferenceSpectrum conference_distance_spectrum(int v) {
    ConferenceSpectrum result;
    result.distance = distance_spectrum_from_params(conference_params(v));
    result.inertia = result.distance.inertia();
    result.optimistic = result.inertia.n_plus > result.inertia.n_minus;
    return result;
}

FamilyM2Spectrum family_m2_spectrum(int m) {
    if (m <= 2) throw DomainError("the (m^2, 3(m-1), m, 6) family needs m > 2");
    FamilyM2Spectrum result;
    result.params = SrgParams{m * m, 3 * (m - 1), m, 6};
    result.distance = distance_spectrum_from_params(result.params);
    InertiaTriple sig = result.distance.inertia();
    result.gap = sig.n_plus - sig.n_minus;
    result.optimistic = result.gap > 0;
    return result;
}

} // namespace distspec
