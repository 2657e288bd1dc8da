#ifndef DISTSPEC_SRG_HPP
#define DISTSPEC_SRG_HPP

#include "distspec/exact.hpp"
#include "distspec/graph.hpp"
#include "distspec/surd.hpp"

#include <optional>
#include <vector>

namespace distspec {

// Strongly regular graph parameters (v, k, lambda, mu), connected and
// non-complete: 0 < k < v-1, mu >= 1, k(k-lambda-1) = (v-k-1)mu and
// positive discriminant (lambda-mu)^2 + 4(k-mu).
struct SrgParams {
    int v = 0;
    int k = 0;
    int lambda = 0;
    int mu = 0;

    bool operator==(const SrgParams&) const = default;
};

// throws DomainError if the parameter identities fail
void check_feasible(const SrgParams& p);

// Eigenvalues with multiplicities; multiplicities sum to the matrix order
// and the weighted eigenvalue sum equals the trace (0 here).
struct SpectrumTable {
    struct Entry {
        Surd value;
        std::int64_t multiplicity;
    };
    std::vector<Entry> entries; // descending by value, pairwise distinct

    std::int64_t total_multiplicity() const;
    InertiaTriple inertia() const; // exact sign count
    bool trace_is_zero() const;    // sum of value*multiplicity == 0, exact
};

// Parameters iff g is k-regular with exact common-neighbor counts lambda /
// mu on adjacent / non-adjacent pairs; none for complete or disconnected
// graphs (mu undefined or 0).
std::optional<SrgParams> detect_srg(const Graph& g);

// Adjacency spectrum {k x1, theta, tau} with theta,tau = ((l-m) +-
// sqrt(D))/2; rejects parameter sets with non-integral multiplicities.
SpectrumTable adjacency_spectrum(const SrgParams& p);

// Proposition: nu -> (2/mu) nu^2 + (1 - 2 lambda/mu) nu - 2k/mu, evaluated
// exactly in Surd arithmetic.
Surd distance_eigenvalue_map(const SrgParams& p, const Surd& nu);

// Image of the adjacency spectrum under the map, multiplicities preserved,
// coincident images merged by exact equality.
SpectrumTable distance_spectrum_from_params(const SrgParams& p);

bool is_conference(const SrgParams& p);

// (v, (v-1)/2, (v-5)/4, (v-1)/4); requires v = 1 (mod 4), v >= 5.
SrgParams conference_params(int v);

struct ConferenceSpectrum {
    SpectrumTable distance;
    InertiaTriple inertia;
    bool optimistic = false; // n_plus > n_minus
};

// Distance spectrum {3(v-1)/2 x1, (-3+sqrt v)/2, (-3-sqrt v)/2 x (v-1)/2
// each}, recomputed through the parameter map.
ConferenceSpectrum conference_distance_spectrum(int v);

struct FamilyM2Spectrum {
    SrgParams params;          // (m^2, 3(m-1), m, 6)
    SpectrumTable distance;
    std::int64_t gap = 0;      // n_plus - n_minus = m^2 - 6m + 6
    bool optimistic = false;
};

// requires m > 2; recomputed via distance_spectrum_from_params
FamilyM2Spectrum family_m2_spectrum(int m);

} // namespace distspec

#endif
