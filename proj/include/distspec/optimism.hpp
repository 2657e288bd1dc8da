#ifndef DISTSPEC_OPTIMISM_HPP
#define DISTSPEC_OPTIMISM_HPP

#include "distspec/exact.hpp"
#include "distspec/graph.hpp"
#include "distspec/srg.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace distspec {

// Classification of one connected graph; the verdict n_plus > n_minus
// always comes from exact arithmetic.
struct OptimismReport {
    std::string graph6;
    int order = 0;
    InertiaTriple inertia;
    bool optimistic = false;
    int diameter = 0;
    std::optional<SrgParams> srg;
    std::optional<std::vector<double>> float_spectrum; // on request only
};

struct ClassifyOptions {
    bool attach_float = false;
    std::string graph6_echo; // reuse the input string; encoded when empty
};

// distance matrix -> exact congruence inertia -> verdict; throws
// DomainError on a disconnected graph.
OptimismReport classify(const Graph& g, const ClassifyOptions& options = {});

// {"graph6":..., "n":..., "n_plus":..., "n_zero":..., "n_minus":...,
//  "optimistic":..., "diameter":..., "srg":[v,k,lambda,mu]|null}
std::string to_json_line(const OptimismReport& report);

struct StreamOptions {
    bool emit_all = false;          // default predicate: optimistic only
    bool exact_only = false;        // disable the float screen
    bool attach_float = false;
    bool continue_on_error = false; // malformed lines counted, not fatal
    int parallelism = 1;
    double audit_fraction = 0.01;   // screen decisions re-checked exactly
    std::uint64_t seed = 0x5eedULL;
};

struct StreamSummary {
    std::uint64_t lines = 0;
    std::uint64_t decoded = 0;
    std::uint64_t malformed = 0;
    std::uint64_t disconnected_skipped = 0;
    std::uint64_t screened_out = 0;   // dropped by the float screen alone
    std::uint64_t exact_classified = 0;
    std::uint64_t audited = 0;
    std::uint64_t emitted = 0;
    std::uint64_t optimistic = 0;
};

// Reads graph6 lines, writes JSON-line reports for matching graphs in
// input order (byte-identical regardless of parallelism).  A float screen
// discards clearly non-optimistic graphs early; every emitted report and
// a deterministic audit_fraction sample of screen decisions go through
// exact inertia.  Throws ParseError with the line number on malformed
// input unless continue_on_error.
StreamSummary filter_stream(std::istream& in, std::ostream& out,
                            const StreamOptions& options = {});

// All connected labeled graphs of order n in ascending adjacency-mask
// order; n <= 8 (CapabilityError beyond: use an external generator and
// filter_stream).
void enumerate_labeled(int n, const std::function<void(const Graph&)>& fn);

struct ExhaustiveOptions {
    int parallelism = 1;
    double audit_fraction = 0.01;
    std::uint64_t seed = 0x5eedULL;
};

struct ExhaustiveSummary {
    int order = 0;
    std::uint64_t labeled_total = 0;
    std::uint64_t connected = 0;
    std::uint64_t optimistic = 0;
    std::uint64_t audited = 0;
    std::vector<std::string> optimistic_graph6; // exact-confirmed finds
};

// Scans every labeled graph of order n (n <= 8) for optimistic graphs.
// At this order the integer charpoly + Descartes route is exact and
// faster than a float screen, so every verdict is exact; a deterministic
// audit_fraction sample is re-checked against the congruence inertia and
// the float screen, and any positive is confirmed by congruence before
// being reported.
ExhaustiveSummary exhaustive_check(int n, const ExhaustiveOptions& options = {});

} // namespace distspec

#endif
