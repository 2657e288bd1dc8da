#include "distspec/optimism.hpp"

#include "distspec/errors.hpp"
#include "distspec/graph6.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <istream>
#include <mutex>
#include <ostream>
#include <thread>

namespace distspec {

namespace {

constexpr double SCREEN_MARGIN = 1e-6;

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

bool sampled(std::uint64_t seed, std::uint64_t index, double fraction) {
    if (fraction <= 0) return false;
    if (fraction >= 1) return true;
    return (splitmix(seed ^ index) >> 11) <
           static_cast<std::uint64_t>(fraction * 9007199254740992.0); // 2^53
}

struct ScreenVerdict {
    bool decisive = false;
    bool optimistic = false;
};

ScreenVerdict screen(const DistanceMatrix& d) {
    std::vector<double> eig = float_eigenvalues(d);
    ScreenVerdict v;
    int pos = 0, neg = 0;
    for (double x : eig) {
        if (std::abs(x) <= SCREEN_MARGIN) return v; // too close to zero
        (x > 0 ? pos : neg) += 1;
    }
    v.decisive = true;
    v.optimistic = pos > neg;
    return v;
}

int thread_count(int requested) {
    if (requested > 1) return requested;
    if (requested == 1) return 1;
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

} // namespace

OptimismReport classify(const Graph& g, const ClassifyOptions& options) {
    OptimismReport report;
    report.graph6 = options.graph6_echo.empty() ? encode_graph6(g) : options.graph6_echo;
    report.order = g.order();
    DistanceMatrix d = distance_matrix(g); // throws DomainError if disconnected
    report.diameter = d.max_entry();
    report.inertia = inertia(d);
    report.optimistic = report.inertia.n_plus > report.inertia.n_minus;
    report.srg = detect_srg(g);
    if (options.attach_float) report.float_spectrum = float_eigenvalues(d);
    return report;
}

std::string to_json_line(const OptimismReport& report) {
    nlohmann::ordered_json j;
    j["graph6"] = report.graph6;
    j["n"] = report.order;
    j["n_plus"] = report.inertia.n_plus;
    j["n_zero"] = report.inertia.n_zero;
    j["n_minus"] = report.inertia.n_minus;
    j["optimistic"] = report.optimistic;
    j["diameter"] = report.diameter;
    if (report.srg)
        j["srg"] = {report.srg->v, report.srg->k, report.srg->lambda, report.srg->mu};
    else
        j["srg"] = nullptr;
    if (report.float_spectrum) j["float_spectrum"] = *report.float_spectrum;
    return j.dump();
}

namespace {

enum class LineStatus { Emitted, Silent, Disconnected, Malformed };

struct LineResult {
    LineStatus status = LineStatus::Silent;
    bool screened_out = false;
    bool exact = false;
    bool audited = false;
    bool optimistic = false;
    std::string payload; // json line or error message
};

LineResult process_line(const std::string& line, std::uint64_t line_no,
                        const StreamOptions& options) {
    LineResult r;
    Graph g(1);
    try {
        g = decode_graph6(line);
    } catch (const ParseError& e) {
        r.status = LineStatus::Malformed;
        r.payload = e.what();
        return r;
    }
    if (!is_connected(g)) {
        r.status = LineStatus::Disconnected;
        return r;
    }

    if (!options.exact_only && !options.emit_all) {
        DistanceMatrix d = distance_matrix(g);
        ScreenVerdict sv = screen(d);
        if (sv.decisive && !sv.optimistic) {
            r.screened_out = true;
            if (sampled(options.seed, line_no, options.audit_fraction)) {
                r.audited = true;
                InertiaTriple exact_sig = inertia(d);
                if ((exact_sig.n_plus > exact_sig.n_minus) != sv.optimistic)
                    throw std::logic_error("float screen contradicted exact inertia on line " +
                                           std::to_string(line_no) + ": " + line);
            }
            r.status = LineStatus::Silent;
            return r;
        }
    }

    ClassifyOptions copt;
    copt.attach_float = options.attach_float;
    copt.graph6_echo = line;
    OptimismReport report = classify(g, copt);
    r.exact = true;
    r.optimistic = report.optimistic;
    if (report.optimistic || options.emit_all) {
        r.status = LineStatus::Emitted;
        r.payload = to_json_line(report);
    }
    return r;
}

} // namespace

StreamSummary filter_stream(std::istream& in, std::ostream& out, const StreamOptions& options) {
    StreamSummary summary;
    const int workers = thread_count(options.parallelism);
    const std::size_t batch_size = 4096;

    std::vector<std::string> batch;
    std::vector<LineResult> results;
    batch.reserve(batch_size);

    std::uint64_t line_base = 1; // 1-based line numbers
    std::string line;
    bool more = true;
    while (more) {
        batch.clear();
        while (batch.size() < batch_size && std::getline(in, line)) batch.push_back(line);
        more = batch.size() == batch_size;
        if (batch.empty()) break;

        results.assign(batch.size(), {});
        if (workers == 1 || batch.size() == 1) {
            for (std::size_t i = 0; i < batch.size(); ++i)
                results[i] = process_line(batch[i], line_base + i, options);
        } else {
            std::atomic<std::size_t> next{0};
            std::vector<std::thread> pool;
            std::exception_ptr failure;
            std::mutex failure_mutex;
            for (int w = 0; w < workers; ++w)
                pool.emplace_back([&] {
                    for (;;) {
                        std::size_t i = next.fetch_add(1);
                        if (i >= batch.size()) return;
                        try {
                            results[i] = process_line(batch[i], line_base + i, options);
                        } catch (...) {
                            std::lock_guard<std::mutex> lock(failure_mutex);
                            if (!failure) failure = std::current_exception();
                            return;
                        }
                    }
                });
            for (auto& t : pool) t.join();
            if (failure) std::rethrow_exception(failure);
        }

        for (std::size_t i = 0; i < batch.size(); ++i) {
            const LineResult& r = results[i];
            ++summary.lines;
            switch (r.status) {
                case LineStatus::Malformed:
                    ++summary.malformed;
                    if (!options.continue_on_error)
                        throw ParseError("line " + std::to_string(line_base + i) + ": " +
                                         r.payload);
                    continue;
                case LineStatus::Disconnected:
                    ++summary.decoded;
                    ++summary.disconnected_skipped;
                    continue;
                default:
                    break;
            }
            ++summary.decoded;
            summary.screened_out += r.screened_out;
            summary.exact_classified += r.exact;
            summary.audited += r.audited;
            summary.optimistic += r.optimistic;
            if (r.status == LineStatus::Emitted) {
                ++summary.emitted;
                out << r.payload << '\n';
            }
        }
        line_base += batch.size();
    }
    return summary;
}

void enumerate_labeled(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 1) throw DomainError("order must be >= 1");
    if (n > 8)
        throw CapabilityError("built-in enumeration capped at n = 8; pipe an external "
                              "generator through the stream filter for larger orders");
    const int bits = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << bits;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph g(n);
        for (int t = 0; t < bits; ++t)
            if ((mask >> t) & 1u) g.set_triangle_bit(t, true);
        if (is_connected(g)) fn(g);
    }
}

namespace {

// Stack-only classification core for the exhaustive scan (n <= 8):
// adjacency rows and BFS as bitmasks, distances in a flat array.

struct SmallGraph {
    int n;
    unsigned rows[8];
    int dist[64];

    // false if disconnected
    bool build(std::uint64_t mask) {
        for (int i = 0; i < n; ++i) rows[i] = 0;
        int t = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++t)
                if ((mask >> t) & 1u) {
                    rows[i] |= 1u << j;
                    rows[j] |= 1u << i;
                }
        const unsigned all = (1u << n) - 1;
        unsigned visited = 1u, frontier = 1u;
        while (frontier) {
            unsigned next = 0;
            for (unsigned f = frontier; f;) {
                int v = __builtin_ctz(f);
                f &= f - 1;
                next |= rows[v];
            }
            frontier = next & ~visited;
            visited |= frontier;
        }
        if (visited != all) return false;

        for (int s = 0; s < n; ++s) {
            unsigned seen = 1u << s;
            unsigned front = seen;
            int level = 0;
            dist[s * n + s] = 0;
            while (seen != all) {
                unsigned next = 0;
                for (unsigned f = front; f;) {
                    int v = __builtin_ctz(f);
                    f &= f - 1;
                    next |= rows[v];
                }
                front = next & ~seen;
                ++level;
                for (unsigned f = front; f;) {
                    int v = __builtin_ctz(f);
                    f &= f - 1;
                    dist[s * n + v] = level;
                }
                seen |= front;
            }
        }
        return true;
    }

    DistanceMatrix to_distance_matrix() const {
        DistanceMatrix d;
        d.n = n;
        d.d.assign(dist, dist + n * n);
        return d;
    }

    Graph to_graph(std::uint64_t mask) const {
        Graph g(n);
        for (int t = 0; t < n * (n - 1) / 2; ++t)
            if ((mask >> t) & 1u) g.set_triangle_bit(t, true);
        return g;
    }
};

// cyclic Jacobi on a stack buffer; returns false when any eigenvalue
// lands inside the screen margin
bool screen_small(const int* dist, int n, bool& optimistic) {
    double a[64];
    for (int i = 0; i < n * n; ++i) a[i] = dist[i];
    for (int sweep = 0; sweep < 30; ++sweep) {
        double largest_off = 0;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = a[p * n + q];
                if (apq == 0.0) continue;
                largest_off = std::max(largest_off, std::abs(apq));
                double theta = (a[q * n + q] - a[p * n + p]) / (2 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a[k * n + p], akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a[p * n + k], aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        // eigenvalue perturbation from the residual off-diagonal mass is
        // far below the screen margin once rotations go quiet
        if (largest_off < 1e-9) break;
    }
    int pos = 0, neg = 0;
    for (int i = 0; i < n; ++i) {
        double x = a[i * n + i];
        if (std::abs(x) <= SCREEN_MARGIN) return false;
        (x > 0 ? pos : neg) += 1;
    }
    optimistic = pos > neg;
    return true;
}

} // namespace

ExhaustiveSummary exhaustive_check(int n, const ExhaustiveOptions& options) {
    if (n < 1) throw DomainError("order must be >= 1");
    if (n > 8)
        throw CapabilityError("exhaustive search capped at n = 8; pipe an external generator "
                              "through the stream filter for larger orders");

    const int bits = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << bits;
    const int workers = thread_count(options.parallelism);

    ExhaustiveSummary summary;
    summary.order = n;
    summary.labeled_total = total;

    std::atomic<std::uint64_t> next{0};
    std::mutex merge_mutex;
    const std::uint64_t chunk = 1u << 14;

    auto worker = [&] {
        ExhaustiveSummary local;
        SmallGraph sg;
        sg.n = n;
        for (;;) {
            std::uint64_t begin = next.fetch_add(chunk);
            if (begin >= total) break;
            std::uint64_t end = std::min(begin + chunk, total);
            for (std::uint64_t mask = begin; mask < end; ++mask) {
                if (n > 1 && __builtin_popcountll(mask) < n - 1) continue; // too few edges
                if (!sg.build(mask)) continue;
                ++local.connected;

                InertiaTriple sig = inertia_small_int(sg.dist, n);

                if (sampled(options.seed, mask, options.audit_fraction)) {
                    // cross-check the fast exact route against the
                    // congruence route and the float screen
                    ++local.audited;
                    InertiaTriple congruence = inertia(sg.to_distance_matrix());
                    if (congruence != sig)
                        throw std::logic_error(
                            "charpoly inertia contradicted congruence inertia at mask " +
                            std::to_string(mask));
                    bool screen_optimistic = false;
                    if (screen_small(sg.dist, n, screen_optimistic) &&
                        screen_optimistic != (sig.n_plus > sig.n_minus))
                        throw std::logic_error(
                            "float screen contradicted exact inertia at mask " +
                            std::to_string(mask));
                }

                if (sig.n_plus > sig.n_minus) {
                    Graph g = sg.to_graph(mask);
                    InertiaTriple confirm = inertia(distance_matrix(g));
                    if (confirm.n_plus > confirm.n_minus) {
                        ++local.optimistic;
                        local.optimistic_graph6.push_back(encode_graph6(g));
                    }
                }
            }
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        summary.connected += local.connected;
        summary.optimistic += local.optimistic;
        summary.audited += local.audited;
        for (auto& s : local.optimistic_graph6)
            summary.optimistic_graph6.push_back(std::move(s));
    };

    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        std::exception_ptr failure;
        std::mutex failure_mutex;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                try {
                    worker();
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }
    std::sort(summary.optimistic_graph6.begin(), summary.optimistic_graph6.end());
    return summary;
}

} // namespace distspec
