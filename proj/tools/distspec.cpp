// distspec: exact distance-matrix spectra of graphs, strongly regular
// graph closed forms, Paley graph construction, and optimistic-graph
// search over graph6 streams.

#include "distspec/errors.hpp"
#include "distspec/exact.hpp"
#include "distspec/finite_field.hpp"
#include "distspec/graph.hpp"
#include "distspec/graph6.hpp"
#include "distspec/iso.hpp"
#include "distspec/optimism.hpp"
#include "distspec/srg.hpp"
#include "distspec/surd.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace distspec;

std::string decimal12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

nlohmann::ordered_json surd_json(const Surd& s) {
    Surd::QuadForm q = s.quad_form();
    return {{"a", q.a}, {"b", q.b}, {"d", q.d}, {"c", q.c}};
}

nlohmann::ordered_json spectrum_json(const SpectrumTable& table) {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& e : table.entries)
        entries.push_back({{"value", surd_json(e.value)},
                           {"symbolic", e.value.to_string()},
                           {"decimal", e.value.to_double()},
                           {"multiplicity", e.multiplicity}});
    return entries;
}

void print_spectrum(const SpectrumTable& table, const std::string& title) {
    std::cout << title << ":\n";
    for (const auto& e : table.entries)
        std::printf("  %-22s x %-5lld (%s)\n", e.value.to_string().c_str(),
                    static_cast<long long>(e.multiplicity),
                    decimal12(e.value.to_double()).c_str());
}

void print_report_human(const OptimismReport& r) {
    std::printf("%s  n=%d  diameter=%d  inertia=(%d,%d,%d)  optimistic=%s", r.graph6.c_str(),
                r.order, r.diameter, r.inertia.n_plus, r.inertia.n_zero, r.inertia.n_minus,
                r.optimistic ? "yes" : "no");
    if (r.srg)
        std::printf("  srg=(%d,%d,%d,%d)", r.srg->v, r.srg->k, r.srg->lambda, r.srg->mu);
    else
        std::printf("  srg=none");
    std::printf("\n");
    if (r.float_spectrum) {
        std::printf("  eigenvalues:");
        for (double x : *r.float_spectrum) std::printf(" %s", decimal12(x).c_str());
        std::printf("\n");
    }
}

void emit_report(const OptimismReport& r, bool json) {
    if (json)
        std::cout << to_json_line(r) << "\n";
    else
        print_report_human(r);
}

std::vector<std::string> gather_inputs(const std::vector<std::string>& args) {
    if (!args.empty()) return args;
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(std::cin, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

int run_classify(const std::vector<std::string>& inputs, bool json, bool attach_float,
                 bool continue_on_error) {
    int rc = 0;
    for (const std::string& text : gather_inputs(inputs)) {
        try {
            Graph g = decode_graph6(text);
            ClassifyOptions opt;
            opt.attach_float = attach_float;
            opt.graph6_echo = text;
            emit_report(classify(g, opt), json);
        } catch (const std::exception& e) {
            if (!continue_on_error) throw;
            std::cerr << "error: " << e.what() << "\n";
            rc = 2;
        }
    }
    return rc;
}

int run_paley(std::int64_t q, bool json, bool attach_float) {
    auto pp = factor_prime_power(q);
    if (!pp) throw DomainError("q must be a prime power, got " + std::to_string(q));
    FiniteField field(static_cast<int>(pp->p), pp->k);
    Graph g = paley_graph(field);
    ClassifyOptions opt;
    opt.attach_float = attach_float;
    OptimismReport report = classify(g, opt);
    if (json) {
        nlohmann::ordered_json j;
        j["q"] = q;
        j["p"] = pp->p;
        j["k"] = pp->k;
        std::vector<int> mod = field.modulus();
        j["modulus"] = mod; // constant coefficient first
        j["report"] = nlohmann::ordered_json::parse(to_json_line(report));
        std::cout << j.dump() << "\n";
    } else {
        std::cout << report.graph6 << "\n";
        print_report_human(report);
    }
    return 0;
}

void print_srg_tables(const SrgParams& p, bool json) {
    SpectrumTable adjacency = adjacency_spectrum(p);
    SpectrumTable distance = distance_spectrum_from_params(p);
    InertiaTriple sig = distance.inertia();
    std::int64_t gap = sig.n_plus - sig.n_minus;
    if (json) {
        nlohmann::ordered_json j;
        j["params"] = {p.v, p.k, p.lambda, p.mu};
        j["conference"] = is_conference(p);
        j["adjacency_spectrum"] = spectrum_json(adjacency);
        j["distance_spectrum"] = spectrum_json(distance);
        j["n_plus"] = sig.n_plus;
        j["n_zero"] = sig.n_zero;
        j["n_minus"] = sig.n_minus;
        j["gap"] = gap;
        j["optimistic"] = sig.n_plus > sig.n_minus;
        std::cout << j.dump() << "\n";
    } else {
        std::printf("SRG(%d,%d,%d,%d)%s\n", p.v, p.k, p.lambda, p.mu,
                    is_conference(p) ? "  [conference]" : "");
        print_spectrum(adjacency, "adjacency spectrum");
        print_spectrum(distance, "distance spectrum");
        std::printf("inertia: n+ = %d, n0 = %d, n- = %d\n", sig.n_plus, sig.n_zero, sig.n_minus);
        std::printf("gap n+ - n- = %lld\n", static_cast<long long>(gap));
        std::printf("optimistic: %s\n", sig.n_plus > sig.n_minus ? "yes" : "no");
    }
}

int run_srg(const std::string& params_text, bool json) {
    SrgParams p;
    if (std::sscanf(params_text.c_str(), "%d,%d,%d,%d", &p.v, &p.k, &p.lambda, &p.mu) != 4)
        throw ParseError("--params expects v,k,lambda,mu");
    check_feasible(p);
    print_srg_tables(p, json);
    return 0;
}

int run_conference(int v, bool json) {
    SrgParams p = conference_params(v);
    print_srg_tables(p, json);
    return 0;
}

int run_family_m2(int m, bool json) {
    FamilyM2Spectrum fam = family_m2_spectrum(m);
    if (json) {
        nlohmann::ordered_json j;
        j["m"] = m;
        j["params"] = {fam.params.v, fam.params.k, fam.params.lambda, fam.params.mu};
        j["distance_spectrum"] = spectrum_json(fam.distance);
        j["gap"] = fam.gap;
        j["optimistic"] = fam.optimistic;
        std::cout << j.dump() << "\n";
    } else {
        std::printf("family (m^2, 3(m-1), m, 6) at m = %d -> SRG(%d,%d,%d,%d)\n", m, fam.params.v,
                    fam.params.k, fam.params.lambda, fam.params.mu);
        print_spectrum(fam.distance, "distance spectrum");
        std::printf("gap n+ - n- = %lld\n", static_cast<long long>(fam.gap));
        std::printf("optimistic: %s\n", fam.optimistic ? "yes" : "no");
    }
    return 0;
}

int run_search(int n, int threads, double audit, std::uint64_t seed, bool json) {
    ExhaustiveOptions opt;
    opt.parallelism = threads;
    opt.audit_fraction = audit;
    opt.seed = seed;
    ExhaustiveSummary s = exhaustive_check(n, opt);
    if (json) {
        nlohmann::ordered_json j;
        j["order"] = s.order;
        j["labeled_total"] = s.labeled_total;
        j["connected"] = s.connected;
        j["optimistic"] = s.optimistic;
        j["audited"] = s.audited;
        j["optimistic_graph6"] = s.optimistic_graph6;
        std::cout << j.dump() << "\n";
    } else {
        std::printf("order %d: %llu labeled graphs, %llu connected, optimistic found: %llu\n",
                    s.order, static_cast<unsigned long long>(s.labeled_total),
                    static_cast<unsigned long long>(s.connected),
                    static_cast<unsigned long long>(s.optimistic));
        for (const auto& g6 : s.optimistic_graph6) std::printf("  %s\n", g6.c_str());
    }
    return 0;
}

int run_filter(const std::string& path, const StreamOptions& opt) {
    StreamSummary s;
    if (path.empty() || path == "-") {
        s = filter_stream(std::cin, std::cout, opt);
    } else {
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open input file: " + path);
        s = filter_stream(in, std::cout, opt);
    }
    std::cerr << "filter summary: lines=" << s.lines << " decoded=" << s.decoded
              << " malformed=" << s.malformed << " disconnected=" << s.disconnected_skipped
              << " screened_out=" << s.screened_out << " exact=" << s.exact_classified
              << " audited=" << s.audited << " emitted=" << s.emitted
              << " optimistic=" << s.optimistic << "\n";
    return s.malformed > 0 ? 2 : 0;
}

int run_props(const std::vector<std::string>& inputs, bool json) {
    for (const std::string& text : gather_inputs(inputs)) {
        Graph g = decode_graph6(text);
        bool connected = is_connected(g);
        std::optional<int> dia;
        if (connected) dia = diameter(g);
        bool self_comp = is_self_complementary(g);
        bool transitive = is_vertex_transitive(g);
        auto srg = detect_srg(g);
        if (json) {
            nlohmann::ordered_json j;
            j["graph6"] = text;
            j["n"] = g.order();
            j["edges"] = g.edge_count();
            j["connected"] = connected;
            if (dia)
                j["diameter"] = *dia;
            else
                j["diameter"] = nullptr;
            j["self_complementary"] = self_comp;
            j["vertex_transitive"] = transitive;
            if (srg)
                j["srg"] = {srg->v, srg->k, srg->lambda, srg->mu};
            else
                j["srg"] = nullptr;
            std::cout << j.dump() << "\n";
        } else {
            std::printf("graph6: %s\n", text.c_str());
            std::printf("  n: %d, edges: %lld\n", g.order(),
                        static_cast<long long>(g.edge_count()));
            if (dia)
                std::printf("  diameter: %d\n", *dia);
            else
                std::printf("  diameter: undefined (disconnected)\n");
            std::printf("  self-complementary: %s\n", self_comp ? "yes" : "no");
            std::printf("  vertex-transitive: %s\n", transitive ? "yes" : "no");
            if (srg)
                std::printf("  srg: (%d,%d,%d,%d)\n", srg->v, srg->k, srg->lambda, srg->mu);
            else
                std::printf("  srg: none\n");
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"distspec: exact distance-matrix spectra and optimistic-graph search.\n"
                 "Pipes with nauty's generator: geng -c <n> | distspec filter"};
    app.require_subcommand(1);
    app.fallthrough(); // let --json appear after the subcommand too

    bool json = false;
    app.add_flag("--json", json, "emit JSON lines instead of human-readable tables");

    // classify
    auto* cmd_classify = app.add_subcommand("classify", "exact optimism report for graph6 input");
    std::vector<std::string> classify_args;
    bool classify_float = false, classify_cont = false;
    cmd_classify->add_option("graph6", classify_args, "graph6 strings (stdin when omitted)");
    cmd_classify->add_flag("--float", classify_float, "attach floating eigenvalues");
    cmd_classify->add_flag("--continue-on-error", classify_cont,
                           "report bad inputs on stderr and keep going");

    // paley
    auto* cmd_paley = app.add_subcommand("paley", "construct the Paley graph P(q)");
    std::int64_t paley_q = 0;
    bool paley_float = false;
    cmd_paley->add_option("--q", paley_q, "prime power, q = 1 (mod 4)")->required();
    cmd_paley->add_flag("--float", paley_float, "attach floating eigenvalues");

    // srg
    auto* cmd_srg = app.add_subcommand("srg", "closed-form spectra from SRG parameters");
    std::string srg_params;
    cmd_srg->add_option("--params", srg_params, "v,k,lambda,mu")->required();

    // conference
    auto* cmd_conf = app.add_subcommand("conference", "conference-graph distance spectrum");
    int conf_v = 0;
    cmd_conf->add_option("--v", conf_v, "order, v = 1 (mod 4), v >= 5")->required();

    // family-m2
    auto* cmd_fam = app.add_subcommand("family-m2", "the (m^2, 3(m-1), m, 6) family");
    int fam_m = 0;
    cmd_fam->add_option("--m", fam_m, "family parameter, m > 2")->required();

    // search
    auto* cmd_search = app.add_subcommand("search", "exhaustive scan of all labeled graphs");
    int search_n = 0, search_threads = 0;
    double search_audit = 0.01;
    std::uint64_t search_seed = 0x5eedULL;
    cmd_search->add_option("--n", search_n, "order to scan (n <= 8)")->required();
    cmd_search->add_option("--threads", search_threads, "worker threads (0 = hardware)");
    cmd_search->add_option("--audit", search_audit, "screen audit fraction (default 0.01)");
    cmd_search->add_option("--seed", search_seed, "audit sampling seed");

    // filter
    auto* cmd_filter = app.add_subcommand("filter", "filter a graph6 stream (JSON lines out)");
    std::string filter_path;
    StreamOptions stream_opt;
    int filter_threads = 1;
    cmd_filter->add_option("input", filter_path, "input file (stdin when omitted)");
    cmd_filter->add_flag("--all", stream_opt.emit_all, "emit every report, not just optimistic");
    cmd_filter->add_flag("--exact-only", stream_opt.exact_only, "skip the float screen");
    cmd_filter->add_flag("--float", stream_opt.attach_float, "attach floating eigenvalues");
    cmd_filter->add_flag("--continue-on-error", stream_opt.continue_on_error,
                         "count malformed lines instead of aborting");
    cmd_filter->add_option("--threads", filter_threads, "worker threads (0 = hardware)");
    cmd_filter->add_option("--audit", stream_opt.audit_fraction,
                           "screen audit fraction (default 0.01)");
    cmd_filter->add_option("--seed", stream_opt.seed, "audit sampling seed");

    // props
    auto* cmd_props = app.add_subcommand("props", "diameter, self-complement, transitivity, SRG");
    std::vector<std::string> props_args;
    cmd_props->add_option("graph6", props_args, "graph6 strings (stdin when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_classify) return run_classify(classify_args, json, classify_float, classify_cont);
        if (*cmd_paley) return run_paley(paley_q, json, paley_float);
        if (*cmd_srg) return run_srg(srg_params, json);
        if (*cmd_conf) return run_conference(conf_v, json);
        if (*cmd_fam) return run_family_m2(fam_m, json);
        if (*cmd_search)
            return run_search(search_n, search_threads, search_audit, search_seed, json);
        if (*cmd_filter) {
            stream_opt.parallelism = filter_threads;
            return run_filter(filter_path, stream_opt);
        }
        if (*cmd_props) return run_props(props_args, json);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const CapabilityError& e) {
        std::cerr << "capability exceeded: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
