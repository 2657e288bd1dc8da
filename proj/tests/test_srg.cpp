#include "distspec/errors.hpp"
#include "distspec/exact.hpp"
#include "distspec/finite_field.hpp"
#include "distspec/graph.hpp"
#include "distspec/iso.hpp"
#include "distspec/srg.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>

using namespace distspec;

namespace {

Surd halves(std::int64_t a, std::int64_t b, std::int64_t d) {
    return Surd(BigRational::of(a, 2), BigRational::of(b, 2), d);
}

const SpectrumTable::Entry* find_value(const SpectrumTable& t, const Surd& v) {
    for (const auto& e : t.entries)
        if (e.value == v) return &e;
    return nullptr;
}

void check_entry(const SpectrumTable& t, const Surd& v, std::int64_t mult) {
    const auto* e = find_value(t, v);
    REQUIRE_MESSAGE(e != nullptr, "missing eigenvalue ", v.to_string());
    CHECK(e->multiplicity == mult);
}

} // namespace

TEST_CASE("feasibility identity") {
    CHECK_NOTHROW(check_feasible({13, 6, 2, 3}));
    CHECK_NOTHROW(check_feasible({100, 36, 14, 12}));
    CHECK_THROWS_WITH_AS(check_feasible({10, 3, 0, 2}), doctest::Contains("6"), DomainError);
    CHECK_THROWS_AS(check_feasible({5, 4, 2, 1}), DomainError); // k = v-1
}

TEST_CASE("detect_srg on the corpus") {
    CHECK(detect_srg(cycle_graph(5)) == SrgParams{5, 2, 0, 1});
    CHECK(detect_srg(testing::petersen()) == SrgParams{10, 3, 0, 1});
    CHECK(detect_srg(paley_graph(13)) == SrgParams{13, 6, 2, 3});
    CHECK(detect_srg(complete_multipartite({3, 3, 3})) == SrgParams{9, 6, 3, 6});
    CHECK(detect_srg(rook_graph(4)) == SrgParams{16, 6, 2, 2});
    CHECK(detect_srg(complement(rook_graph(4))) == SrgParams{16, 9, 4, 6});
    CHECK(detect_srg(testing::shrikhande()) == SrgParams{16, 6, 2, 2});

    CHECK_FALSE(detect_srg(complete_graph(5)).has_value()); // no non-adjacent pair
    CHECK_FALSE(detect_srg(path_graph(4)).has_value());     // not regular
    CHECK_FALSE(detect_srg(cycle_graph(6)).has_value());    // common counts not constant
    Graph two_triangles(6);
    for (int base : {0, 3})
        for (int i = 0; i < 3; ++i)
            two_triangles.set_edge(base + i, base + (i + 1) % 3);
    CHECK_FALSE(detect_srg(two_triangles).has_value());     // disconnected, mu = 0
}

TEST_CASE("adjacency spectra from parameters") {
    SpectrumTable conf13 = adjacency_spectrum({13, 6, 2, 3});
    check_entry(conf13, Surd(6), 1);
    check_entry(conf13, halves(-1, 1, 13), 6);
    check_entry(conf13, halves(-1, -1, 13), 6);
    CHECK(conf13.total_multiplicity() == 13);
    CHECK(conf13.trace_is_zero());

    SpectrumTable hall_janko = adjacency_spectrum({100, 36, 14, 12});
    check_entry(hall_janko, Surd(36), 1);
    check_entry(hall_janko, Surd(6), 36);
    check_entry(hall_janko, Surd(-4), 63);
    CHECK(hall_janko.trace_is_zero());

    // trace and multiplicity identities pin {9 x1, 1 x9, -3 x6} here
    SpectrumTable rook_c = adjacency_spectrum({16, 9, 4, 6});
    check_entry(rook_c, Surd(9), 1);
    check_entry(rook_c, Surd(1), 9);
    check_entry(rook_c, Surd(-3), 6);
    CHECK(rook_c.trace_is_zero());

    SpectrumTable petersen_params = adjacency_spectrum({10, 3, 0, 1});
    check_entry(petersen_params, Surd(3), 1);
    check_entry(petersen_params, Surd(1), 5);
    check_entry(petersen_params, Surd(-2), 4);

    // passes the k(k-l-1) = (v-k-1)mu identity but fails integrality
    CHECK_THROWS_WITH_AS(adjacency_spectrum({22, 7, 0, 3}),
                         doctest::Contains("non-integral"), DomainError);
    CHECK_THROWS_WITH_AS(adjacency_spectrum({13, 4, 1, 1}),
                         doctest::Contains("non-integral"), DomainError);
}

TEST_CASE("distance eigenvalue map") {
    SrgParams hj{100, 36, 14, 12};
    CHECK(distance_eigenvalue_map(hj, Surd(36)) == Surd(162));
    CHECK(distance_eigenvalue_map(hj, Surd(6)) == Surd(-8));
    CHECK(distance_eigenvalue_map(hj, Surd(-4)) == Surd(2));

    SrgParams conf{13, 6, 2, 3};
    CHECK(distance_eigenvalue_map(conf, Surd(6)) == Surd(18));
    // the image of each irrational adjacency eigenvalue is the *other*
    // conjugate: (-1+sqrt(13))/2 -> (-3-sqrt(13))/2
    CHECK(distance_eigenvalue_map(conf, halves(-1, 1, 13)) == halves(-3, -1, 13));
    CHECK(distance_eigenvalue_map(conf, halves(-1, -1, 13)) == halves(-3, 1, 13));
}

TEST_CASE("distance spectra from parameters") {
    SpectrumTable hj = distance_spectrum_from_params({100, 36, 14, 12});
    REQUIRE(hj.entries.size() == 3);
    check_entry(hj, Surd(162), 1);
    check_entry(hj, Surd(2), 63);
    check_entry(hj, Surd(-8), 36);
    InertiaTriple hj_sig = hj.inertia();
    CHECK(hj_sig.n_plus - hj_sig.n_minus == 28);

    SpectrumTable conf13 = distance_spectrum_from_params({13, 6, 2, 3});
    check_entry(conf13, Surd(18), 1);
    check_entry(conf13, halves(-3, 1, 13), 6);
    check_entry(conf13, halves(-3, -1, 13), 6);

    SpectrumTable conf9 = distance_spectrum_from_params({9, 4, 1, 2});
    check_entry(conf9, Surd(12), 1);
    check_entry(conf9, Surd(0), 4);
    check_entry(conf9, Surd(-3), 4);
    CHECK(conf9.inertia() == InertiaTriple{1, 4, 4});

    // descending order with exact comparisons
    for (std::size_t i = 1; i < conf13.entries.size(); ++i)
        CHECK((conf13.entries[i - 1].value - conf13.entries[i].value).sign() > 0);
}

TEST_CASE("conference parameter formulas") {
    CHECK(conference_params(13) == SrgParams{13, 6, 2, 3});
    CHECK(conference_params(5) == SrgParams{5, 2, 0, 1});
    CHECK(is_conference({13, 6, 2, 3}));
    CHECK_FALSE(is_conference({10, 3, 0, 1}));
    CHECK_THROWS_AS(conference_params(12), DomainError);
    CHECK_THROWS_AS(conference_params(19), DomainError); // 19 = 3 (mod 4)
}

TEST_CASE("conference distance spectrum and the v = 9 zero eigenvalue") {
    ConferenceSpectrum c13 = conference_distance_spectrum(13);
    CHECK(c13.optimistic);
    CHECK(c13.inertia == InertiaTriple{7, 0, 6});

    ConferenceSpectrum c9 = conference_distance_spectrum(9);
    CHECK_FALSE(c9.optimistic);
    CHECK(c9.inertia == InertiaTriple{1, 4, 4});
    check_entry(c9.distance, Surd(12), 1);
    check_entry(c9.distance, Surd(0), 4);
    check_entry(c9.distance, Surd(-3), 4);

    ConferenceSpectrum c5 = conference_distance_spectrum(5);
    CHECK_FALSE(c5.optimistic);
    CHECK(c5.inertia == InertiaTriple{1, 0, 4});
}

TEST_CASE("conference optimism boundary: optimistic exactly when v > 9") {
    for (int v = 5; v <= 101; v += 4) {
        ConferenceSpectrum c = conference_distance_spectrum(v);
        CHECK(c.optimistic == (v > 9));
        CHECK(c.distance.total_multiplicity() == v);
        CHECK(c.distance.trace_is_zero());
        if (v > 9) {
            CHECK(c.inertia.n_plus == (v + 1) / 2);
            CHECK(c.inertia.n_minus == (v - 1) / 2);
        }
    }
}

TEST_CASE("the m^2 family closed forms") {
    FamilyM2Spectrum m5 = family_m2_spectrum(5);
    CHECK(m5.params == SrgParams{25, 12, 5, 6});
    check_entry(m5.distance, Surd(36), 1);
    check_entry(m5.distance, Surd(1), 12);
    check_entry(m5.distance, Surd(-4), 12);
    CHECK(m5.gap == 1);
    CHECK(m5.optimistic);

    FamilyM2Spectrum m4 = family_m2_spectrum(4);
    CHECK(m4.params == SrgParams{16, 9, 4, 6});
    check_entry(m4.distance, Surd(21), 1);
    check_entry(m4.distance, Surd(1), 6);
    check_entry(m4.distance, Surd(-3), 9);
    CHECK(m4.gap == -2);
    CHECK_FALSE(m4.optimistic);

    FamilyM2Spectrum m3 = family_m2_spectrum(3);
    CHECK(m3.params == SrgParams{9, 6, 3, 6});
    check_entry(m3.distance, Surd(10), 1);
    check_entry(m3.distance, Surd(1), 2);
    check_entry(m3.distance, Surd(-2), 6);
    CHECK(m3.gap == -3);

    CHECK_THROWS_AS(family_m2_spectrum(2), DomainError);
    CHECK_THROWS_AS(family_m2_spectrum(0), DomainError);
}

TEST_CASE("m^2 family identities hold for 3 <= m <= 50") {
    for (int m = 3; m <= 50; ++m) {
        FamilyM2Spectrum fam = family_m2_spectrum(m);
        CHECK(fam.distance.total_multiplicity() == static_cast<std::int64_t>(m) * m);
        CHECK(fam.distance.trace_is_zero());
        CHECK(fam.gap == static_cast<std::int64_t>(m) * m - 6 * m + 6);
        check_entry(fam.distance, Surd(static_cast<std::int64_t>(m) * (2 * m - 3) + 1), 1);
        check_entry(fam.distance, Surd(1),
                    static_cast<std::int64_t>(m) * m - 3 * m + 2);
        check_entry(fam.distance, Surd(1 - m), 3 * (m - 1));
    }
}

TEST_CASE("parameter-derived distance spectra match constructed graphs") {
    // inertia + float eigenvalue multiset, the full exact check lives in
    // the acceptance suite
    auto check_graph = [](const Graph& g) {
        auto params = detect_srg(g);
        REQUIRE(params.has_value());
        SpectrumTable table = distance_spectrum_from_params(*params);
        DistanceMatrix d = distance_matrix(g);
        CHECK(table.inertia() == inertia(d));

        std::vector<double> expected;
        for (const auto& e : table.entries)
            for (std::int64_t i = 0; i < e.multiplicity; ++i)
                expected.push_back(e.value.to_double());
        std::sort(expected.begin(), expected.end());
        std::vector<double> actual = float_eigenvalues(d);
        REQUIRE(expected.size() == actual.size());
        for (std::size_t i = 0; i < expected.size(); ++i)
            CHECK(actual[i] == doctest::Approx(expected[i]).epsilon(1e-6));
    };
    check_graph(cycle_graph(5));
    check_graph(testing::petersen());
    check_graph(paley_graph(9));
    check_graph(paley_graph(13));
    check_graph(complete_multipartite({3, 3, 3}));
    check_graph(complement(rook_graph(4)));
}
