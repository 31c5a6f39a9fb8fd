#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <thread>

#include "orbvortex/errors.hpp"
#include "orbvortex/vortex.hpp"

using namespace orbvortex;
using Pair = OrbifoldU2Bundle::IsotropyPair;

namespace {

OrbifoldSurface s235() { return OrbifoldSurface(0, {2, 3, 5}); }
OrbifoldSurface s237() { return OrbifoldSurface(0, {2, 3, 7}); }

OrbifoldLineBundle det235() { return fundamental_line_bundle(s235()); }
OrbifoldLineBundle det237_5() { return power(fundamental_line_bundle(s237()), 5); }

std::vector<std::vector<Pair>> pair_lists(const std::vector<OrbifoldU2Bundle>& bundles) {
    std::vector<std::vector<Pair>> out;
    for (const auto& e : bundles) out.push_back(e.isotropy_pairs());
    return out;
}

LineReduction trivial_reduction(const OrbifoldU2Bundle& e) {
    return LineReduction(e, OrbifoldLineBundle::trivial(e.surface()));
}

} // namespace

TEST_CASE("U(2) bundle validation") {
    OrbifoldLineBundle det = det235();
    // Reversed pairs normalize to b- <= b+.
    OrbifoldU2Bundle swapped({{1, 0}, {0, 1}, {4, 2}}, det);
    CHECK(swapped == OrbifoldU2Bundle({{0, 1}, {0, 1}, {2, 4}}, det));
    CHECK_THROWS_AS(OrbifoldU2Bundle({{0, 1}, {0, 3}, {0, 1}}, det), ValidationError);
    CHECK_THROWS_AS(OrbifoldU2Bundle({{0, 1}, {0, 2}, {0, 1}}, det), ValidationError);
    CHECK_THROWS_AS(OrbifoldU2Bundle({{0, 1}, {0, 1}}, det), ValidationError);
    CHECK(OrbifoldU2Bundle({{0, 1}, {2, 2}, {3, 3}}, det).equal_pair_count() == 2);
}

TEST_CASE("enumeration over S2(2,3,5) with det L0") {
    auto bundles = enumerate_u2_bundles(det235());
    std::vector<std::vector<Pair>> expected = {
        {{0, 1}, {0, 1}, {0, 1}}, {{0, 1}, {0, 1}, {2, 4}}, {{0, 1}, {0, 1}, {3, 3}},
        {{0, 1}, {2, 2}, {0, 1}}, {{0, 1}, {2, 2}, {2, 4}}, {{0, 1}, {2, 2}, {3, 3}}};
    CHECK(pair_lists(bundles) == expected);
}

TEST_CASE("enumeration over S2(2,3,7) with det L0^5") {
    auto bundles = enumerate_u2_bundles(det237_5());
    std::vector<std::vector<Pair>> expected = {
        {{0, 1}, {0, 1}, {0, 2}}, {{0, 1}, {0, 1}, {1, 1}}, {{0, 1}, {0, 1}, {3, 6}},
        {{0, 1}, {0, 1}, {4, 5}}, {{0, 1}, {2, 2}, {0, 2}}, {{0, 1}, {2, 2}, {1, 1}},
        {{0, 1}, {2, 2}, {3, 6}}, {{0, 1}, {2, 2}, {4, 5}}};
    CHECK(pair_lists(bundles) == expected);
}

TEST_CASE("enumeration over a smooth surface") {
    OrbifoldSurface s(2, {});
    auto bundles = enumerate_u2_bundles(OrbifoldLineBundle(s, 3, {}));
    REQUIRE(bundles.size() == 1);
    CHECK(bundles[0].isotropy_pairs().empty());
}

TEST_CASE("irreducible dimensions") {
    auto bundles = enumerate_u2_bundles(det235());
    std::vector<std::int64_t> dims;
    for (const auto& e : bundles) dims.push_back(irreducible_dim(e));
    CHECK(dims == std::vector<std::int64_t>{2, 0, -2, -2, -4, -6});

    auto brieskorn = enumerate_u2_bundles(det237_5());
    dims.clear();
    for (const auto& e : brieskorn) dims.push_back(irreducible_dim(e));
    CHECK(dims == std::vector<std::int64_t>{2, 0, 0, 0, -2, -4, -4, -4});

    // Smooth T^2 with deg E = 1: dim = 2(g - 1 + deg E) = 2.
    OrbifoldSurface torus(1, {});
    OrbifoldU2Bundle e({}, OrbifoldLineBundle(torus, 1, {}));
    CHECK(irreducible_dim(e) == 2);
}

TEST_CASE("compatible reductions") {
    OrbifoldU2Bundle all_branching({{0, 1}, {0, 1}, {0, 1}}, det235());
    auto r1 = compatible_reductions(all_branching, 0);
    CHECK(r1.size() == 8);
    for (const auto& r : r1) {
        CHECK(r.line().background_degree() == 0);
        CHECK(r.count_zero() == 0);
    }

    OrbifoldU2Bundle one_branching({{0, 1}, {2, 2}, {3, 3}}, det235());
    auto r2 = compatible_reductions(one_branching, 0);
    CHECK(r2.size() == 2);
    CHECK(r2[0].count_zero() == 2);

    OrbifoldSurface smooth(1, {});
    OrbifoldU2Bundle es({}, OrbifoldLineBundle(smooth, 1, {}));
    auto r3 = compatible_reductions(es, 3);
    REQUIRE(r3.size() == 4);
    for (std::size_t d = 0; d < 4; ++d) {
        CHECK(r3[d].line().background_degree() == static_cast<std::int64_t>(d));
        CHECK(r3[d].epsilon().empty());
    }

    CHECK(compatible_reductions(es, -1).empty());
}

TEST_CASE("line reduction validation") {
    OrbifoldU2Bundle e({{0, 1}, {2, 2}, {0, 1}}, det235());
    CHECK_THROWS_AS(LineReduction(e, OrbifoldLineBundle(s235(), 0, {0, 0, 0})), ValidationError);
    LineReduction ok(e, OrbifoldLineBundle(s235(), 0, {0, 2, 1}));
    CHECK(ok.epsilon() == std::vector<int>{-1, 0, +1});
    CHECK(ok.count_minus() == 1);
    CHECK(ok.count_zero() == 1);
    CHECK(ok.count_plus() == 1);
}

TEST_CASE("Morse-Bott index") {
    OrbifoldU2Bundle poincare({{0, 1}, {0, 1}, {0, 1}}, det235());
    LineReduction r = trivial_reduction(poincare);
    CHECK(r.epsilon() == std::vector<int>{-1, -1, -1});
    CHECK(morse_index(r) == 2);

    OrbifoldU2Bundle brieskorn({{0, 1}, {0, 1}, {0, 2}}, det237_5());
    CHECK(morse_index(trivial_reduction(brieskorn)) == 2);

    OrbifoldSurface torus(1, {});
    OrbifoldU2Bundle e({}, OrbifoldLineBundle(torus, 1, {}));
    CHECK(morse_index(trivial_reduction(e)) == 2);
}

TEST_CASE("abelian strata") {
    OrbifoldU2Bundle row1({{0, 1}, {0, 1}, {0, 1}}, det235());
    auto strata = abelian_strata(row1);
    REQUIRE(strata.size() == 1);
    CHECK(strata[0].reduction.line().is_trivial());
    CHECK(strata[0].stratum_dimension == 0);
    CHECK(strata[0].morse_index == 2);
    CHECK(strata[0].moment_map_value == Rational(1, 30));
    CHECK_FALSE(strata[0].at_stability_boundary);

    // Wrong isotropy: the trivial line needs 0 in {2,4} at the last slot.
    OrbifoldU2Bundle row2({{0, 1}, {0, 1}, {2, 4}}, det235());
    CHECK(abelian_strata(row2).empty());

    // Brieskorn: only the trivial line survives the deg_B >= 0 filter.
    OrbifoldU2Bundle b1({{0, 1}, {0, 1}, {0, 2}}, det237_5());
    auto bs = abelian_strata(b1);
    REQUIRE(bs.size() == 1);
    CHECK(bs[0].reduction.line().is_trivial());
}

TEST_CASE("flat status") {
    FlatStatus by_count = flat_status(OrbifoldU2Bundle({{0, 1}, {2, 2}, {0, 1}}, det235()));
    CHECK(by_count.tag == FlatStatus::Tag::EmptyByGenusCount);
    CHECK_FALSE(by_count.witness.has_value());

    FlatStatus by_witness = flat_status(OrbifoldU2Bundle({{0, 1}, {0, 1}, {4, 5}}, det237_5()));
    CHECK(by_witness.tag == FlatStatus::Tag::EmptyByWitness);
    REQUIRE(by_witness.witness.has_value());
    CHECK(*by_witness.witness == std::vector<int>{-1, -1, -1});

    FlatStatus nonempty = flat_status(OrbifoldU2Bundle({{0, 1}, {0, 1}, {0, 1}}, det235()));
    CHECK(nonempty.tag == FlatStatus::Tag::NonEmpty);
}

TEST_CASE("flat expected dimension") {
    CHECK(flat_expected_dim(OrbifoldU2Bundle({{0, 1}, {0, 1}, {0, 1}}, det235())) == 0);
    CHECK(flat_expected_dim(OrbifoldU2Bundle({{0, 1}, {2, 2}, {0, 1}}, det235())) == -2);

    OrbifoldSurface g2(2, {});
    CHECK(flat_expected_dim(OrbifoldU2Bundle({}, OrbifoldLineBundle(g2, 0, {}))) == 6);
}

TEST_CASE("degree condition") {
    CHECK(degree_condition(det235()));                    // 1/30 > -1/15
    CHECK(degree_condition(power(fundamental_line_bundle(s237()), 3))); // 1/14 > 1/21
    OrbifoldSurface torus(1, {});
    CHECK(degree_condition(OrbifoldLineBundle(torus, 1, {})));
    CHECK_FALSE(degree_condition(OrbifoldLineBundle(torus, 0, {})));
    CHECK_FALSE(degree_condition(power(det235(), -2)));   // -1/15 is not > -1/15
}

TEST_CASE("odd determinant") {
    OrbifoldSurface torus(1, {});
    CHECK(odd_determinant(OrbifoldU2Bundle({}, OrbifoldLineBundle(torus, 1, {}))));
    CHECK_FALSE(odd_determinant(OrbifoldU2Bundle({}, OrbifoldLineBundle(torus, 2, {}))));

    auto bundles = enumerate_u2_bundles(det237_5());
    CHECK(odd_determinant(bundles[0]));
    auto even = enumerate_u2_bundles(power(fundamental_line_bundle(s237()), 2));
    CHECK_FALSE(odd_determinant(even[0]));

    OrbifoldSurface bad(0, {2, 4});
    OrbifoldLineBundle det(bad, 1, {1, 1});
    CHECK_THROWS_AS(odd_determinant(OrbifoldU2Bundle({{0, 1}, {0, 1}}, det)), NotCoprimeError);
}

TEST_CASE("classification report: Poincare determinant") {
    ModuliReport report = classification_report(det235());
    REQUIRE(report.rows.size() == 6);

    std::vector<std::int64_t> dims;
    std::vector<FlatStatus::Tag> tags;
    std::vector<std::size_t> abelian_counts;
    for (const auto& row : report.rows) {
        dims.push_back(row.irreducible_dim);
        tags.push_back(row.flat.tag);
        abelian_counts.push_back(row.abelian.size());
        CHECK(row.degree_condition);
    }
    CHECK(dims == std::vector<std::int64_t>{2, 0, -2, -2, -4, -6});
    CHECK(tags == std::vector<FlatStatus::Tag>{
                      FlatStatus::Tag::NonEmpty, FlatStatus::Tag::NonEmpty,
                      FlatStatus::Tag::EmptyByGenusCount, FlatStatus::Tag::EmptyByGenusCount,
                      FlatStatus::Tag::EmptyByGenusCount, FlatStatus::Tag::EmptyByGenusCount});
    CHECK(abelian_counts == std::vector<std::size_t>{1, 0, 0, 0, 0, 0});
    CHECK(report.rows[0].abelian[0].morse_index == 2);
    CHECK(report.rows[0].flat_expected_dim == 0);
}

TEST_CASE("classification report: Brieskorn determinant") {
    ModuliReport report = classification_report(det237_5());
    REQUIRE(report.rows.size() == 8);

    std::vector<std::int64_t> dims;
    std::vector<FlatStatus::Tag> tags;
    std::vector<std::size_t> abelian_counts;
    for (const auto& row : report.rows) {
        dims.push_back(row.irreducible_dim);
        tags.push_back(row.flat.tag);
        abelian_counts.push_back(row.abelian.size());
    }
    CHECK(dims == std::vector<std::int64_t>{2, 0, 0, 0, -2, -4, -4, -4});
    CHECK(tags == std::vector<FlatStatus::Tag>{
                      FlatStatus::Tag::NonEmpty, FlatStatus::Tag::EmptyByGenusCount,
                      FlatStatus::Tag::NonEmpty, FlatStatus::Tag::EmptyByWitness,
                      FlatStatus::Tag::EmptyByGenusCount, FlatStatus::Tag::EmptyByGenusCount,
                      FlatStatus::Tag::EmptyByGenusCount, FlatStatus::Tag::EmptyByGenusCount});
    CHECK(abelian_counts == std::vector<std::size_t>{1, 0, 0, 0, 0, 0, 0, 0});
    CHECK(report.rows[0].abelian[0].morse_index == 2);
}

TEST_CASE("classification report: discarded determinant L0^3 on S2(2,3,7)") {
    ModuliReport report = classification_report(power(fundamental_line_bundle(s237()), 3));
    REQUIRE(report.rows.size() == 8);
    for (const auto& row : report.rows) CHECK(row.irreducible_dim <= 0);
}

TEST_CASE("evenness and trivial-reduction index over small surfaces") {
    for (std::int64_t g = 0; g <= 1; ++g) {
        for (auto mult : {std::vector<std::int64_t>{}, {2}, {2, 3}, {3, 4}, {2, 3, 5}}) {
            OrbifoldSurface s(g, mult);
            std::vector<std::int64_t> iso(mult.size(), 0);
            // Walk every determinant isotropy vector at deg_B in {-1, 0}.
            while (true) {
                for (std::int64_t deg : {-1, 0}) {
                    OrbifoldLineBundle det(s, deg, iso);
                    for (const auto& e : enumerate_u2_bundles(det)) {
                        std::int64_t dim = irreducible_dim(e);
                        CHECK(dim % 2 == 0);
                        bool trivial_ok = true;
                        for (const auto& [lo, hi] : e.isotropy_pairs())
                            if (lo != 0) trivial_ok = false;
                        if (trivial_ok)
                            CHECK(morse_index(trivial_reduction(e)) == dim);
                        for (const auto& r : compatible_reductions(e, 1))
                            CHECK(morse_index(r) % 2 == 0);
                    }
                }
                std::size_t i = iso.size();
                bool done = true;
                while (i > 0) {
                    --i;
                    if (++iso[i] < s.multiplicity(i)) {
                        done = false;
                        break;
                    }
                    iso[i] = 0;
                }
                if (done) break;
            }
        }
    }
}

TEST_CASE("smooth positivity of abelian indices under odd degree") {
    for (std::int64_t g = 1; g <= 3; ++g) {
        OrbifoldSurface s(g, {});
        for (std::int64_t deg_e : {1, 3, 5}) {
            OrbifoldU2Bundle e({}, OrbifoldLineBundle(s, deg_e, {}));
            auto strata = abelian_strata(e);
            CHECK(strata.size() == static_cast<std::size_t>(deg_e / 2 + 1));
            for (const auto& st : strata) {
                std::int64_t deg_l = st.reduction.line().background_degree();
                CHECK(st.morse_index == 2 * (g - 1 + deg_e - 2 * deg_l));
                CHECK(st.morse_index > 0);
            }
        }
    }
}

TEST_CASE("reports are stable under concurrent evaluation") {
    ModuliReport reference = classification_report(det237_5());
    std::vector<std::thread> workers;
    std::vector<ModuliReport> results(8, reference);
    for (std::size_t t = 0; t < results.size(); ++t)
        workers.emplace_back([&results, t] {
            results[t] = classification_report(
                power(fundamental_line_bundle(OrbifoldSurface(0, {2, 3, 7})), 5));
        });
    for (auto& w : workers) w.join();
    for (const auto& r : results) CHECK(r == reference);
}

TEST_CASE("moment map values are positive under an odd determinant") {
    for (const auto& det : {det235(), det237_5()}) {
        for (const auto& e : enumerate_u2_bundles(det)) {
            CHECK(odd_determinant(e));
            for (const auto& st : abelian_strata(e)) {
                CHECK(st.moment_map_value > Rational(0));
                CHECK_FALSE(st.at_stability_boundary);
            }
        }
    }
}
