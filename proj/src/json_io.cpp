#include "orbvortex/json_io.hpp"

#include <nlohmann/json.hpp>

#include "orbvortex/errors.hpp"

namespace orbvortex {

using nlohmann::json;

json to_json(const Rational& r) {
    return json{{"num", r.num()}, {"den", r.den()}};
}

json to_json(const OrbifoldSurface& s) {
    return json{{"genus", s.genus()}, {"cone", s.multiplicities()}};
}

json to_json(const OrbifoldLineBundle& l) {
    return json{{"deg_b", l.background_degree()}, {"isotropy", l.isotropy()}};
}

json to_json(const FlatStatus& f) {
    json j{{"tag", to_string(f.tag)}};
    if (f.witness) j["witness"] = *f.witness;
    return j;
}

namespace {

json to_json(const AbelianStratum& stratum) {
    return json{{"line", to_json(stratum.reduction.line())},
                {"epsilon", stratum.reduction.epsilon()},
                {"stratum_dimension", stratum.stratum_dimension},
                {"morse_index", stratum.morse_index},
                {"moment_map_value", to_json(stratum.moment_map_value)},
                {"at_stability_boundary", stratum.at_stability_boundary}};
}

json to_json(const ModuliRow& row) {
    json pairs = json::array();
    for (const auto& [lo, hi] : row.bundle.isotropy_pairs()) pairs.push_back(json::array({lo, hi}));
    json abelian = json::array();
    for (const auto& stratum : row.abelian) abelian.push_back(to_json(stratum));
    return json{{"isotropy_pairs", pairs},
                {"irreducible_dim", row.irreducible_dim},
                {"flat", to_json(row.flat)},
                {"flat_expected_dim", row.flat_expected_dim},
                {"abelian", abelian},
                {"degree_condition", row.degree_condition}};
}

} // namespace

json to_json(const ModuliReport& report) {
    json rows = json::array();
    for (const auto& row : report.rows) rows.push_back(to_json(row));
    return json{{"surface", to_json(report.det.surface())},
                {"det", to_json(report.det)},
                {"rows", rows}};
}

json to_json(const SeifertMonopoleReport& report) {
    json j{{"type_a", to_json(report.type_a)},
           {"type_b_det", to_json(report.type_b_det)},
           {"type_b_vanishes", report.type_b_vanishes}};
    if (report.type_b) j["type_b"] = to_json(*report.type_b);
    return j;
}

json to_json(const CriticalParameters& params) {
    json sw = json::array();
    for (const auto& ray : params.sw)
        sw.push_back(json{{"n", ray.n}, {"c1_multiplier", ray.c1_multiplier}});
    return json{{"flat_tau_pi_coefficient", to_json(params.flat_tau)}, {"sw", sw}};
}

Rational rational_from_json(const json& j) {
    return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

OrbifoldSurface surface_from_json(const json& j) {
    return OrbifoldSurface(j.at("genus").get<std::int64_t>(),
                           j.at("cone").get<std::vector<std::int64_t>>());
}

OrbifoldLineBundle line_bundle_from_json(const json& j, const OrbifoldSurface& s) {
    return OrbifoldLineBundle(s, j.at("deg_b").get<std::int64_t>(),
                              j.at("isotropy").get<std::vector<std::int64_t>>());
}

namespace {

FlatStatus flat_status_from_json(const json& j) {
    const std::string tag = j.at("tag").get<std::string>();
    if (tag == "NonEmpty") return FlatStatus{FlatStatus::Tag::NonEmpty, std::nullopt};
    if (tag == "EmptyByGenusCount")
        return FlatStatus{FlatStatus::Tag::EmptyByGenusCount, std::nullopt};
    if (tag == "EmptyByWitness")
        return FlatStatus{FlatStatus::Tag::EmptyByWitness, j.at("witness").get<std::vector<int>>()};
    throw ValidationError("flat status: unknown tag '" + tag + "'");
}

ModuliRow row_from_json(const json& j, const OrbifoldSurface& s, const OrbifoldLineBundle& det) {
    std::vector<OrbifoldU2Bundle::IsotropyPair> pairs;
    for (const auto& p : j.at("isotropy_pairs"))
        pairs.emplace_back(p.at(0).get<std::int64_t>(), p.at(1).get<std::int64_t>());
    OrbifoldU2Bundle bundle(std::move(pairs), det);

    std::vector<AbelianStratum> abelian;
    for (const auto& js : j.at("abelian")) {
        LineReduction reduction(bundle, line_bundle_from_json(js.at("line"), s));
        if (reduction.epsilon() != js.at("epsilon").get<std::vector<int>>())
            throw ValidationError("abelian stratum: epsilon does not match the line choice");
        abelian.push_back(AbelianStratum{std::move(reduction),
                                         js.at("stratum_dimension").get<std::int64_t>(),
                                         js.at("morse_index").get<std::int64_t>(),
                                         rational_from_json(js.at("moment_map_value")),
                                         js.at("at_stability_boundary").get<bool>()});
    }

    return ModuliRow{std::move(bundle),
                     j.at("irreducible_dim").get<std::int64_t>(),
                     flat_status_from_json(j.at("flat")),
                     j.at("flat_expected_dim").get<std::int64_t>(),
                     std::move(abelian),
                     j.at("degree_condition").get<bool>()};
}

} // namespace

ModuliReport moduli_report_from_json(const json& j) {
    OrbifoldSurface s = surface_from_json(j.at("surface"));
    OrbifoldLineBundle det = line_bundle_from_json(j.at("det"), s);
    ModuliReport report{det, {}};
    for (const auto& row : j.at("rows")) report.rows.push_back(row_from_json(row, s, det));
    return report;
}

SeifertMonopoleReport seifert_report_from_json(const json& j) {
    ModuliReport type_a = moduli_report_from_json(j.at("type_a"));
    OrbifoldLineBundle type_b_det =
        line_bundle_from_json(j.at("type_b_det"), type_a.det.surface());
    SeifertMonopoleReport report{std::move(type_a), std::move(type_b_det),
                                 j.at("type_b_vanishes").get<bool>(), std::nullopt};
    if (j.contains("type_b")) report.type_b = moduli_report_from_json(j.at("type_b"));
    return report;
}

} // namespace orbvortex
