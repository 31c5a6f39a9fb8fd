#include "orbvortex/seifert.hpp"

#include <string>

#include "orbvortex/errors.hpp"

namespace orbvortex {

SeifertManifold::SeifertManifold(OrbifoldLineBundle euler_bundle, Rational volume)
    : euler_(std::move(euler_bundle)), volume_(volume) {
    if (!(volume_ > Rational(0)))
        throw ValidationError("Seifert manifold: volume must be positive, got " + volume_.str());
}

Rational c_eta(const SeifertManifold& y) {
    return -y.euler_bundle().c1() / y.volume();
}

Rational dirac_comparison_shift(const SeifertManifold& y) {
    return -c_eta(y) / Rational(2);
}

SeifertMonopoleReport seifert_monopole_report(const SeifertManifold& y,
                                              const OrbifoldLineBundle& det) {
    if (!(det.surface() == y.base()))
        throw SurfaceMismatchError("Seifert report: determinant does not live on the base surface");

    OrbifoldLineBundle type_b_det =
        tensor(power(canonical_bundle(y.base()), 2), dual(det));
    bool vanishes = degree_condition(det);

    SeifertMonopoleReport report{classification_report(det), std::move(type_b_det), vanishes,
                                 std::nullopt};
    if (!vanishes) report.type_b = classification_report(report.type_b_det);
    return report;
}

SeifertMonopoleReport s1_times_sigma_report(const OrbifoldSurface& surface, std::int64_t deg_e) {
    if (!surface.is_smooth())
        throw NotSmoothError("S^1 x Sigma report: surface has cone points");
    SeifertManifold y(OrbifoldLineBundle::trivial(surface));
    return seifert_monopole_report(y, OrbifoldLineBundle(surface, deg_e, {}));
}

CriticalParameters u2_critical_parameters(std::int64_t bound) {
    if (bound < 1)
        throw ValidationError("critical parameters: bound must be >= 1, got " +
                              std::to_string(bound));
    CriticalParameters params{Rational(1), {}};
    for (std::int64_t n = -bound; n <= bound; ++n)
        params.sw.push_back(SeibergWittenRay{n, 1 - n});
    return params;
}

} // namespace orbvortex
