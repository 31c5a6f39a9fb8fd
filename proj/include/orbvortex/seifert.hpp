#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orbvortex/line_bundle.hpp"
#include "orbvortex/vortex.hpp"

namespace orbvortex {

/// Seifert fibered 3-manifold presented as the unit circle bundle S(L) of
/// an orbifold line bundle over an orbifold surface, together with the
/// surface volume (the normalization is the caller's choice; default 1).
class SeifertManifold {
public:
    SeifertManifold(OrbifoldLineBundle euler_bundle, Rational volume = Rational(1));

    const OrbifoldSurface& base() const { return euler_.surface(); }
    const OrbifoldLineBundle& euler_bundle() const { return euler_; }
    const Rational& volume() const { return volume_; }

private:
    OrbifoldLineBundle euler_;
    Rational volume_;
};

/// Adiabatic curvature constant of the Seifert fibration,
/// c_eta = -pi deg(L) / vol, returned as the exact coefficient of pi.
Rational c_eta(const SeifertManifold& y);

/// Scalar shift between the Levi-Civita and adiabatic Dirac operators,
/// D_LC = D_adiabatic - c_eta/2; this returns -c_eta/2 (coefficient of pi).
Rational dirac_comparison_shift(const SeifertManifold& y);

/// Solutions on a Seifert manifold split into two vortex types over the
/// base: type a lives on bundles with the given determinant, type b (via
/// Serre duality) on bundles with determinant K^2 tensor det^-1. When
/// c1(det) > 2 c1(K) the type-b spaces are empty and the report omits them.
struct SeifertMonopoleReport {
    ModuliReport type_a;
    OrbifoldLineBundle type_b_det;
    bool type_b_vanishes;
    std::optional<ModuliReport> type_b; // present iff the degree condition fails

    bool operator==(const SeifertMonopoleReport&) const = default;
};

SeifertMonopoleReport seifert_monopole_report(const SeifertManifold& y,
                                              const OrbifoldLineBundle& det);

/// Product case S^1 x Sigma for a smooth surface: the circle bundle is
/// trivial and the U(2) bundle is determined by its degree.
/// Throws NotSmoothError when the surface has cone points.
SeifertMonopoleReport s1_times_sigma_report(const OrbifoldSurface& surface, std::int64_t deg_e);

/// One Seiberg-Witten critical value tau = 2 pi n of the U(2) monopole
/// parameter; the reducible's first line has c1(L1) = (1 - n) c1(E).
struct SeibergWittenRay {
    std::int64_t n;
    std::int64_t c1_multiplier; // 1 - n

    bool operator==(const SeibergWittenRay&) const = default;
};

/// Critical parameter values of the U(2) monopole equations: the flat value
/// tau = pi and the Seiberg-Witten family tau = 2 pi n for |n| <= bound.
struct CriticalParameters {
    Rational flat_tau;                // coefficient of pi, always 1
    std::vector<SeibergWittenRay> sw; // n ascending
};

CriticalParameters u2_critical_parameters(std::int64_t bound);

} // namespace orbvortex
