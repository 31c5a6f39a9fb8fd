#pragma once

#include <complex>
#include <cstdint>

#include "orbvortex/line_bundle.hpp"
#include "orbvortex/u2_bundle.hpp"

namespace orbvortex {

/// Weight sum over nontrivial a-th roots of unity, in both closed and
/// numeric form. For zeta = e^{2 pi i / a} and 0 < b < a,
///
///     sum_{k=1}^{a-1} zeta^{kb} / (1 - zeta^k) = b - (a+1)/2,
///
/// and the floating-point evaluation of the left-hand side serves as an
/// independent check of the right-hand side.
struct ZetaSumResult {
    std::int64_t a;
    std::int64_t b;
    Rational closed_form;
    std::complex<double> numeric;
};

/// Closed form b - (a+1)/2. Requires a >= 2 and 0 < b < a.
Rational zeta_weight_sum_closed(std::int64_t a, std::int64_t b);

/// Literal floating-point sum over k = 1 .. a-1. Same preconditions.
std::complex<double> zeta_weight_sum_numeric(std::int64_t a, std::int64_t b);

ZetaSumResult zeta_weight_sum(std::int64_t a, std::int64_t b);

/// Holomorphic Euler characteristic chi(L) = (1 - g) + deg_B(L).
/// In the (deg_B, isotropy) representation this is an integer on the nose.
std::int64_t chi_line(const OrbifoldLineBundle& l);

/// chi(E) = 2(1 - g) + c1(det E) - sum_i (b_i^- + b_i^+)/a_i, which equals
/// the sum of two line-bundle Euler characteristics and is an integer.
std::int64_t chi_u2(const OrbifoldU2Bundle& e);

/// Serre dual K tensor L*. The isotropy works out to (a_i - 1 - b_i) mod a_i.
OrbifoldLineBundle serre_dual(const OrbifoldLineBundle& l);

/// Sufficient criteria for the vanishing of H^1: deg_B(L) > 2g - 2, or
/// c1(L) > c1(K). Returns false when neither criterion applies — that means
/// "not decided here", not that H^1 is nonzero.
bool h1_vanishes(const OrbifoldLineBundle& l);

} // namespace orbvortex
