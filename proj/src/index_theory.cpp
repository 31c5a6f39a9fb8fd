#include "orbvortex/index_theory.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "orbvortex/errors.hpp"

namespace orbvortex {

namespace {

void check_zeta_args(std::int64_t a, std::int64_t b) {
    if (a < 2)
        throw DomainError("zeta weight sum: a must be >= 2, got " + std::to_string(a));
    if (b <= 0 || b >= a)
        throw DomainError("zeta weight sum: b = " + std::to_string(b) +
                          " outside (0, " + std::to_string(a) + ")");
}

} // namespace

Rational zeta_weight_sum_closed(std::int64_t a, std::int64_t b) {
    check_zeta_args(a, b);
    return Rational(b) - Rational(a + 1, 2);
}

std::complex<double> zeta_weight_sum_numeric(std::int64_t a, std::int64_t b) {
    check_zeta_args(a, b);
    std::complex<double> sum = 0.0;
    const double twopi_over_a = 2.0 * std::numbers::pi / static_cast<double>(a);
    for (std::int64_t k = 1; k < a; ++k) {
        std::complex<double> numer = std::polar(1.0, twopi_over_a * static_cast<double>(k * b));
        std::complex<double> denom = 1.0 - std::polar(1.0, twopi_over_a * static_cast<double>(k));
        sum += numer / denom;
    }
    return sum;
}

ZetaSumResult zeta_weight_sum(std::int64_t a, std::int64_t b) {
    return ZetaSumResult{a, b, zeta_weight_sum_closed(a, b), zeta_weight_sum_numeric(a, b)};
}

std::int64_t chi_line(const OrbifoldLineBundle& l) {
    return (1 - l.surface().genus()) + l.background_degree();
}

std::int64_t chi_u2(const OrbifoldU2Bundle& e) {
    const auto& s = e.surface();
    Rational chi(2 * (1 - s.genus()));
    chi += e.determinant().c1();
    for (std::size_t i = 0; i < s.cone_count(); ++i) {
        const auto& [lo, hi] = e.isotropy_pairs()[i];
        chi -= Rational(lo + hi, s.multiplicity(i));
    }
    if (!chi.is_integer())
        throw InvariantError("chi_u2: non-integral Euler characteristic");
    return chi.as_integer();
}

OrbifoldLineBundle serre_dual(const OrbifoldLineBundle& l) {
    return tensor(canonical_bundle(l.surface()), dual(l));
}

bool h1_vanishes(const OrbifoldLineBundle& l) {
    std::int64_t g = l.surface().genus();
    if (l.background_degree() > 2 * g - 2) return true;
    return l.c1() > canonical_bundle(l.surface()).c1();
}

} // namespace orbvortex
