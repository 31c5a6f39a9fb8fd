#pragma once

#include <cstdint>
#include <vector>

#include "orbvortex/rational.hpp"

namespace orbvortex {

/// An orbifold Riemann surface: a closed genus-g surface together with an
/// ordered list of cone points of multiplicities (a_1, ..., a_n), a_i >= 2.
/// Cone points are identified by their index in this list.
///
/// n = 0 is the smooth case; a marked point of multiplicity 1 would be a
/// smooth point and is rejected at construction.
class OrbifoldSurface {
public:
    OrbifoldSurface(std::int64_t genus, std::vector<std::int64_t> multiplicities);

    std::int64_t genus() const { return genus_; }
    const std::vector<std::int64_t>& multiplicities() const { return mult_; }
    std::size_t cone_count() const { return mult_.size(); }
    std::int64_t multiplicity(std::size_t i) const { return mult_.at(i); }

    bool is_smooth() const { return mult_.empty(); }

    /// True when the cone multiplicities are pairwise coprime
    /// (vacuously true for n <= 1).
    bool coprime_multiplicities() const;

    /// Product a_1 * ... * a_n (1 for the smooth case).
    std::int64_t multiplicity_product() const;

    /// (2 - 2g) - sum_i (1 - 1/a_i), exact.
    Rational euler_characteristic() const;

    bool operator==(const OrbifoldSurface&) const = default;

private:
    std::int64_t genus_;
    std::vector<std::int64_t> mult_;
};

inline Rational euler_characteristic(const OrbifoldSurface& s) {
    return s.euler_characteristic();
}

} // namespace orbvortex
