#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "orbvortex/line_bundle.hpp"

namespace orbvortex {

/// Topological orbifold U(2) bundle: isotropy pairs (b_i^-, b_i^+) at the
/// cone points together with a determinant line bundle.
///
/// Pairs are normalized to b_i^- <= b_i^+ (the moduli reports are taken
/// after the residual circle quotient, which erases the ordered-pair
/// distinction of the determinant-one gauge group), and every pair sum is
/// congruent to the determinant's isotropy mod a_i.
class OrbifoldU2Bundle {
public:
    using IsotropyPair = std::pair<std::int64_t, std::int64_t>;

    OrbifoldU2Bundle(std::vector<IsotropyPair> isotropy_pairs, OrbifoldLineBundle determinant);

    const OrbifoldSurface& surface() const { return det_.surface(); }
    const std::vector<IsotropyPair>& isotropy_pairs() const { return pairs_; }
    const OrbifoldLineBundle& determinant() const { return det_; }

    /// n_0 = #{i : b_i^- = b_i^+}.
    std::int64_t equal_pair_count() const;

    bool operator==(const OrbifoldU2Bundle&) const = default;

private:
    std::vector<IsotropyPair> pairs_;
    OrbifoldLineBundle det_;
};

} // namespace orbvortex
