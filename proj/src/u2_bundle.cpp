#include "orbvortex/u2_bundle.hpp"

#include <string>

#include "orbvortex/errors.hpp"

namespace orbvortex {

OrbifoldU2Bundle::OrbifoldU2Bundle(std::vector<IsotropyPair> isotropy_pairs,
                                   OrbifoldLineBundle determinant)
    : pairs_(std::move(isotropy_pairs)), det_(std::move(determinant)) {
    const auto& s = det_.surface();
    if (pairs_.size() != s.cone_count())
        throw ValidationError("U(2) bundle: pair count " + std::to_string(pairs_.size()) +
                              " does not match cone point count " +
                              std::to_string(s.cone_count()));
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        // The ordered-pair distinction belongs to the determinant-one gauge
        // group; reports live after the circle quotient, so normalize.
        if (pairs_[i].first > pairs_[i].second) std::swap(pairs_[i].first, pairs_[i].second);
        auto [lo, hi] = pairs_[i];
        std::int64_t a = s.multiplicity(i);
        if (lo < 0 || hi >= a)
            throw ValidationError("U(2) bundle: pair (" + std::to_string(lo) + "," +
                                  std::to_string(hi) + ") at slot " + std::to_string(i + 1) +
                                  " violates 0 <= b- <= b+ < " + std::to_string(a));
        if ((lo + hi) % a != det_.isotropy_at(i))
            throw ValidationError("U(2) bundle: pair sum at slot " + std::to_string(i + 1) +
                                  " is not congruent to the determinant isotropy mod " +
                                  std::to_string(a));
    }
}

std::int64_t OrbifoldU2Bundle::equal_pair_count() const {
    std::int64_t n0 = 0;
    for (const auto& [lo, hi] : pairs_)
        if (lo == hi) ++n0;
    return n0;
}

} // namespace orbvortex
