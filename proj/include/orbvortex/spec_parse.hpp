#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orbvortex/u2_bundle.hpp"

namespace orbvortex {

// Textual forms accepted on the command line. Errors are ValidationError
// with a one-line message naming the offending token.

/// Comma-separated multiplicities, e.g. "2,3,5". Empty string means smooth.
std::vector<std::int64_t> parse_cone_list(const std::string& text);

/// Bundle spec: either "L0^k" (also plain "L0"), which requires pairwise
/// coprime multiplicities, or the explicit form "degB,b1,...,bn" whose
/// length must be 1 + n.
OrbifoldLineBundle parse_bundle_spec(const OrbifoldSurface& surface, const std::string& text);

/// Isotropy pairs "b1-:b1+,b2-:b2+,...", one colon pair per cone point.
/// Empty string means the smooth case.
std::vector<OrbifoldU2Bundle::IsotropyPair> parse_pairs_spec(const OrbifoldSurface& surface,
                                                             const std::string& text);

/// "p/q" or "p".
Rational parse_rational(const std::string& text);

} // namespace orbvortex
