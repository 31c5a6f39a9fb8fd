#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orbvortex/line_bundle.hpp"
#include "orbvortex/u2_bundle.hpp"

namespace orbvortex {

/// A line subbundle compatible with a U(2) bundle: the line's isotropy
/// picks b_i^- or b_i^+ at every cone point. The choice is recorded in the
/// epsilon vector: 0 where the pair is equal, -1 where the lower entry was
/// picked, +1 where the upper one was.
class LineReduction {
public:
    LineReduction(OrbifoldU2Bundle bundle, OrbifoldLineBundle line);

    const OrbifoldU2Bundle& bundle() const { return bundle_; }
    const OrbifoldLineBundle& line() const { return line_; }
    const std::vector<int>& epsilon() const { return epsilon_; }

    std::int64_t count_zero() const;  // n_0
    std::int64_t count_minus() const; // n_-
    std::int64_t count_plus() const;  // n_+

    bool operator==(const LineReduction&) const = default;

private:
    OrbifoldU2Bundle bundle_;
    OrbifoldLineBundle line_;
    std::vector<int> epsilon_;
};

/// Emptiness classification for the space of irreducible projectively flat
/// connections on a U(2) bundle.
///
///   EmptyByGenusCount: g = 0 and n - n_0 <= 2.
///   EmptyByWitness:    some sign vector (eps_i) in {-1,+1}^n satisfies
///                      n_+ + deg_B(det) = 1 mod 2 and
///                      n_+ - sum_i eps_i (b_i^+ - b_i^-)/a_i < 1 - g;
///                      the witness is the first such vector in
///                      lexicographic order (-1 before +1).
///   NonEmpty:          no such vector exists (the criterion is an iff).
struct FlatStatus {
    enum class Tag { EmptyByGenusCount, EmptyByWitness, NonEmpty };

    Tag tag;
    std::optional<std::vector<int>> witness; // present iff EmptyByWitness

    bool is_empty() const { return tag != Tag::NonEmpty; }
    bool operator==(const FlatStatus&) const = default;
};

const char* to_string(FlatStatus::Tag tag);

/// A nonempty critical stratum of abelian vortices: a compatible line
/// reduction with deg_B(line) >= 0 and c1(line) <= c1(det E)/2, annotated
/// with its dimension (that of Sym^{deg_B} of the surface), Morse-Bott
/// index, and the value of the Higgs-strength moment map as an exact
/// coefficient of pi.
struct AbelianStratum {
    LineReduction reduction;
    std::int64_t stratum_dimension; // 2 deg_B(line)
    std::int64_t morse_index;
    Rational moment_map_value;      // c1(det E) - 2 c1(line), coefficient of pi
    bool at_stability_boundary;     // moment map value exactly zero

    bool operator==(const AbelianStratum&) const = default;
};

/// One classification row per U(2) bundle with the given determinant.
struct ModuliRow {
    OrbifoldU2Bundle bundle;
    std::int64_t irreducible_dim;
    FlatStatus flat;
    std::int64_t flat_expected_dim;
    std::vector<AbelianStratum> abelian;
    bool degree_condition;

    bool operator==(const ModuliRow&) const = default;
};

struct ModuliReport {
    OrbifoldLineBundle det;
    std::vector<ModuliRow> rows;

    bool operator==(const ModuliReport&) const = default;
};

/// All U(2) isotropy-pair lists with 0 <= b^- <= b^+ < a_i and pair sums
/// congruent to the determinant's isotropy, in lexicographic order.
/// A smooth surface yields exactly one bundle with an empty pair list.
std::vector<OrbifoldU2Bundle> enumerate_u2_bundles(const OrbifoldLineBundle& det);

/// Expected real dimension of the irreducible vortex moduli space:
///   2 (g - 1 + c1(det E) + (n - n_0) - sum_i (b_i^- + b_i^+)/a_i),
/// always an even integer (the fractional parts cancel against c1(det)).
std::int64_t irreducible_dim(const OrbifoldU2Bundle& e);

/// All compatible line reductions with background degree in [0, max_deg_b]:
/// every choice of b^- vs b^+ at the unequal slots, crossed with the degree
/// range. Choices are ordered lexicographically (-1 before +1), degrees
/// ascending within each choice. Negative max_deg_b yields an empty list.
std::vector<LineReduction> compatible_reductions(const OrbifoldU2Bundle& e,
                                                 std::int64_t max_deg_b);

/// Morse-Bott index of the Higgs-strength function at the abelian stratum
/// of a reduction:
///   2 [ g - 1 + c1(det E) - 2 c1(L)
///       + sum_{eps_i = +1} (b_i^+ - b_i^-)/a_i
///       + n_- + sum_{eps_i = -1} (b_i^- - b_i^+)/a_i ],
/// an even integer. In the smooth case this is 2 (g - 1 + deg E - 2 deg L).
std::int64_t morse_index(const LineReduction& r);

/// Nonempty abelian vortex strata of a bundle: compatible reductions with
/// deg_B(line) >= 0 and c1(line) <= c1(det E)/2, annotated per stratum.
std::vector<AbelianStratum> abelian_strata(const OrbifoldU2Bundle& e);

FlatStatus flat_status(const OrbifoldU2Bundle& e);

/// Expected dimension of the projectively flat stratum:
/// 6(g - 1) + 2(n - n_0).
std::int64_t flat_expected_dim(const OrbifoldU2Bundle& e);

/// c1(det) > 2 c1(K). Under this condition the Seifert classification
/// rules out the Serre-dual solution type.
bool degree_condition(const OrbifoldLineBundle& det);
bool degree_condition(const OrbifoldU2Bundle& e);

/// Whether the determinant is "odd": odd degree in the smooth case, an odd
/// power of the fundamental line bundle in the coprime orbifold case.
/// Throws NotCoprimeError when n >= 2 and the multiplicities share factors.
bool odd_determinant(const OrbifoldU2Bundle& e);

/// Full classification: enumerate all bundles with the given determinant
/// and annotate each with dimension, flat status, abelian strata and the
/// degree condition. Row order is the lexicographic enumeration order.
ModuliReport classification_report(const OrbifoldLineBundle& det);

} // namespace orbvortex
