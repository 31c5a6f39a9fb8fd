#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "orbvortex/rational.hpp"
#include "orbvortex/surface.hpp"

namespace orbvortex {

/// Topological orbifold line bundle, stored as the pair
/// (background degree, isotropy vector).
///
/// The orbifold first Chern class c1 = deg_B + sum_i b_i/a_i is derived,
/// never stored, so the integrality constraint tying c1 to the isotropy
/// holds by construction. Isotropy entries satisfy 0 <= b_i < a_i.
class OrbifoldLineBundle {
public:
    OrbifoldLineBundle(OrbifoldSurface surface, std::int64_t background_degree,
                       std::vector<std::int64_t> isotropy);

    static OrbifoldLineBundle trivial(const OrbifoldSurface& surface);

    const OrbifoldSurface& surface() const { return surface_; }
    std::int64_t background_degree() const { return deg_b_; }
    const std::vector<std::int64_t>& isotropy() const { return isotropy_; }
    std::int64_t isotropy_at(std::size_t i) const { return isotropy_.at(i); }

    bool is_trivial() const;

    /// deg_B + sum_i b_i/a_i, exact.
    Rational c1() const;

    bool operator==(const OrbifoldLineBundle&) const = default;

private:
    OrbifoldSurface surface_;
    std::int64_t deg_b_;
    std::vector<std::int64_t> isotropy_;
};

/// Canonical bundle K, with Seifert invariants (2g-2, a_1-1, ..., a_n-1).
OrbifoldLineBundle canonical_bundle(const OrbifoldSurface& surface);

/// Tensor product. Isotropies add mod a_i; carries land in the background
/// degree, which makes c1 additive on the nose.
OrbifoldLineBundle tensor(const OrbifoldLineBundle& l1, const OrbifoldLineBundle& l2);

/// Dual bundle: isotropy (-b_i) mod a_i, background degree
/// -deg_B - #{i : b_i > 0}, so that c1(dual) = -c1.
OrbifoldLineBundle dual(const OrbifoldLineBundle& l);

/// k-th tensor power (negative k through the dual); c1 scales by k.
OrbifoldLineBundle power(const OrbifoldLineBundle& l, std::int64_t k);

/// Generator of the topological Picard group when the multiplicities are
/// pairwise coprime: the unique bundle with c1 = 1/(a_1 ... a_n). The
/// isotropy is b_i = (prod_{j != i} a_j)^{-1} mod a_i via extended Euclid,
/// and the background degree is the unique integer making c1 come out right.
///
/// Throws NotCoprimeError / NoConePointsError when the hypotheses fail.
OrbifoldLineBundle fundamental_line_bundle(const OrbifoldSurface& surface);

/// Divisor class on an orbifold surface: a finite linear combination of
/// points with coefficients n_p/a_p, where a_p is the multiplicity of the
/// cone point (referenced by index) or 1 for a smooth point (referenced by
/// a fresh label).
class DivisorClass {
public:
    explicit DivisorClass(OrbifoldSurface surface);

    /// Adds n_p/a_i at cone point i (coefficients accumulate).
    DivisorClass& add_cone_point(std::size_t index, std::int64_t n_p);

    /// Adds the integer coefficient n_p at a labeled smooth point.
    DivisorClass& add_smooth_point(const std::string& label, std::int64_t n_p);

    const OrbifoldSurface& surface() const { return surface_; }
    const std::map<std::size_t, std::int64_t>& cone_coefficients() const { return cone_; }
    const std::map<std::string, std::int64_t>& smooth_coefficients() const { return smooth_; }

    /// sum_p n_p/a_p, exact.
    Rational degree() const;

private:
    OrbifoldSurface surface_;
    std::map<std::size_t, std::int64_t> cone_;
    std::map<std::string, std::int64_t> smooth_;
};

/// Line bundle of a divisor class: isotropy n_{p_i} mod a_i at the cone
/// points, background degree deg(D) - sum_i b_i/a_i (an integer, since
/// smooth points contribute integers). Then c1 = deg(D).
OrbifoldLineBundle line_bundle_from_divisor(const DivisorClass& d);

} // namespace orbvortex
