#include "orbvortex/line_bundle.hpp"

#include <algorithm>
#include <string>

#include "orbvortex/errors.hpp"

namespace orbvortex {

namespace {

// Euclidean residue in [0, m).
std::int64_t mod_pos(std::int64_t x, std::int64_t m) {
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

// Modular inverse of x mod m via extended Euclid; requires gcd(x, m) = 1.
std::int64_t mod_inverse(std::int64_t x, std::int64_t m) {
    std::int64_t r0 = m, r1 = mod_pos(x, m);
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        std::int64_t t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1)
        throw InvariantError("mod_inverse: arguments not coprime");
    return mod_pos(t0, m);
}

} // namespace

OrbifoldLineBundle::OrbifoldLineBundle(OrbifoldSurface surface, std::int64_t background_degree,
                                       std::vector<std::int64_t> isotropy)
    : surface_(std::move(surface)), deg_b_(background_degree), isotropy_(std::move(isotropy)) {
    if (isotropy_.size() != surface_.cone_count())
        throw ValidationError("line bundle: isotropy length " + std::to_string(isotropy_.size()) +
                              " does not match cone point count " +
                              std::to_string(surface_.cone_count()));
    for (std::size_t i = 0; i < isotropy_.size(); ++i) {
        if (isotropy_[i] < 0 || isotropy_[i] >= surface_.multiplicity(i))
            throw ValidationError("line bundle: isotropy b_" + std::to_string(i + 1) + " = " +
                                  std::to_string(isotropy_[i]) + " outside [0, " +
                                  std::to_string(surface_.multiplicity(i)) + ")");
    }
}

OrbifoldLineBundle OrbifoldLineBundle::trivial(const OrbifoldSurface& surface) {
    return OrbifoldLineBundle(surface, 0, std::vector<std::int64_t>(surface.cone_count(), 0));
}

bool OrbifoldLineBundle::is_trivial() const {
    return deg_b_ == 0 &&
           std::all_of(isotropy_.begin(), isotropy_.end(), [](std::int64_t b) { return b == 0; });
}

Rational OrbifoldLineBundle::c1() const {
    Rational c(deg_b_);
    for (std::size_t i = 0; i < isotropy_.size(); ++i)
        c += Rational(isotropy_[i], surface_.multiplicity(i));
    return c;
}

OrbifoldLineBundle canonical_bundle(const OrbifoldSurface& surface) {
    std::vector<std::int64_t> iso;
    iso.reserve(surface.cone_count());
    for (std::int64_t a : surface.multiplicities()) iso.push_back(a - 1);
    return OrbifoldLineBundle(surface, 2 * surface.genus() - 2, std::move(iso));
}

OrbifoldLineBundle tensor(const OrbifoldLineBundle& l1, const OrbifoldLineBundle& l2) {
    if (!(l1.surface() == l2.surface()))
        throw SurfaceMismatchError("tensor: bundles live on different surfaces");
    const auto& s = l1.surface();
    std::vector<std::int64_t> iso(s.cone_count());
    std::int64_t deg = l1.background_degree() + l2.background_degree();
    for (std::size_t i = 0; i < s.cone_count(); ++i) {
        std::int64_t sum = l1.isotropy_at(i) + l2.isotropy_at(i);
        std::int64_t a = s.multiplicity(i);
        iso[i] = sum % a;
        deg += sum / a; // carry; both summands are in [0, a)
    }
    return OrbifoldLineBundle(s, deg, std::move(iso));
}

OrbifoldLineBundle dual(const OrbifoldLineBundle& l) {
    const auto& s = l.surface();
    std::vector<std::int64_t> iso(s.cone_count());
    std::int64_t nontrivial = 0;
    for (std::size_t i = 0; i < s.cone_count(); ++i) {
        std::int64_t b = l.isotropy_at(i);
        if (b > 0) {
            iso[i] = s.multiplicity(i) - b;
            ++nontrivial;
        } else {
            iso[i] = 0;
        }
    }
    return OrbifoldLineBundle(s, -l.background_degree() - nontrivial, std::move(iso));
}

OrbifoldLineBundle power(const OrbifoldLineBundle& l, std::int64_t k) {
    // Closed form of the k-fold tensor: isotropy k*b_i mod a_i, background
    // degree forced by c1 = k*c1(l).
    const auto& s = l.surface();
    std::vector<std::int64_t> iso(s.cone_count());
    Rational deg = Rational(k) * l.c1();
    for (std::size_t i = 0; i < iso.size(); ++i) {
        std::int64_t a = s.multiplicity(i);
        iso[i] = static_cast<std::int64_t>(
            ((static_cast<__int128>(k) * l.isotropy_at(i)) % a + a) % a);
        deg -= Rational(iso[i], a);
    }
    if (!deg.is_integer())
        throw InvariantError("power: non-integral background degree");
    return OrbifoldLineBundle(s, deg.as_integer(), std::move(iso));
}

OrbifoldLineBundle fundamental_line_bundle(const OrbifoldSurface& surface) {
    if (surface.is_smooth())
        throw NoConePointsError("fundamental line bundle: surface has no cone points");
    if (!surface.coprime_multiplicities())
        throw NotCoprimeError("fundamental line bundle: multiplicities are not pairwise coprime");

    const auto& mult = surface.multiplicities();
    std::vector<std::int64_t> iso(mult.size());
    for (std::size_t i = 0; i < mult.size(); ++i) {
        std::int64_t rest = 1;
        for (std::size_t j = 0; j < mult.size(); ++j)
            if (j != i) rest = mod_pos(rest * mod_pos(mult[j], mult[i]), mult[i]);
        iso[i] = mod_inverse(rest, mult[i]);
    }

    // deg_B is forced by c1 = 1/(a_1 ... a_n).
    Rational deg = Rational(1, surface.multiplicity_product());
    for (std::size_t i = 0; i < mult.size(); ++i) deg -= Rational(iso[i], mult[i]);
    if (!deg.is_integer())
        throw InvariantError("fundamental line bundle: non-integral background degree");
    return OrbifoldLineBundle(surface, deg.as_integer(), std::move(iso));
}

DivisorClass::DivisorClass(OrbifoldSurface surface) : surface_(std::move(surface)) {}

DivisorClass& DivisorClass::add_cone_point(std::size_t index, std::int64_t n_p) {
    if (index >= surface_.cone_count())
        throw ValidationError("divisor: cone point index " + std::to_string(index) +
                              " out of range");
    cone_[index] += n_p;
    return *this;
}

DivisorClass& DivisorClass::add_smooth_point(const std::string& label, std::int64_t n_p) {
    smooth_[label] += n_p;
    return *this;
}

Rational DivisorClass::degree() const {
    Rational d(0);
    for (const auto& [i, n] : cone_) d += Rational(n, surface_.multiplicity(i));
    for (const auto& [label, n] : smooth_) d += Rational(n);
    return d;
}

OrbifoldLineBundle line_bundle_from_divisor(const DivisorClass& d) {
    const auto& s = d.surface();
    std::vector<std::int64_t> iso(s.cone_count(), 0);
    for (const auto& [i, n] : d.cone_coefficients()) iso[i] = mod_pos(n, s.multiplicity(i));

    Rational deg = d.degree();
    for (std::size_t i = 0; i < iso.size(); ++i) deg -= Rational(iso[i], s.multiplicity(i));
    if (!deg.is_integer())
        throw InvariantError("line bundle from divisor: non-integral background degree");
    return OrbifoldLineBundle(s, deg.as_integer(), std::move(iso));
}

} // namespace orbvortex
