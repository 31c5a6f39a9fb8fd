#include "orbvortex/vortex.hpp"

#include <algorithm>
#include <string>

#include "orbvortex/errors.hpp"

namespace orbvortex {

LineReduction::LineReduction(OrbifoldU2Bundle bundle, OrbifoldLineBundle line)
    : bundle_(std::move(bundle)), line_(std::move(line)) {
    if (!(bundle_.surface() == line_.surface()))
        throw SurfaceMismatchError("line reduction: bundle and line live on different surfaces");

    const auto& pairs = bundle_.isotropy_pairs();
    epsilon_.resize(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [lo, hi] = pairs[i];
        std::int64_t b = line_.isotropy_at(i);
        if (lo == hi) {
            if (b != lo)
                throw ValidationError("line reduction: isotropy " + std::to_string(b) +
                                      " at slot " + std::to_string(i + 1) +
                                      " is not the pair value " + std::to_string(lo));
            epsilon_[i] = 0;
        } else if (b == lo) {
            epsilon_[i] = -1;
        } else if (b == hi) {
            epsilon_[i] = +1;
        } else {
            throw ValidationError("line reduction: isotropy " + std::to_string(b) + " at slot " +
                                  std::to_string(i + 1) + " is neither " + std::to_string(lo) +
                                  " nor " + std::to_string(hi));
        }
    }

    // c1(L) minus the epsilon-weighted half-sum always lands in Z in this
    // representation; it equals deg_B(L).
    Rational check = line_.c1();
    const auto& s = bundle_.surface();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [lo, hi] = pairs[i];
        check -= Rational(epsilon_[i] * (hi - lo) + (hi + lo), 2 * s.multiplicity(i));
    }
    if (!check.is_integer())
        throw InvariantError("line reduction: integrality constraint violated");
}

std::int64_t LineReduction::count_zero() const {
    return std::count(epsilon_.begin(), epsilon_.end(), 0);
}
std::int64_t LineReduction::count_minus() const {
    return std::count(epsilon_.begin(), epsilon_.end(), -1);
}
std::int64_t LineReduction::count_plus() const {
    return std::count(epsilon_.begin(), epsilon_.end(), +1);
}

const char* to_string(FlatStatus::Tag tag) {
    switch (tag) {
        case FlatStatus::Tag::EmptyByGenusCount: return "EmptyByGenusCount";
        case FlatStatus::Tag::EmptyByWitness: return "EmptyByWitness";
        case FlatStatus::Tag::NonEmpty: return "NonEmpty";
    }
    throw InvariantError("flat status: unknown tag");
}

std::vector<OrbifoldU2Bundle> enumerate_u2_bundles(const OrbifoldLineBundle& det) {
    const auto& s = det.surface();
    const std::size_t n = s.cone_count();

    // Per-slot pair candidates in lexicographic order.
    std::vector<std::vector<OrbifoldU2Bundle::IsotropyPair>> slots(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t a = s.multiplicity(i);
        std::int64_t r = det.isotropy_at(i);
        for (std::int64_t lo = 0; lo < a; ++lo)
            for (std::int64_t hi = lo; hi < a; ++hi)
                if ((lo + hi) % a == r) slots[i].emplace_back(lo, hi);
    }

    std::vector<OrbifoldU2Bundle> out;
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        std::vector<OrbifoldU2Bundle::IsotropyPair> pairs(n);
        for (std::size_t i = 0; i < n; ++i) pairs[i] = slots[i][idx[i]];
        out.emplace_back(std::move(pairs), det);

        // Odometer with the leftmost slot most significant.
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (++idx[i] < slots[i].size()) break;
            idx[i] = 0;
            if (i == 0) return out;
        }
        if (n == 0) return out;
    }
}

std::int64_t irreducible_dim(const OrbifoldU2Bundle& e) {
    const auto& s = e.surface();
    Rational half(s.genus() - 1);
    half += e.determinant().c1();
    half += Rational(static_cast<std::int64_t>(s.cone_count()) - e.equal_pair_count());
    for (std::size_t i = 0; i < s.cone_count(); ++i) {
        const auto& [lo, hi] = e.isotropy_pairs()[i];
        half -= Rational(lo + hi, s.multiplicity(i));
    }
    if (!half.is_integer())
        throw InvariantError("irreducible_dim: odd dimension");
    return 2 * half.as_integer();
}

std::vector<LineReduction> compatible_reductions(const OrbifoldU2Bundle& e,
                                                 std::int64_t max_deg_b) {
    std::vector<LineReduction> out;
    if (max_deg_b < 0) return out;

    const auto& s = e.surface();
    const auto& pairs = e.isotropy_pairs();
    std::vector<std::size_t> branching;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (pairs[i].first != pairs[i].second) branching.push_back(i);

    const std::size_t k = branching.size();
    if (k >= 63)
        throw ValidationError("compatible reductions: too many branching cone points");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<std::int64_t> iso(pairs.size());
        for (std::size_t i = 0; i < pairs.size(); ++i) iso[i] = pairs[i].first;
        // Bit j set means the j-th branching slot picks b^+; iterating masks
        // in increasing order walks the choices lexicographically with the
        // lower pick first.
        for (std::size_t j = 0; j < k; ++j)
            if (mask & (std::uint64_t{1} << (k - 1 - j))) iso[branching[j]] = pairs[branching[j]].second;
        for (std::int64_t d = 0; d <= max_deg_b; ++d)
            out.emplace_back(e, OrbifoldLineBundle(s, d, iso));
    }
    return out;
}

std::int64_t morse_index(const LineReduction& r) {
    const auto& e = r.bundle();
    const auto& s = e.surface();
    Rational half(s.genus() - 1);
    half += e.determinant().c1();
    half -= Rational(2) * r.line().c1();
    half += Rational(r.count_minus());
    for (std::size_t i = 0; i < s.cone_count(); ++i) {
        const auto& [lo, hi] = e.isotropy_pairs()[i];
        if (r.epsilon()[i] == +1)
            half += Rational(hi - lo, s.multiplicity(i));
        else if (r.epsilon()[i] == -1)
            half += Rational(lo - hi, s.multiplicity(i));
    }
    if (!half.is_integer())
        throw InvariantError("morse_index: odd index");
    return 2 * half.as_integer();
}

std::vector<AbelianStratum> abelian_strata(const OrbifoldU2Bundle& e) {
    const Rational half_c1_det = e.determinant().c1() / Rational(2);
    std::vector<AbelianStratum> out;
    for (auto& r : compatible_reductions(e, half_c1_det.floor())) {
        Rational c1_line = r.line().c1();
        if (c1_line > half_c1_det) continue;
        Rational moment = e.determinant().c1() - Rational(2) * c1_line;
        std::int64_t dim = 2 * r.line().background_degree();
        std::int64_t index = morse_index(r);
        out.push_back(AbelianStratum{std::move(r), dim, index, moment, moment.is_zero()});
    }
    return out;
}

FlatStatus flat_status(const OrbifoldU2Bundle& e) {
    const auto& s = e.surface();
    const std::int64_t n = static_cast<std::int64_t>(s.cone_count());
    const std::int64_t n0 = e.equal_pair_count();

    if (s.genus() == 0 && n - n0 <= 2)
        return FlatStatus{FlatStatus::Tag::EmptyByGenusCount, std::nullopt};

    const std::int64_t det_deg_parity =
        ((e.determinant().background_degree() % 2) + 2) % 2;
    const Rational bound(1 - s.genus());

    // Exhaustive sign-vector search, lexicographic with -1 before +1.
    std::vector<int> eps(static_cast<std::size_t>(n), -1);
    while (true) {
        std::int64_t n_plus = std::count(eps.begin(), eps.end(), +1);
        if ((n_plus + det_deg_parity) % 2 == 1) {
            Rational lhs(n_plus);
            for (std::int64_t i = 0; i < n; ++i) {
                const auto& [lo, hi] = e.isotropy_pairs()[static_cast<std::size_t>(i)];
                lhs -= Rational(eps[static_cast<std::size_t>(i)] * (hi - lo),
                                s.multiplicity(static_cast<std::size_t>(i)));
            }
            if (lhs < bound)
                return FlatStatus{FlatStatus::Tag::EmptyByWitness, eps};
        }

        std::int64_t i = n;
        while (i > 0) {
            --i;
            if (eps[static_cast<std::size_t>(i)] == -1) {
                eps[static_cast<std::size_t>(i)] = +1;
                break;
            }
            eps[static_cast<std::size_t>(i)] = -1;
            if (i == 0) return FlatStatus{FlatStatus::Tag::NonEmpty, std::nullopt};
        }
        if (n == 0) return FlatStatus{FlatStatus::Tag::NonEmpty, std::nullopt};
    }
}

std::int64_t flat_expected_dim(const OrbifoldU2Bundle& e) {
    std::int64_t n = static_cast<std::int64_t>(e.surface().cone_count());
    return 6 * (e.surface().genus() - 1) + 2 * (n - e.equal_pair_count());
}

bool degree_condition(const OrbifoldLineBundle& det) {
    return det.c1() > Rational(2) * canonical_bundle(det.surface()).c1();
}

bool degree_condition(const OrbifoldU2Bundle& e) {
    return degree_condition(e.determinant());
}

bool odd_determinant(const OrbifoldU2Bundle& e) {
    const auto& s = e.surface();
    if (s.is_smooth())
        return ((e.determinant().background_degree() % 2) + 2) % 2 == 1;
    if (s.cone_count() >= 2 && !s.coprime_multiplicities())
        throw NotCoprimeError("odd determinant: multiplicities are not pairwise coprime");

    // In the coprime case every line bundle is L0^k, and c1 determines k.
    Rational k = e.determinant().c1() * Rational(s.multiplicity_product());
    if (!k.is_integer())
        throw InvariantError("odd determinant: c1(det) is not a multiple of c1(L0)");
    if (!(power(fundamental_line_bundle(s), k.as_integer()) == e.determinant()))
        throw InvariantError("odd determinant: determinant is not the expected power of L0");
    return ((k.as_integer() % 2) + 2) % 2 == 1;
}

ModuliReport classification_report(const OrbifoldLineBundle& det) {
    ModuliReport report{det, {}};
    const bool deg_cond = degree_condition(det);
    for (auto& e : enumerate_u2_bundles(det)) {
        std::int64_t dim = irreducible_dim(e);
        FlatStatus flat = flat_status(e);
        std::int64_t flat_dim = flat_expected_dim(e);
        auto strata = abelian_strata(e);
        report.rows.push_back(ModuliRow{std::move(e), dim, std::move(flat), flat_dim,
                                        std::move(strata), deg_cond});
    }
    return report;
}

} // namespace orbvortex
