#include "orbvortex/surface.hpp"

#include <numeric>
#include <string>

#include "orbvortex/errors.hpp"

namespace orbvortex {

OrbifoldSurface::OrbifoldSurface(std::int64_t genus, std::vector<std::int64_t> multiplicities)
    : genus_(genus), mult_(std::move(multiplicities)) {
    if (genus_ < 0)
        throw ValidationError("surface: genus must be non-negative, got " + std::to_string(genus_));
    for (std::int64_t a : mult_) {
        if (a < 2)
            throw ValidationError("surface: cone multiplicity must be >= 2, got " + std::to_string(a));
    }
}

bool OrbifoldSurface::coprime_multiplicities() const {
    for (std::size_t i = 0; i < mult_.size(); ++i)
        for (std::size_t j = i + 1; j < mult_.size(); ++j)
            if (std::gcd(mult_[i], mult_[j]) != 1) return false;
    return true;
}

std::int64_t OrbifoldSurface::multiplicity_product() const {
    std::int64_t p = 1;
    for (std::int64_t a : mult_) p *= a;
    return p;
}

Rational OrbifoldSurface::euler_characteristic() const {
    Rational e(2 - 2 * genus_);
    for (std::int64_t a : mult_) e -= Rational(a - 1, a);
    return e;
}

} // namespace orbvortex
