#include "orbvortex/spec_parse.hpp"

#include <charconv>

#include "orbvortex/errors.hpp"

namespace orbvortex {

namespace {

std::int64_t parse_int(const std::string& token, const char* what) {
    std::int64_t value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ValidationError(std::string(what) + ": '" + token + "' is not an integer");
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

} // namespace

std::vector<std::int64_t> parse_cone_list(const std::string& text) {
    std::vector<std::int64_t> out;
    if (text.empty()) return out;
    for (const auto& token : split(text, ','))
        out.push_back(parse_int(token, "cone multiplicity"));
    return out;
}

OrbifoldLineBundle parse_bundle_spec(const OrbifoldSurface& surface, const std::string& text) {
    if (text.rfind("L0", 0) == 0) {
        std::int64_t k = 1;
        if (text.size() > 2) {
            if (text[2] != '^')
                throw ValidationError("bundle spec: '" + text + "' should be L0 or L0^k");
            k = parse_int(text.substr(3), "bundle spec exponent");
        }
        return power(fundamental_line_bundle(surface), k);
    }

    auto tokens = split(text, ',');
    if (tokens.size() != surface.cone_count() + 1)
        throw ValidationError("bundle spec: '" + text + "' has " + std::to_string(tokens.size()) +
                              " entries, expected 1 background degree + " +
                              std::to_string(surface.cone_count()) + " isotropies");
    std::int64_t deg_b = parse_int(tokens[0], "bundle spec background degree");
    std::vector<std::int64_t> isotropy;
    for (std::size_t i = 1; i < tokens.size(); ++i)
        isotropy.push_back(parse_int(tokens[i], "bundle spec isotropy"));
    return OrbifoldLineBundle(surface, deg_b, std::move(isotropy));
}

std::vector<OrbifoldU2Bundle::IsotropyPair> parse_pairs_spec(const OrbifoldSurface& surface,
                                                             const std::string& text) {
    std::vector<OrbifoldU2Bundle::IsotropyPair> out;
    if (text.empty()) {
        if (!surface.is_smooth())
            throw ValidationError("pair spec: empty, but the surface has " +
                                  std::to_string(surface.cone_count()) + " cone points");
        return out;
    }
    auto tokens = split(text, ',');
    if (tokens.size() != surface.cone_count())
        throw ValidationError("pair spec: '" + text + "' has " + std::to_string(tokens.size()) +
                              " pairs, expected " + std::to_string(surface.cone_count()));
    for (const auto& token : tokens) {
        std::size_t pos = token.find(':');
        if (pos == std::string::npos)
            throw ValidationError("pair spec: '" + token + "' is missing the ':' separator");
        out.emplace_back(parse_int(token.substr(0, pos), "pair spec"),
                         parse_int(token.substr(pos + 1), "pair spec"));
    }
    return out;
}

Rational parse_rational(const std::string& text) {
    std::size_t pos = text.find('/');
    if (pos == std::string::npos) return Rational(parse_int(text, "rational"));
    return Rational(parse_int(text.substr(0, pos), "rational numerator"),
                    parse_int(text.substr(pos + 1), "rational denominator"));
}

} // namespace orbvortex
