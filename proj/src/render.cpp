#include "orbvortex/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace orbvortex {

namespace {

std::string pad_right(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

std::string pad_left(std::string s, std::size_t width) {
    if (s.size() < width) s.insert(0, width - s.size(), ' ');
    return s;
}

std::string abelian_cell(const ModuliRow& row) {
    if (row.abelian.empty()) return "0";
    std::string cell = std::to_string(row.abelian.size()) + " (index ";
    for (std::size_t i = 0; i < row.abelian.size(); ++i) {
        if (i > 0) cell += ", ";
        cell += std::to_string(row.abelian[i].morse_index);
    }
    cell += ")";
    return cell;
}

std::string render_table(const ModuliReport& report) {
    const std::vector<std::string> headers = {"Isotropy", "IrredDim", "Flat",
                                              "AbelianVortices(index)"};
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : report.rows) {
        cells.push_back({render_isotropy_pairs(row.bundle), std::to_string(row.irreducible_dim),
                         to_string(row.flat.tag), abelian_cell(row)});
    }

    std::vector<std::size_t> width(headers.size());
    for (std::size_t c = 0; c < headers.size(); ++c) {
        width[c] = headers[c].size();
        for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
    }

    std::ostringstream os;
    os << pad_right(headers[0], width[0]) << " | " << pad_right(headers[1], width[1]) << " | "
       << pad_right(headers[2], width[2]) << " | " << headers[3] << "\n";
    os << std::string(width[0] + 1, '-') << "+" << std::string(width[1] + 2, '-') << "+"
       << std::string(width[2] + 2, '-') << "+" << std::string(width[3] + 1, '-') << "\n";
    for (const auto& row : cells) {
        os << pad_right(row[0], width[0]) << " | " << pad_left(row[1], width[1]) << " | "
           << pad_right(row[2], width[2]) << " | " << row[3] << "\n";
    }
    return os.str();
}

} // namespace

std::string render_surface(const OrbifoldSurface& s) {
    std::string out = "genus " + std::to_string(s.genus());
    if (s.is_smooth()) {
        out += ", smooth";
    } else {
        out += ", cone (";
        for (std::size_t i = 0; i < s.cone_count(); ++i) {
            if (i > 0) out += ",";
            out += std::to_string(s.multiplicity(i));
        }
        out += ")";
    }
    return out;
}

std::string render_line_bundle(const OrbifoldLineBundle& l) {
    std::string out = "(deg_b=" + std::to_string(l.background_degree()) + ", isotropy=[";
    for (std::size_t i = 0; i < l.isotropy().size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(l.isotropy_at(i));
    }
    out += "])";
    return out;
}

std::string render_isotropy_pairs(const OrbifoldU2Bundle& e) {
    std::string out = "(";
    const auto& pairs = e.isotropy_pairs();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i > 0) out += ",";
        out += "(" + std::to_string(pairs[i].first) + "," + std::to_string(pairs[i].second) + ")";
    }
    out += ")";
    return out;
}

ModuliReport post_quotient_dims(ModuliReport report) {
    for (auto& row : report.rows)
        if (row.irreducible_dim > 0) --row.irreducible_dim;
    return report;
}

std::string render_moduli_report(const ModuliReport& report, bool post_quotient) {
    std::ostringstream os;
    os << "surface: " << render_surface(report.det.surface()) << "\n";
    os << "det: " << render_line_bundle(report.det) << ", c1 = " << report.det.c1() << "\n";
    os << "degree condition c1(det) > 2 c1(K): "
       << (degree_condition(report.det) ? "yes" : "no") << "\n";
    os << "dimensions: " << (post_quotient ? "after" : "before") << " the S^1 quotient\n";
    os << "\n";
    os << render_table(post_quotient ? post_quotient_dims(report) : report);
    return os.str();
}

std::string render_seifert_report(const SeifertMonopoleReport& report, bool post_quotient) {
    std::ostringstream os;
    os << "type a: vortices on bundles with det E' = det E\n";
    os << "\n";
    os << render_moduli_report(report.type_a, post_quotient);
    os << "\n";
    os << "type b: vortices on bundles with det = K^2 (x) det^-1 = "
       << render_line_bundle(report.type_b_det) << ", c1 = " << report.type_b_det.c1() << "\n";
    if (report.type_b_vanishes) {
        os << "type b vanishes: degree condition holds\n";
    } else {
        os << "\n";
        os << render_moduli_report(*report.type_b, post_quotient);
    }
    return os.str();
}

std::string render_critical_parameters(const CriticalParameters& params) {
    std::ostringstream os;
    os << "flat: tau = " << params.flat_tau << "*pi, B flat U(2)\n";
    os << "seiberg-witten: tau = 2*pi*n with c1(L1) = (1-n)*c1(E)\n";
    for (const auto& ray : params.sw) {
        os << "  n = " << ray.n << ": multiplier " << ray.c1_multiplier;
        if (ray.c1_multiplier == 0) os << " (torsion ray)";
        os << "\n";
    }
    return os.str();
}

} // namespace orbvortex
