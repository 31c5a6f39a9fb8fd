// Command-line front end: exact invariants of orbifold Riemann surfaces,
// orbifold line/U(2) bundles, vortex moduli classification reports, and the
// Seifert-manifold reports built from them. All arithmetic is exact; output
// is deterministic byte for byte.

#include <complex>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "orbvortex/errors.hpp"
#include "orbvortex/index_theory.hpp"
#include "orbvortex/json_io.hpp"
#include "orbvortex/render.hpp"
#include "orbvortex/seifert.hpp"
#include "orbvortex/spec_parse.hpp"
#include "orbvortex/vortex.hpp"

namespace {

using namespace orbvortex;

OrbifoldSurface make_surface(std::int64_t genus, const std::string& cone) {
    return OrbifoldSurface(genus, parse_cone_list(cone));
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

void run_surface(std::int64_t genus, const std::string& cone) {
    OrbifoldSurface s = make_surface(genus, cone);
    std::cout << "surface: " << render_surface(s) << "\n";
    std::cout << "euler characteristic: " << s.euler_characteristic() << "\n";
    std::cout << "c1(K): " << canonical_bundle(s).c1() << "\n";
    std::cout << "coprime multiplicities: " << (s.coprime_multiplicities() ? "yes" : "no") << "\n";
}

void run_picard(std::int64_t genus, const std::string& cone, std::int64_t k) {
    OrbifoldSurface s = make_surface(genus, cone);
    OrbifoldLineBundle l = power(fundamental_line_bundle(s), k);
    std::cout << "L0^" << k << " on " << render_surface(s) << "\n";
    std::cout << "deg_b = " << l.background_degree() << "\n";
    std::cout << "isotropy = [";
    for (std::size_t i = 0; i < l.isotropy().size(); ++i) {
        if (i > 0) std::cout << ",";
        std::cout << l.isotropy_at(i);
    }
    std::cout << "]\n";
    std::cout << "c1 = " << l.c1() << "\n";
}

void run_rr(std::int64_t genus, const std::string& cone, const std::string& line_spec,
            const std::string& pairs_spec, const std::string& det_spec) {
    OrbifoldSurface s = make_surface(genus, cone);
    OrbifoldLineBundle l = parse_bundle_spec(s, line_spec);
    std::cout << "L = " << render_line_bundle(l) << ", c1 = " << l.c1() << "\n";
    std::cout << "chi(L) = " << chi_line(l) << "\n";
    if (!pairs_spec.empty() || !det_spec.empty()) {
        OrbifoldU2Bundle e(parse_pairs_spec(s, pairs_spec), parse_bundle_spec(s, det_spec));
        std::cout << "E = " << render_isotropy_pairs(e) << ", det "
                  << render_line_bundle(e.determinant()) << "\n";
        std::cout << "chi(E) = " << chi_u2(e) << "\n";
    }
}

void run_bundles(std::int64_t genus, const std::string& cone, const std::string& det_spec) {
    OrbifoldSurface s = make_surface(genus, cone);
    OrbifoldLineBundle det = parse_bundle_spec(s, det_spec);
    auto bundles = enumerate_u2_bundles(det);
    std::cout << "surface: " << render_surface(s) << "\n";
    std::cout << "det: " << render_line_bundle(det) << ", c1 = " << det.c1() << "\n";
    std::cout << bundles.size() << " bundles:\n";
    for (std::size_t i = 0; i < bundles.size(); ++i)
        std::cout << "  " << (i + 1) << ": " << render_isotropy_pairs(bundles[i]) << "\n";
}

void run_report(std::int64_t genus, const std::string& cone, const std::string& det_spec,
                const std::string& format, bool post_quotient) {
    OrbifoldSurface s = make_surface(genus, cone);
    ModuliReport report = classification_report(parse_bundle_spec(s, det_spec));
    if (format == "json")
        std::cout << dump_json(to_json(post_quotient ? post_quotient_dims(report) : report));
    else
        std::cout << render_moduli_report(report, post_quotient);
}

void run_seifert(std::int64_t genus, const std::string& cone, const std::string& euler_spec,
                 const std::string& det_spec, const std::string& volume,
                 const std::string& format) {
    OrbifoldSurface s = make_surface(genus, cone);
    SeifertManifold y(parse_bundle_spec(s, euler_spec), parse_rational(volume));
    SeifertMonopoleReport report = seifert_monopole_report(y, parse_bundle_spec(s, det_spec));
    if (format == "json") {
        nlohmann::json j = to_json(report);
        j["euler_bundle"] = to_json(y.euler_bundle());
        j["volume"] = to_json(y.volume());
        j["c_eta_pi_coefficient"] = to_json(c_eta(y));
        std::cout << dump_json(j);
        return;
    }
    std::cout << "Seifert manifold: S(L), L = " << render_line_bundle(y.euler_bundle())
              << ", c1 = " << y.euler_bundle().c1() << "\n";
    std::cout << "base: " << render_surface(s) << ", volume " << y.volume() << "\n";
    std::cout << "c_eta = " << c_eta(y) << " * pi\n";
    std::cout << "dirac comparison shift = " << dirac_comparison_shift(y) << " * pi\n";
    std::cout << "\n" << render_seifert_report(report);
}

void run_s1sigma(std::int64_t genus, std::int64_t deg_e, const std::string& format) {
    OrbifoldSurface s(genus, {});
    SeifertMonopoleReport report = s1_times_sigma_report(s, deg_e);
    if (format == "json") {
        std::cout << dump_json(to_json(report));
        return;
    }
    std::cout << "S^1 x Sigma, Sigma of genus " << genus << ", deg E = " << deg_e << "\n";
    std::cout << "\n" << render_seifert_report(report);
}

int run_verify_zeta(std::int64_t max_a, double tol) {
    if (max_a < 2) throw ValidationError("verify-zeta: --max-a must be >= 2");
    std::int64_t total = 0, passed = 0;
    double worst_re = 0.0, worst_im = 0.0;
    std::int64_t first_bad_a = 0, first_bad_b = 0;
    for (std::int64_t a = 2; a <= max_a; ++a) {
        for (std::int64_t b = 1; b < a; ++b) {
            ++total;
            ZetaSumResult z = zeta_weight_sum(a, b);
            double re_err = std::abs(z.numeric.real() - static_cast<double>(z.closed_form));
            double im_err = std::abs(z.numeric.imag());
            worst_re = std::max(worst_re, re_err);
            worst_im = std::max(worst_im, im_err);
            if (re_err <= tol && im_err <= tol) {
                ++passed;
            } else if (first_bad_a == 0) {
                first_bad_a = a;
                first_bad_b = b;
            }
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf), "max |re err| = %.3e, max |im| = %.3e", worst_re, worst_im);
    if (passed == total) {
        std::cout << "PASS " << passed << "/" << total << " (" << buf << ")\n";
        return 0;
    }
    std::cout << "FAIL " << passed << "/" << total << " (" << buf << "; first failure a="
              << first_bad_a << ", b=" << first_bad_b << ")\n";
    return 1;
}

void run_critical_tau(std::int64_t bound) {
    std::cout << render_critical_parameters(u2_critical_parameters(bound));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact SO(3) vortex moduli computations over orbifold Riemann surfaces"};
    app.require_subcommand(1);

    std::int64_t genus = 0, power_k = 1, deg_e = 0, max_a = 60, bound = 1;
    double tol = 1e-8;
    std::string cone, line_spec, pairs_spec, det_spec, euler_spec;
    std::string format = "table", volume = "1";
    bool post_quotient = false;

    auto* cmd_surface = app.add_subcommand("surface", "orbifold surface invariants");
    cmd_surface->add_option("--genus", genus, "genus")->required();
    cmd_surface->add_option("--cone", cone, "cone multiplicities a1,a2,...");

    auto* cmd_picard = app.add_subcommand("picard", "powers of the fundamental line bundle");
    cmd_picard->add_option("--genus", genus)->required();
    cmd_picard->add_option("--cone", cone);
    cmd_picard->add_option("--power", power_k, "exponent k of L0^k");

    auto* cmd_rr = app.add_subcommand("rr", "Riemann-Roch Euler characteristics");
    cmd_rr->add_option("--genus", genus)->required();
    cmd_rr->add_option("--cone", cone);
    cmd_rr->add_option("--line", line_spec, "line bundle spec")->required();
    auto* rr_u2 = cmd_rr->add_option("--u2", pairs_spec, "U(2) isotropy pairs b-:b+,...");
    cmd_rr->add_option("--det", det_spec, "determinant spec")->needs(rr_u2);
    rr_u2->needs(cmd_rr->get_option("--det"));

    auto* cmd_bundles = app.add_subcommand("bundles", "enumerate U(2) bundles for a determinant");
    cmd_bundles->add_option("--genus", genus)->required();
    cmd_bundles->add_option("--cone", cone);
    cmd_bundles->add_option("--det", det_spec)->required();

    auto* cmd_report = app.add_subcommand("report", "vortex moduli classification report");
    cmd_report->add_option("--genus", genus)->required();
    cmd_report->add_option("--cone", cone);
    cmd_report->add_option("--det", det_spec)->required();
    cmd_report->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));
    cmd_report->add_flag("--post-quotient", post_quotient,
                         "subtract 1 from positive irreducible dimensions");

    auto* cmd_seifert = app.add_subcommand("seifert", "monopole report on a Seifert manifold");
    cmd_seifert->add_option("--genus", genus)->required();
    cmd_seifert->add_option("--cone", cone);
    cmd_seifert->add_option("--euler", euler_spec, "euler bundle of the fibration")->required();
    cmd_seifert->add_option("--det", det_spec)->required();
    cmd_seifert->add_option("--volume", volume, "base volume p/q");
    cmd_seifert->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    auto* cmd_s1sigma = app.add_subcommand("s1sigma", "monopole report on S^1 x Sigma");
    cmd_s1sigma->add_option("--genus", genus)->required();
    cmd_s1sigma->add_option("--deg-e", deg_e, "degree of the U(2) bundle")->required();
    cmd_s1sigma->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

    auto* cmd_zeta = app.add_subcommand("verify-zeta", "root-of-unity sum oracle vs closed form");
    cmd_zeta->add_option("--max-a", max_a, "largest multiplicity a (inclusive)")->required();
    cmd_zeta->add_option("--tol", tol, "tolerance");

    auto* cmd_tau = app.add_subcommand("critical-tau", "critical U(2) monopole parameters");
    cmd_tau->add_option("--bound", bound, "list tau = 2*pi*n for |n| <= bound")->required();

    try {
        app.parse(argc, argv);

        if (cmd_surface->parsed()) {
            run_surface(genus, cone);
        } else if (cmd_picard->parsed()) {
            run_picard(genus, cone, power_k);
        } else if (cmd_rr->parsed()) {
            run_rr(genus, cone, line_spec, pairs_spec, det_spec);
        } else if (cmd_bundles->parsed()) {
            run_bundles(genus, cone, det_spec);
        } else if (cmd_report->parsed()) {
            run_report(genus, cone, det_spec, format, post_quotient);
        } else if (cmd_seifert->parsed()) {
            run_seifert(genus, cone, euler_spec, det_spec, volume, format);
        } else if (cmd_s1sigma->parsed()) {
            run_s1sigma(genus, deg_e, format);
        } else if (cmd_zeta->parsed()) {
            return run_verify_zeta(max_a, tol);
        } else if (cmd_tau->parsed()) {
            run_critical_tau(bound);
        }
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
