#pragma once

#include <CLI11.hpp>

#include <complex>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "nctorus/config.hpp"
#include "nctorus/errors.hpp"
#include "nctorus/fields.hpp"
#include "nctorus/lab.hpp"
#include "nctorus/ncpoly.hpp"
#include "nctorus/repr.hpp"
#include "nctorus/serialize.hpp"
#include "nctorus/sklyanin.hpp"
#include "nctorus/torus.hpp"

// Thin command-line adapters over the library: every subcommand parses
// its inputs, calls the corresponding operation, and serializes the
// result. Exit codes: 0 success, 2 domain error (diagnostic on stderr),
// 64 usage error.

namespace nctorus::cli {

namespace detail {

inline bool looks_rational(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c == '.' || c == 'e' || c == 'E') return false;
    return true;
}

inline double parse_turns(const std::string& s) {
    if (detail::looks_rational(s)) return torus::RationalAngle::parse(s).value();
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw ParseError("invalid angle: '" + s + "'");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("invalid angle: '" + s + "'");
    }
}

inline Json parse_json(const std::string& text, const std::string& what) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON for " + what);
    return j;
}

inline std::string format_double(double v) { return nctorus::detail::format_double(v); }

/// Joins relative output paths onto the configured output directory.
inline std::filesystem::path resolve_output(const std::string& path, const Config& cfg) {
    std::filesystem::path p(path);
    if (p.is_absolute() || cfg.output_dir == "." || cfg.output_dir.empty()) return p;
    return std::filesystem::path(cfg.output_dir) / p;
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + path.string());
    out << content;
}

inline std::string iso_timestamp() {
    char buf[32];
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

}  // namespace detail

/// Entry point behind the nctorus binary; streams injectable for tests.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    // The config file must be known before option defaults are bound.
    Config cfg;
    std::string config_path;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") config_path = argv[i + 1];
    try {
        if (!config_path.empty())
            cfg = load_config_file(config_path);
        else if (std::ifstream probe("nctorus.toml"); probe.good())
            cfg = parse_config(probe);
        if (const char* env_seed = std::getenv("NCTORUS_SEED"))
            cfg.seed = cli::detail::parse_integer<std::uint64_t>(env_seed, "NCTORUS_SEED");
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    CLI::App app{"noncommutative torus toolkit"};
    app.require_subcommand(1);
    std::string config_opt;
    app.add_option("--config", config_opt, "config file (key = value; default ./nctorus.toml)");
    app.add_option("--seed", cfg.seed, "seed recorded in report metadata (env NCTORUS_SEED)");

    // ---- torus ----------------------------------------------------------
    auto* torus_cmd = app.add_subcommand("torus", "parameter types and 2-d classification");
    torus_cmd->require_subcommand(1);

    auto* torus_check = torus_cmd->add_subcommand("check", "validate a skew-symmetric matrix");
    std::string check_skew, check_rows;
    torus_check->add_option("--skew", check_skew, "JSON {\"n\": ..., \"upper\": [...]}");
    torus_check->add_option("--rows", check_rows, "JSON full matrix [[...], ...]");

    auto* torus_k0 = torus_cmd->add_subcommand("k0", "K0 rank 2^(n-1) of the n-torus");
    std::int64_t k0_n = 0;
    torus_k0->add_option("--n", k0_n, "number of generators")->required();

    auto* torus_isom = torus_cmd->add_subcommand("isom", "theta' = +-theta mod 1 criterion");
    std::string isom_theta, isom_theta_prime;
    double isom_tol = 1e-12;
    torus_isom->add_option("--theta", isom_theta, "angle in turns (p/q exact, float approximate)")
        ->required();
    torus_isom->add_option("--theta-prime", isom_theta_prime, "second angle")->required();
    torus_isom->add_option("--tol", isom_tol, "tolerance for the float path (default 1e-12)");

    auto* torus_fiber = torus_cmd->add_subcommand("fiber", "isomorphism-class size on a grid");
    std::string fiber_theta;
    std::int64_t fiber_grid = 0;
    torus_fiber->add_option("--theta", fiber_theta, "rational angle p/q")->required();
    torus_fiber->add_option("--grid-q", fiber_grid, "grid denominator")->required();

    // ---- rep ------------------------------------------------------------
    auto* rep_cmd = app.add_subcommand("rep", "clock-and-shift representations and norms");
    rep_cmd->require_subcommand(1);

    auto* rep_build = rep_cmd->add_subcommand("build", "build the twisted representation");
    std::string build_theta, build_z1, build_z2;
    double build_z1_turns = 0.0, build_z2_turns = 0.0;
    rep_build->add_option("--theta", build_theta, "rational angle p/q")->required();
    rep_build->add_option("--z1", build_z1, "boundary phase as [re,im]");
    rep_build->add_option("--z2", build_z2, "boundary phase as [re,im]");
    auto* z1t = rep_build->add_option("--z1-turns", build_z1_turns, "boundary phase as turns");
    auto* z2t = rep_build->add_option("--z2-turns", build_z2_turns, "boundary phase as turns");

    auto* rep_norm = rep_cmd->add_subcommand("norm", "norm estimate of an element");
    std::string norm_element, norm_theta;
    std::int64_t norm_grid = 0;
    double norm_tol = cfg.tol;
    rep_norm->add_option("--element", norm_element, "e.g. \"U1 + U1' + U2 + U2'\"")->required();
    rep_norm->add_option("--theta", norm_theta, "rational angle p/q")->required();
    auto* grid_opt = rep_norm->add_option("--grid", norm_grid, "fixed phase grid (no refinement)");
    rep_norm->add_option("--tol", norm_tol, "refinement tolerance (default from config)");

    // ---- sklyanin ---------------------------------------------------------
    auto* skl_cmd = app.add_subcommand("sklyanin", "Sklyanin parameters, relations, curve");
    skl_cmd->require_subcommand(1);

    auto* skl_gamma = skl_cmd->add_subcommand("gamma", "solve the constraint for gamma");
    std::string gamma_alpha, gamma_beta;
    skl_gamma->add_option("--alpha", gamma_alpha, "complex as [re,im]")->required();
    skl_gamma->add_option("--beta", gamma_beta, "complex as [re,im]")->required();

    auto* skl_rel = skl_cmd->add_subcommand("relations", "print the relation set");
    std::string rel_params = R"({"alpha":[0,0],"beta":[0,0],"gamma":[0,0]})";
    std::string rel_preset = "sklyanin";
    std::string rel_theta = "0/1";
    skl_rel->add_option("--params", rel_params, "JSON {\"alpha\":[re,im],...,\"gamma\":...|\"auto\"}");
    skl_rel->add_option("--preset", rel_preset, "sklyanin | u-infinity | torus")
        ->check(CLI::IsMember({"sklyanin", "u-infinity", "torus"}));
    skl_rel->add_option("--theta", rel_theta, "angle for the torus preset");

    auto* skl_curve = skl_cmd->add_subcommand("curve", "Jacobi-form membership of a point");
    std::string curve_params, curve_point;
    double curve_tol = 1e-9;
    skl_curve->add_option("--params", curve_params, "parameter JSON")->required();
    skl_curve->add_option("--point", curve_point, "homogeneous 4-vector of [re,im] pairs")
        ->required();
    skl_curve->add_option("--tol", curve_tol, "scale-relative residual tolerance");

    // ---- field ------------------------------------------------------------
    auto* field_cmd = app.add_subcommand("field", "companion matrices and field of constants");
    field_cmd->require_subcommand(1);

    auto* field_companion = field_cmd->add_subcommand("companion", "Frobenius companion matrix");
    std::string companion_poly;
    field_companion
        ->add_option("--poly", companion_poly, "monic poly as low-to-high \"c0,c1,...\"")
        ->required();

    auto* field_charpoly = field_cmd->add_subcommand("charpoly", "char poly of the companion");
    std::string charpoly_poly;
    field_charpoly
        ->add_option("--poly", charpoly_poly, "monic poly as low-to-high \"c0,c1,...\"")
        ->required();

    auto* field_member = field_cmd->add_subcommand("member", "field-of-constants membership");
    std::string member_minpoly;
    std::int64_t member_n = 0;
    field_member->add_option("--minpoly", member_minpoly, "minimal polynomial \"c0,c1,...\"")
        ->required();
    field_member->add_option("--n", member_n, "matrix size n")->required();

    // ---- lab --------------------------------------------------------------
    auto* lab_cmd = app.add_subcommand("lab", "norm scans and the finiteness experiment");
    lab_cmd->require_subcommand(1);

    auto* lab_scan = lab_cmd->add_subcommand("scan", "norm scan over reduced p/q, q <= q_max");
    std::string scan_element, scan_csv, scan_json;
    std::int64_t scan_qmax = cfg.q_max;
    double scan_tol = cfg.tol;
    bool scan_stamp = false;
    lab_scan->add_option("--element", scan_element, "e.g. \"U1 + U1' + U2 + U2'\"")->required();
    lab_scan->add_option("--q-max", scan_qmax, "denominator bound (default from config)");
    lab_scan->add_option("--tol", scan_tol, "refinement tolerance (default from config)");
    lab_scan->add_option("--csv", scan_csv, "write CSV here (relative to output_dir)");
    lab_scan->add_option("--json", scan_json, "write the JSON report here");
    lab_scan->add_flag("--timestamp", scan_stamp,
                       "stamp the JSON metadata (breaks byte-stability)");

    auto* lab_fin = lab_cmd->add_subcommand("finiteness", "isomorphism-class sizes on a grid");
    std::int64_t fin_grid = 0;
    bool fin_json = false;
    lab_fin->add_option("--grid-q", fin_grid, "grid denominator")->required();
    lab_fin->add_flag("--json", fin_json, "emit the full class table as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        err << "usage: nctorus <torus|rep|sklyanin|field|lab> <command> [options]\n";
        return 64;
    }

    try {
        cfg.validate();

        if (torus_check->parsed()) {
            if (check_skew.empty() == check_rows.empty())
                throw ParseError("torus check: pass exactly one of --skew or --rows");
            bool ok;
            if (!check_skew.empty())
                ok = torus::validate_skew(skew_from_json(detail::parse_json(check_skew, "--skew")));
            else
                ok = torus::validate_skew(rows_from_json(detail::parse_json(check_rows, "--rows")));
            out << (ok ? "true" : "false") << "\n";
        } else if (torus_k0->parsed()) {
            out << torus::k0_rank(k0_n) << "\n";
        } else if (torus_isom->parsed()) {
            bool result;
            if (detail::looks_rational(isom_theta) && detail::looks_rational(isom_theta_prime))
                result = torus::isom_2d(torus::RationalAngle::parse(isom_theta),
                                        torus::RationalAngle::parse(isom_theta_prime));
            else
                result = torus::isom_2d(detail::parse_turns(isom_theta),
                                        detail::parse_turns(isom_theta_prime), isom_tol);
            out << (result ? "true" : "false") << "\n";
        } else if (torus_fiber->parsed()) {
            out << torus::fiber_count(torus::RationalAngle::parse(fiber_theta), fiber_grid) << "\n";
        } else if (rep_build->parsed()) {
            Complex z1{1.0, 0.0}, z2{1.0, 0.0};
            if (!build_z1.empty()) z1 = complex_from_json(detail::parse_json(build_z1, "--z1"));
            if (!build_z2.empty()) z2 = complex_from_json(detail::parse_json(build_z2, "--z2"));
            if (z1t->count() > 0) z1 = torus::rho_of_theta(build_z1_turns);
            if (z2t->count() > 0) z2 = torus::rho_of_theta(build_z2_turns);
            const auto rep = repr::build_rep(torus::RationalAngle::parse(build_theta), z1, z2);
            out << rep_to_json(rep).dump() << "\n";
        } else if (rep_norm->parsed()) {
            const NcPolynomial x = NcPolynomial::parse(norm_element);
            const auto theta = torus::RationalAngle::parse(norm_theta);
            if (grid_opt->count() > 0) {
                out << detail::format_double(repr::norm_estimate(x, theta, norm_grid)) << "\n";
            } else {
                const auto r = repr::converge_norm(x, theta, norm_tol, cfg.phase_grid_cap);
                out << Json{{"value", r.value}, {"grid", r.grid}, {"converged", r.converged}}.dump()
                    << "\n";
            }
        } else if (skl_gamma->parsed()) {
            const auto result = sklyanin::solve_gamma(
                complex_from_json(detail::parse_json(gamma_alpha, "--alpha")),
                complex_from_json(detail::parse_json(gamma_beta, "--beta")));
            if (result.underdetermined)
                out << "underdetermined\n";
            else
                out << complex_to_json(result.gamma).dump() << "\n";
        } else if (skl_rel->parsed()) {
            sklyanin::RelationSet rs;
            std::string prefix = "x";
            if (rel_preset == "u-infinity") {
                rs = sklyanin::u_infinity_relations();
            } else if (rel_preset == "torus") {
                rs = sklyanin::torus_relations(detail::parse_turns(rel_theta));
                prefix = "U";
            } else {
                rs = sklyanin::sklyanin_relations(
                    sklyanin_params_from_json(detail::parse_json(rel_params, "--params")));
            }
            for (const auto& rel : rs.relations) out << rel.str(prefix) << "\n";
        } else if (skl_curve->parsed()) {
            const auto params =
                sklyanin_params_from_json(detail::parse_json(curve_params, "--params"));
            const auto point = point3_from_json(detail::parse_json(curve_point, "--point"));
            out << (sklyanin::on_curve(params, point, curve_tol) ? "true" : "false") << "\n";
        } else if (field_companion->parsed()) {
            const auto m = fields::companion(fields::RationalPoly::parse_coeff_list(companion_poly));
            Json rows = Json::array();
            for (const auto& row : m.entries) {
                Json jrow = Json::array();
                for (const auto& e : row) jrow.push_back(nctorus::to_string(e));
                rows.push_back(std::move(jrow));
            }
            out << rows.dump() << "\n";
        } else if (field_charpoly->parsed()) {
            const auto p = fields::RationalPoly::parse_coeff_list(charpoly_poly);
            out << fields::char_poly(fields::companion(p)).str() << "\n";
        } else if (field_member->parsed()) {
            const auto minpoly = fields::RationalPoly::parse_coeff_list(member_minpoly);
            const auto c = fields::AlgebraicNumber::root_by_index(minpoly, 0);
            out << (fields::constants_member(c, member_n) ? "true" : "false") << "\n";
        } else if (lab_scan->parsed()) {
            lab::ScanOptions options;
            options.phase_grid_cap = cfg.phase_grid_cap;
            options.seed = cfg.seed;
            if (scan_stamp) options.timestamp = detail::iso_timestamp();
            const auto report =
                lab::norm_scan(NcPolynomial::parse(scan_element), scan_qmax, scan_tol, options);
            if (!scan_csv.empty())
                detail::write_file(detail::resolve_output(scan_csv, cfg), lab::to_csv(report));
            if (!scan_json.empty())
                detail::write_file(detail::resolve_output(scan_json, cfg),
                                   report_to_json(report).dump(2) + "\n");
            if (scan_csv.empty() && scan_json.empty()) out << lab::to_csv(report);
        } else if (lab_fin->parsed()) {
            const auto hist = lab::finiteness_experiment(fin_grid);
            if (fin_json) {
                Json classes = Json::array();
                for (const auto& c : hist.classes)
                    classes.push_back(Json{{"rep_num", c.representative.num()},
                                           {"rep_den", c.representative.den()},
                                           {"size", c.size}});
                out << Json{{"grid_q", hist.grid_q}, {"classes", classes}}.dump() << "\n";
            } else {
                std::string line;
                for (const auto& c : hist.classes) {
                    if (!line.empty()) line += ',';
                    line += std::to_string(c.size);
                }
                out << line << "\n";
            }
        }
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace nctorus::cli
