#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "nctorus/errors.hpp"
#include "nctorus/lab.hpp"
#include "nctorus/matrix.hpp"
#include "nctorus/repr.hpp"
#include "nctorus/sklyanin.hpp"
#include "nctorus/torus.hpp"

// JSON adapters for the CLI wire formats. Complex numbers travel as
// [re, im] pairs; a skew matrix as {"n": ..., "upper": [...]} with the
// strictly-upper entries in row-major order.

namespace nctorus {

using Json = nlohmann::json;

inline Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError("expected a complex number as [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

inline Json matrix_to_json(const CMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json skew_to_json(const torus::SkewMatrix& m) {
    return Json{{"n", m.n()}, {"upper", m.upper()}};
}

inline torus::SkewMatrix skew_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("upper"))
        throw ParseError("skew matrix JSON must be {\"n\": ..., \"upper\": [...]}");
    const auto n = j.at("n").get<std::int64_t>();
    if (n < 1) throw ParseError("skew matrix JSON: n must be positive");
    std::vector<double> upper;
    for (const auto& v : j.at("upper")) {
        if (!v.is_number()) throw ParseError("skew matrix JSON: upper entries must be numbers");
        upper.push_back(v.get<double>());
    }
    return torus::SkewMatrix::from_upper(static_cast<std::size_t>(n), upper);
}

inline std::vector<std::vector<double>> rows_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected a JSON array of matrix rows");
    std::vector<std::vector<double>> rows;
    for (const auto& r : j) {
        if (!r.is_array()) throw ParseError("expected a JSON array of matrix rows");
        std::vector<double> row;
        for (const auto& v : r) {
            if (!v.is_number()) throw ParseError("matrix entries must be numbers");
            row.push_back(v.get<double>());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

/// {"alpha": [re,im], "beta": [re,im], "gamma": [re,im] | "auto"}.
/// "auto" solves the constraint for gamma; an underdetermined solve is an
/// error here because the relations themselves still depend on gamma.
inline sklyanin::SklyaninParams sklyanin_params_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("alpha") || !j.contains("beta") || !j.contains("gamma"))
        throw ParseError("sklyanin params JSON must carry alpha, beta, gamma");
    sklyanin::SklyaninParams p;
    p.alpha = complex_from_json(j.at("alpha"));
    p.beta = complex_from_json(j.at("beta"));
    const Json& g = j.at("gamma");
    if (g.is_string() && g.get<std::string>() == "auto") {
        const auto solved = sklyanin::solve_gamma(p.alpha, p.beta);
        if (solved.underdetermined)
            throw DomainError("gamma is underdetermined for these parameters; pass it explicitly");
        p.gamma = solved.gamma;
    } else {
        p.gamma = complex_from_json(g);
    }
    return p;
}

inline sklyanin::ProjectivePoint3 point3_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 4)
        throw ParseError("curve point JSON must be a 4-vector of complex pairs");
    return {complex_from_json(j[0]), complex_from_json(j[1]), complex_from_json(j[2]),
            complex_from_json(j[3])};
}

inline Json rep_to_json(const repr::TwistedRep& rep) {
    return Json{{"q", rep.q},
                {"p", rep.p},
                {"z1", complex_to_json(rep.z1)},
                {"z2", complex_to_json(rep.z2)},
                {"U1", matrix_to_json(rep.U1)},
                {"U2", matrix_to_json(rep.U2)}};
}

inline Json report_to_json(const lab::ScanReport& report) {
    Json metadata{{"tol", report.tol},
                  {"phase_grid_cap", report.phase_grid_cap},
                  {"q_max", report.q_max},
                  {"seed", report.seed}};
    if (!report.timestamp.empty()) metadata["timestamp"] = report.timestamp;
    Json samples = Json::array();
    for (const auto& s : report.samples)
        samples.push_back(Json{{"theta_num", s.theta.num()},
                               {"theta_den", s.theta.den()},
                               {"norm", s.norm},
                               {"phase_grid", s.phase_grid},
                               {"converged", s.converged}});
    return Json{{"element", report.element}, {"metadata", metadata}, {"samples", samples}};
}

}  // namespace nctorus
