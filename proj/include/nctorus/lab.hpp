#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "nctorus/errors.hpp"
#include "nctorus/ncpoly.hpp"
#include "nctorus/repr.hpp"
#include "nctorus/torus.hpp"

// Desk-scale experiments over the torus parameter space: sampling the
// norm function theta -> ||x|| on all reduced rationals up to a
// denominator bound, exhibiting its non-constancy, and counting the
// isomorphism classes on rational grids. The scans demonstrate the
// finiteness phenomena on a grid; they do not prove anything about the
// continuum.

namespace nctorus::lab {

using torus::RationalAngle;

struct ScanSample {
    RationalAngle theta;
    double norm = 0.0;
    std::int64_t phase_grid = 0;
    bool converged = false;
};

struct ScanReport {
    std::string element;  // printed form of the scanned polynomial
    std::vector<ScanSample> samples;  // sorted by theta ascending
    double tol = 0.0;
    std::int64_t phase_grid_cap = 4096;
    std::int64_t q_max = 0;
    std::uint64_t seed = 0;
    std::string timestamp;  // empty unless the caller stamps the report
};

/// Continued-fraction convergents p/q of theta with q <= q_max, strictly
/// increasing in q. Each satisfies |theta - p/q| < 1/q^2 (as circle
/// distance; values are reduced to [0,1) like every angle here).
inline std::vector<RationalAngle> convergents(double theta, std::int64_t q_max) {
    if (q_max < 1) throw DomainError("convergents: q_max must be positive");
    if (!(theta >= 0.0 && theta < 1.0)) throw DomainError("convergents: theta must lie in [0,1)");

    std::vector<RationalAngle> out;
    auto push = [&out](std::int64_t p, std::int64_t q) {
        const RationalAngle angle(p, q);
        if (!out.empty() && out.back().den() == q)
            out.back() = angle;  // same q: keep the later, better convergent
        else
            out.push_back(angle);
    };

    std::int64_t p_prev = 1, q_prev = 0;  // conventional (-1)-th convergent
    std::int64_t p_cur = 0, q_cur = 1;    // a0 = 0 since theta in [0,1)
    push(p_cur, q_cur);

    double x = theta;
    for (int k = 0; k < 64; ++k) {
        const double frac = x - std::floor(x);
        if (frac < 1e-15) break;  // expansion terminated
        x = 1.0 / frac;
        const double af = std::floor(x);
        if (af > 4e15) break;  // beyond double resolution
        const std::int64_t a = static_cast<std::int64_t>(af);
        if (q_cur > 0 && a > (std::numeric_limits<std::int64_t>::max() - q_prev) / q_cur) break;
        const std::int64_t p_next = a * p_cur + p_prev;
        const std::int64_t q_next = a * q_cur + q_prev;
        if (q_next > q_max) break;
        push(p_next, q_next);
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_next;
        q_cur = q_next;
    }
    return out;
}

struct ScanOptions {
    std::int64_t phase_grid_cap = 4096;
    std::uint64_t seed = 0;
    std::string timestamp;
};

/// All reduced fractions p/q with q <= q_max, ascending.
inline std::vector<RationalAngle> farey_angles(std::int64_t q_max) {
    if (q_max < 1) throw DomainError("farey_angles: q_max must be positive");
    std::vector<RationalAngle> angles;
    for (std::int64_t q = 1; q <= q_max; ++q)
        for (std::int64_t p = 0; p < q; ++p)
            if (std::gcd(p, q) == 1) angles.emplace_back(p, q);
    std::sort(angles.begin(), angles.end());
    return angles;
}

/// Runs converge_norm on every reduced p/q with q <= q_max. Per-sample
/// convergence warnings land in the report instead of aborting the scan.
inline ScanReport norm_scan(const NcPolynomial& x, std::int64_t q_max, double tol,
                            const ScanOptions& options = {}) {
    ScanReport report;
    report.element = x.str();
    report.tol = tol;
    report.phase_grid_cap = options.phase_grid_cap;
    report.q_max = q_max;
    report.seed = options.seed;
    report.timestamp = options.timestamp;
    for (const RationalAngle& theta : farey_angles(q_max)) {
        const repr::ConvergedNorm result = repr::converge_norm(x, theta, tol, options.phase_grid_cap);
        report.samples.push_back({theta, result.value, result.grid, result.converged});
    }
    return report;
}

struct NonconstancyWitness {
    ScanSample max_sample;
    ScanSample min_sample;
    double spread = 0.0;
};

/// Extreme converged samples and their spread. A strictly positive
/// spread certifies that the sampled norm function is non-constant.
inline NonconstancyWitness nonconstancy_witness(const ScanReport& report) {
    std::vector<const ScanSample*> converged;
    for (const auto& s : report.samples)
        if (s.converged) converged.push_back(&s);
    if (converged.size() < 2)
        throw InsufficientDataError("nonconstancy_witness: fewer than 2 converged samples");
    const ScanSample* lo = converged.front();
    const ScanSample* hi = converged.front();
    for (const ScanSample* s : converged) {
        if (s->norm < lo->norm) lo = s;
        if (s->norm > hi->norm) hi = s;
    }
    return {*hi, *lo, hi->norm - lo->norm};
}

struct FiberClass {
    RationalAngle representative;
    std::int64_t size = 0;
};

struct FiberHistogram {
    std::int64_t grid_q = 0;
    std::vector<FiberClass> classes;  // in ascending representative order

    std::vector<std::int64_t> sizes() const {
        std::vector<std::int64_t> out;
        out.reserve(classes.size());
        for (const auto& c : classes) out.push_back(c.size);
        return out;
    }

    std::map<std::int64_t, std::int64_t> counts() const {
        std::map<std::int64_t, std::int64_t> out;
        for (const auto& c : classes) ++out[c.size];
        return out;
    }
};

/// Partitions the grid {p/grid_q} into isomorphism classes and returns
/// the class sizes. For 2-dimensional tori every class has size 1 or 2,
/// size 1 exactly at the negation-fixed points.
inline FiberHistogram finiteness_experiment(std::int64_t grid_q) {
    if (grid_q < 2) throw DomainError("finiteness_experiment: grid_q must be at least 2");
    FiberHistogram hist;
    hist.grid_q = grid_q;
    std::vector<bool> assigned(static_cast<std::size_t>(grid_q), false);
    for (std::int64_t k = 0; k < grid_q; ++k) {
        if (assigned[static_cast<std::size_t>(k)]) continue;
        const RationalAngle rep(k, grid_q);
        FiberClass cls{rep, 0};
        for (std::int64_t j = k; j < grid_q; ++j) {
            if (assigned[static_cast<std::size_t>(j)]) continue;
            if (torus::isom_2d(rep, RationalAngle(j, grid_q))) {
                assigned[static_cast<std::size_t>(j)] = true;
                ++cls.size;
            }
        }
        hist.classes.push_back(cls);
    }
    return hist;
}

/// CSV rendering: byte-stable for fixed inputs (shortest round-trip
/// float formatting, no timestamps).
inline std::string to_csv(const ScanReport& report) {
    std::string out = "theta_num,theta_den,norm,phase_grid,converged\n";
    for (const auto& s : report.samples) {
        out += std::to_string(s.theta.num());
        out += ',';
        out += std::to_string(s.theta.den());
        out += ',';
        out += detail::format_double(s.norm);
        out += ',';
        out += std::to_string(s.phase_grid);
        out += ',';
        out += s.converged ? '1' : '0';
        out += '\n';
    }
    return out;
}

}  // namespace nctorus::lab
