#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "nctorus/errors.hpp"
#include "nctorus/matrix.hpp"
#include "nctorus/ncpoly.hpp"
#include "nctorus/torus.hpp"
#include "nctorus/word_eval.hpp"

// Sklyanin algebra parameters (alpha, beta, gamma) subject to
// alpha + beta + gamma + alpha*beta*gamma = 0, the six quadratic
// relations, and the Jacobi-form curve they encode. Relations are kept
// verbatim as LHS - RHS in the original generator order; no normal form
// is applied.

namespace nctorus::sklyanin {

struct SklyaninParams {
    Complex alpha{0.0, 0.0};
    Complex beta{0.0, 0.0};
    Complex gamma{0.0, 0.0};

    Complex constraint() const { return alpha + beta + gamma + alpha * beta * gamma; }
    double constraint_residual() const { return std::abs(constraint()); }
    bool is_valid() const { return constraint_residual() < 1e-12; }
};

/// Named family of relations, each stored as the polynomial that must
/// evaluate to zero.
struct RelationSet {
    std::string name;
    int n_gens = 0;
    std::vector<NcPolynomial> relations;
};

/// Homogeneous coordinates (u : v : w : z) in CP^3.
struct ProjectivePoint3 {
    Complex u, v, w, z;

    bool is_valid() const {
        return u != Complex(0.0, 0.0) || v != Complex(0.0, 0.0) ||
               w != Complex(0.0, 0.0) || z != Complex(0.0, 0.0);
    }
};

struct GammaResult {
    Complex gamma{0.0, 0.0};
    /// 1 + alpha*beta = 0 with alpha + beta = 0: every gamma satisfies
    /// the constraint, so no single value is reported.
    bool underdetermined = false;
};

/// Solves alpha + beta + gamma + alpha*beta*gamma = 0 for gamma.
inline GammaResult solve_gamma(Complex alpha, Complex beta) {
    const Complex denom = Complex(1.0, 0.0) + alpha * beta;
    if (denom == Complex(0.0, 0.0)) {
        if (alpha + beta == Complex(0.0, 0.0)) return {Complex(0.0, 0.0), true};
        throw SingularParameterError("solve_gamma: 1 + alpha*beta = 0, no finite gamma exists");
    }
    return {-(alpha + beta) / denom, false};
}

namespace detail {

inline NcPolynomial x(int i) { return NcPolynomial::generator(i); }

}  // namespace detail

/// The six quadratic relations of S(alpha, beta, gamma), as LHS - RHS.
inline RelationSet sklyanin_relations(const SklyaninParams& p) {
    if (!p.is_valid())
        throw InvalidParametersError("sklyanin_relations: constraint residual " +
                                     std::to_string(p.constraint_residual()));
    using detail::x;
    const NcPolynomial x1 = x(1), x2 = x(2), x3 = x(3), x4 = x(4);
    RelationSet rs;
    rs.name = "sklyanin";
    rs.n_gens = 4;
    rs.relations = {
        x1 * x2 - x2 * x1 - p.alpha * (x3 * x4 + x4 * x3),
        x1 * x2 + x2 * x1 - (x3 * x4 - x4 * x3),
        x1 * x3 - x3 * x1 - p.beta * (x4 * x2 + x2 * x4),
        x1 * x3 + x3 * x1 - (x4 * x2 - x2 * x4),
        x1 * x4 - x4 * x1 - p.gamma * (x2 * x3 + x3 * x2),
        x1 * x4 + x4 * x1 - (x2 * x3 - x3 * x2),
    };
    return rs;
}

/// x1 x2 - x2 x1 - x1^2 = 0, the coordinate ring of the projective line.
inline RelationSet u_infinity_relations() {
    using detail::x;
    return {"u_infinity", 2, {x(1) * x(2) - x(2) * x(1) - x(1) * x(1)}};
}

/// x2 x1 - exp(2 pi i theta) x1 x2 = 0 in polynomial form.
inline RelationSet torus_relations(double theta) {
    using detail::x;
    return {"torus", 2, {x(2) * x(1) - torus::rho_of_theta(theta) * (x(1) * x(2))}};
}

struct CheckResult {
    bool ok = false;
    double max_residual = 0.0;
};

/// Substitutes the matrices for the generators and measures every
/// relation's operator norm; ok iff all stay below tol.
inline CheckResult check_relations(const RelationSet& rs, const std::vector<CMatrix>& mats,
                                   double tol) {
    if (mats.size() != static_cast<std::size_t>(rs.n_gens))
        throw ShapeError("check_relations: expected " + std::to_string(rs.n_gens) +
                         " matrices, got " + std::to_string(mats.size()));
    CheckResult result;
    result.ok = true;
    for (const auto& rel : rs.relations) {
        const double residual = operator_norm(evaluate_poly(rel, mats, /*inverse_as_adjoint=*/false));
        result.max_residual = std::max(result.max_residual, residual);
        if (residual >= tol) result.ok = false;
    }
    return result;
}

/// Coefficients of the parameter-dependent Jacobi form:
/// c1 = (1-alpha)/(1+beta), c2 = (1+alpha)/(1-gamma).
inline std::pair<Complex, Complex> jacobi_coeffs(const SklyaninParams& p) {
    const Complex d1 = Complex(1.0, 0.0) + p.beta;
    const Complex d2 = Complex(1.0, 0.0) - p.gamma;
    if (d1 == Complex(0.0, 0.0))
        throw PoleError("jacobi_coeffs: beta = -1 makes c1 singular", "c1");
    if (d2 == Complex(0.0, 0.0))
        throw PoleError("jacobi_coeffs: gamma = 1 makes c2 singular", "c2");
    return {(Complex(1.0, 0.0) - p.alpha) / d1, (Complex(1.0, 0.0) + p.alpha) / d2};
}

/// Membership in the quartic intersection: both displayed forms must
/// vanish relative to the squared scale of the coordinates, which makes
/// the verdict invariant under projective rescaling.
inline bool on_curve(const SklyaninParams& p, const ProjectivePoint3& pt, double tol) {
    if (!pt.is_valid()) throw DomainError("on_curve: all four coordinates are zero");
    const auto [c1, c2] = jacobi_coeffs(p);
    const Complex u2 = pt.u * pt.u, v2 = pt.v * pt.v, w2 = pt.w * pt.w, z2 = pt.z * pt.z;
    const double scale = std::max({std::norm(pt.u), std::norm(pt.v), std::norm(pt.w),
                                   std::norm(pt.z)});
    const double r1 = std::abs(u2 + v2 + w2 + z2);
    const double r2 = std::abs(c1 * v2 + c2 * w2 + z2);
    return r1 < tol * scale && r2 < tol * scale;
}

}  // namespace nctorus::sklyanin
