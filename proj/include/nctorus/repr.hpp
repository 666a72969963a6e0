#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "nctorus/errors.hpp"
#include "nctorus/matrix.hpp"
#include "nctorus/ncpoly.hpp"
#include "nctorus/torus.hpp"
#include "nctorus/word_eval.hpp"

// Finite-dimensional representations of the 2-generator noncommutative
// torus at rational angle theta = p/q. The generators are realized by a
// clock and a shift of size q, scaled by boundary phases (z1, z2):
//
//   U1 = z1 * diag(1, w, w^2, ..., w^(q-1)),   w = exp(2 pi i p/q)
//   U2 = z2 * S,                               S e_j = e_(j-1 mod q)
//
// which satisfy U2 U1 = w U1 U2. Sweeping (z1, z2) over the phase torus
// exhausts the irreducible representations at p/q, so the supremum of
// ||x|| over the phases is the universal norm; sampling phases on a
// finite grid gives a lower bound that refines monotonically as the
// grid doubles.

namespace nctorus::repr {

using torus::RationalAngle;

namespace detail {

/// exp(2 pi i k/q) with exact values on the quarter turns.
inline Complex root_of_unity(std::int64_t k, std::int64_t q) {
    k %= q;
    if (k < 0) k += q;
    if (4 * k % q == 0) {
        switch (4 * k / q) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            case 3: return {0.0, -1.0};
        }
    }
    return std::polar(1.0, 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(q));
}

}  // namespace detail

/// Twisted clock-and-shift pair realizing theta = p/q.
struct TwistedRep {
    std::int64_t q = 1;
    std::int64_t p = 0;
    Complex z1{1.0, 0.0};
    Complex z2{1.0, 0.0};
    CMatrix U1;
    CMatrix U2;

    /// ||U2 U1 - exp(2 pi i p/q) U1 U2||, computed from the stored matrices.
    double relation_residual() const {
        const CMatrix lhs = U2 * U1;
        const CMatrix rhs = detail::root_of_unity(p, q) * (U1 * U2);
        return operator_norm(lhs - rhs);
    }
};

inline TwistedRep build_rep(const RationalAngle& theta, Complex z1 = {1.0, 0.0},
                            Complex z2 = {1.0, 0.0}) {
    if (std::abs(std::abs(z1) - 1.0) > 1e-12 || std::abs(std::abs(z2) - 1.0) > 1e-12)
        throw DomainError("build_rep: boundary phases must have modulus 1");

    TwistedRep rep;
    rep.q = theta.den();
    rep.p = theta.num();
    rep.z1 = z1;
    rep.z2 = z2;

    const std::size_t q = static_cast<std::size_t>(rep.q);
    rep.U1 = CMatrix(q, q);
    rep.U2 = CMatrix(q, q);
    for (std::size_t j = 0; j < q; ++j) {
        rep.U1(j, j) = z1 * detail::root_of_unity(rep.p * static_cast<std::int64_t>(j), rep.q);
        rep.U2((j + q - 1) % q, j) = z2;
    }
    return rep;
}

/// Substitutes the representation matrices for U1, U2. Inverse letters
/// act by conjugate transpose, valid because the generators are unitary.
inline CMatrix evaluate(const NcPolynomial& x, const TwistedRep& rep) {
    if (x.max_generator() > 2)
        throw UnsupportedError("evaluate: only 2-generator representations are built (got U" +
                               std::to_string(x.max_generator()) + ")");
    return evaluate_poly(x, {rep.U1, rep.U2}, /*inverse_as_adjoint=*/true);
}

/// Largest singular value of evaluate(x, .) maximized over the
/// phase_grid x phase_grid grid of roots of unity. A lower bound on the
/// universal norm, non-decreasing as the grid doubles.
inline double norm_estimate(const NcPolynomial& x, const RationalAngle& theta,
                            std::int64_t phase_grid) {
    if (phase_grid < 1) throw DomainError("norm_estimate: phase_grid must be positive");
    if (x.is_zero()) return 0.0;
    if (x.max_generator() > 2)
        throw UnsupportedError("norm_estimate: only 2-generator elements are supported");

    // Clock and shift at z1 = z2 = 1; each phase point only rescales them.
    const TwistedRep base = build_rep(theta);

    double best = 0.0;
    for (std::int64_t a = 0; a < phase_grid; ++a) {
        const Complex z1 = detail::root_of_unity(a, phase_grid);
        CMatrix u1 = base.U1;
        u1 *= z1;
        for (std::int64_t b = 0; b < phase_grid; ++b) {
            const Complex z2 = detail::root_of_unity(b, phase_grid);
            CMatrix u2 = base.U2;
            u2 *= z2;
            const CMatrix value = evaluate_poly(x, {u1, u2}, true);
            best = std::max(best, operator_norm(value));
        }
    }
    return best;
}

struct ConvergedNorm {
    double value = 0.0;
    std::int64_t grid = 0;
    bool converged = false;
};

/// Doubles the phase grid from 8 until two successive estimates agree
/// within tol. `grid` reports the coarsest grid whose doubling no longer
/// moved the estimate; a result at the cap is flagged unconverged.
inline ConvergedNorm converge_norm(const NcPolynomial& x, const RationalAngle& theta,
                                   double tol, std::int64_t grid_cap = 4096) {
    if (tol <= 0.0) throw DomainError("converge_norm: tol must be positive");
    if (grid_cap < 16) throw DomainError("converge_norm: grid cap below the starting grid");

    std::int64_t grid = 8;
    double prev = norm_estimate(x, theta, grid);
    for (;;) {
        const std::int64_t next_grid = 2 * grid;
        const double cur = norm_estimate(x, theta, next_grid);
        if (std::abs(cur - prev) < tol) return {cur, grid, true};
        if (next_grid >= grid_cap) return {cur, next_grid, false};
        prev = cur;
        grid = next_grid;
    }
}

/// Dimension m*q of M_m amplified over the representation, after checking
/// that amplification commutes with evaluation on a probe set.
inline std::int64_t matrix_algebra_dim(const TwistedRep& rep, std::int64_t m) {
    if (m < 1) throw DomainError("matrix_algebra_dim: m must be positive");

    const std::vector<CMatrix> amplified = {amplify(rep.U1, static_cast<std::size_t>(m)),
                                            amplify(rep.U2, static_cast<std::size_t>(m))};
    const std::vector<NcPolynomial> probes = {
        NcPolynomial::generator(1),
        NcPolynomial::generator(2),
        NcPolynomial::generator(1) * NcPolynomial::generator(2),
        harper_element(),
    };
    for (const auto& probe : probes) {
        const CMatrix direct = amplify(evaluate(probe, rep), static_cast<std::size_t>(m));
        const CMatrix lifted = evaluate_poly(probe, amplified, true);
        if (max_abs_diff(direct, lifted) >= 1e-12)
            throw Error("matrix_algebra_dim: amplification consistency check failed");
    }
    return m * rep.q;
}

}  // namespace nctorus::repr
