#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "nctorus/errors.hpp"

// Torus parameter types and the 2-dimensional isomorphism classifier.
// Angles are measured in full turns: theta = 1 means 2*pi radians, so the
// commutation phase attached to an angle is exp(2*pi*i*theta). Keeping
// turns (not radians) lets the interesting parameter set stay rational.

namespace nctorus::torus {

/// Reduced fraction p/q representing the angle p/q turns, normalized to
/// 0 <= p < q. The torus-point image is exp(2*pi*i*p/q).
class RationalAngle {
  public:
    RationalAngle() : p_(0), q_(1) {}

    RationalAngle(std::int64_t p, std::int64_t q) {
        if (q == 0) throw DomainError("rational angle: zero denominator");
        if (q < 0) {
            p = -p;
            q = -q;
        }
        p %= q;
        if (p < 0) p += q;
        const std::int64_t g = std::gcd(p, q);
        p_ = p / g;
        q_ = q / g;
    }

    /// Parses "p/q" or a bare integer "p".
    static RationalAngle parse(const std::string& text) {
        const auto slash = text.find('/');
        try {
            if (slash == std::string::npos)
                return RationalAngle(std::stoll(text), 1);
            return RationalAngle(std::stoll(text.substr(0, slash)),
                                 std::stoll(text.substr(slash + 1)));
        } catch (const std::exception&) {
            throw ParseError("invalid rational angle: '" + text + "'");
        }
    }

    std::int64_t num() const { return p_; }
    std::int64_t den() const { return q_; }

    double value() const { return static_cast<double>(p_) / static_cast<double>(q_); }

    /// -theta mod 1, still a reduced representative in [0,1).
    RationalAngle negated() const { return RationalAngle(-p_, q_); }

    bool operator==(const RationalAngle& other) const {
        return p_ == other.p_ && q_ == other.q_;
    }
    bool operator!=(const RationalAngle& other) const { return !(*this == other); }
    bool operator<(const RationalAngle& other) const {
        return p_ * other.q_ < other.p_ * q_;
    }

    std::string str() const {
        return std::to_string(p_) + "/" + std::to_string(q_);
    }

  private:
    std::int64_t p_;
    std::int64_t q_;
};

/// Real skew-symmetric matrix housing the torus parameters theta_ij.
class SkewMatrix {
  public:
    /// Builds from the row-major strictly-upper entries; the lower
    /// triangle is the exact negation, the diagonal exactly zero.
    static SkewMatrix from_upper(std::size_t n, const std::vector<double>& upper) {
        if (upper.size() != n * (n - 1) / 2)
            throw ShapeError("skew matrix: expected n(n-1)/2 upper entries, got " +
                             std::to_string(upper.size()));
        SkewMatrix m;
        m.n_ = n;
        m.rows_.assign(n, std::vector<double>(n, 0.0));
        std::size_t k = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                m.rows_[i][j] = upper[k];
                m.rows_[j][i] = -upper[k];
                ++k;
            }
        }
        return m;
    }

    /// Wraps a full matrix without antisymmetrizing; validate separately.
    static SkewMatrix from_rows(std::vector<std::vector<double>> rows) {
        SkewMatrix m;
        m.n_ = rows.size();
        for (const auto& r : rows)
            if (r.size() != m.n_) throw ShapeError("skew matrix: input is not square");
        m.rows_ = std::move(rows);
        return m;
    }

    std::size_t n() const { return n_; }
    const std::vector<std::vector<double>>& rows() const { return rows_; }
    double operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }

    /// Row-major strictly-upper entries (the JSON "upper" field).
    std::vector<double> upper() const {
        std::vector<double> u;
        u.reserve(n_ * (n_ - 1) / 2);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j) u.push_back(rows_[i][j]);
        return u;
    }

  private:
    std::size_t n_ = 0;
    std::vector<std::vector<double>> rows_;
};

/// True iff the matrix is square with zero diagonal and theta_ij = -theta_ji
/// (residual below 1e-15). Non-square input is a shape error, not "false".
inline bool validate_skew(const std::vector<std::vector<double>>& rows) {
    const std::size_t n = rows.size();
    for (const auto& r : rows)
        if (r.size() != n) throw ShapeError("validate_skew: input is not square");
    constexpr double kResidual = 1e-15;
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(rows[i][i]) > kResidual) return false;
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(rows[i][j] + rows[j][i]) > kResidual) return false;
    }
    return true;
}

inline bool validate_skew(const SkewMatrix& m) { return validate_skew(m.rows()); }

/// exp(2*pi*i*theta) for theta in turns.
inline std::complex<double> rho_of_theta(double theta) {
    if (!std::isfinite(theta)) throw DomainError("rho_of_theta: non-finite angle");
    return std::polar(1.0, 2.0 * M_PI * theta);
}

/// Point of the parameter torus: one unit-modulus value per strictly-upper
/// entry of the skew matrix, rho_ij = exp(2*pi*i*theta_ij).
struct TorusPoint {
    std::vector<std::complex<double>> values;

    bool is_valid() const {
        for (const auto& v : values)
            if (std::abs(std::abs(v) - 1.0) > 1e-12) return false;
        return true;
    }
};

inline TorusPoint make_torus_point(const SkewMatrix& m) {
    TorusPoint pt;
    for (double theta : m.upper()) pt.values.push_back(rho_of_theta(theta));
    return pt;
}

/// Number of strictly-upper entries of an n x n matrix.
inline std::int64_t strict_upper_count(std::int64_t n) {
    if (n < 1) throw DomainError("strict_upper_count: n must be positive");
    return n * (n - 1) / 2;
}

/// Dimension of the parameter torus for 2g generators: g(2g-1).
/// Agrees with strict_upper_count(2g).
inline std::int64_t param_count(std::int64_t g) {
    if (g < 1) throw DomainError("param_count: g must be positive");
    return g * (2 * g - 1);
}

/// Rank of K_0 of the n-dimensional noncommutative torus: 2^(n-1).
inline std::int64_t k0_rank(std::int64_t n) {
    if (n < 1) throw DomainError("k0_rank: n must be positive");
    if (n > 63) throw OverflowError("k0_rank: 2^(n-1) exceeds 63-bit range for n > 63");
    return std::int64_t{1} << (n - 1);
}

namespace detail {

/// Reduces to [0,1).
inline double wrap_unit(double x) {
    double r = x - std::floor(x);
    if (r >= 1.0) r = 0.0;
    return r;
}

/// Distance on the circle R/Z.
inline double circle_distance(double a, double b) {
    const double d = std::abs(wrap_unit(a) - wrap_unit(b));
    return std::min(d, 1.0 - d);
}

}  // namespace detail

/// 2-dimensional isomorphism criterion: theta' = +-theta mod 1, compared
/// within tol after reduction to [0,1).
inline bool isom_2d(double theta, double theta_prime, double tol = 1e-12) {
    if (!std::isfinite(theta) || !std::isfinite(theta_prime))
        throw DomainError("isom_2d: non-finite angle");
    if (tol < 0.0) throw DomainError("isom_2d: negative tolerance");
    return detail::circle_distance(theta_prime, theta) <= tol ||
           detail::circle_distance(theta_prime, -theta) <= tol;
}

/// Exact path for rational angles; no tolerance involved.
inline bool isom_2d(const RationalAngle& theta, const RationalAngle& theta_prime) {
    return theta_prime == theta || theta_prime == theta.negated();
}

/// Size of the isomorphism class of theta inside the grid {k/grid_q}.
/// 2 generically; 1 exactly at the negation-fixed points 0 and 1/2.
inline std::int64_t fiber_count(const RationalAngle& theta, std::int64_t grid_q) {
    if (grid_q < 1) throw DomainError("fiber_count: grid_q must be positive");
    if (grid_q % theta.den() != 0)
        throw GridMismatchError("fiber_count: denominator " + std::to_string(theta.den()) +
                                " does not divide grid " + std::to_string(grid_q));
    std::int64_t count = 0;
    for (std::int64_t k = 0; k < grid_q; ++k)
        if (isom_2d(theta, RationalAngle(k, grid_q))) ++count;
    return count;
}

}  // namespace nctorus::torus
