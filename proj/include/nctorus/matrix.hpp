#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include "nctorus/errors.hpp"

namespace nctorus {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Sized for desk-scale representations
/// (q up to a few hundred), so no blocking or expression templates.
class CMatrix {
  public:
    CMatrix() = default;

    CMatrix(std::size_t rows, std::size_t cols, Complex fill = Complex(0.0, 0.0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static CMatrix identity(std::size_t n) {
        CMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Complex>& data() const { return data_; }

    CMatrix& operator+=(const CMatrix& other) {
        require_same_shape(other);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
        return *this;
    }

    CMatrix& operator-=(const CMatrix& other) {
        require_same_shape(other);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
        return *this;
    }

    CMatrix& operator*=(Complex scalar) {
        for (auto& x : data_) x *= scalar;
        return *this;
    }

    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(Complex s, CMatrix a) { return a *= s; }
    friend CMatrix operator*(CMatrix a, Complex s) { return a *= s; }

    friend CMatrix operator*(const CMatrix& a, const CMatrix& b) {
        if (a.cols_ != b.rows_)
            throw ShapeError("matrix product: inner dimensions disagree");
        CMatrix c(a.rows_, b.cols_);
        // i-k-j order keeps the inner loop contiguous in both b and c.
        for (std::size_t i = 0; i < a.rows_; ++i) {
            const Complex* arow = &a.data_[i * a.cols_];
            Complex* crow = &c.data_[i * c.cols_];
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Complex aik = arow[k];
                if (aik == Complex(0.0, 0.0)) continue;
                const Complex* brow = &b.data_[k * b.cols_];
                for (std::size_t j = 0; j < b.cols_; ++j) crow[j] += aik * brow[j];
            }
        }
        return c;
    }

    CMatrix adjoint() const {
        CMatrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
        return m;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const auto& x : data_) s += std::norm(x);
        return std::sqrt(s);
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& x : data_) m = std::max(m, std::abs(x));
        return m;
    }

  private:
    void require_same_shape(const CMatrix& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_)
            throw ShapeError("matrix shapes disagree");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

inline double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    CMatrix d = a;
    d -= b;
    return d.max_abs();
}

/// I_m (x) a: m diagonal copies of a. Carries M_m over a representation.
inline CMatrix amplify(const CMatrix& a, std::size_t m) {
    CMatrix out(m * a.rows(), m * a.cols());
    for (std::size_t blk = 0; blk < m; ++blk)
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                out(blk * a.rows() + i, blk * a.cols() + j) = a(i, j);
    return out;
}

namespace detail {

inline std::vector<Complex> matvec(const CMatrix& a, const std::vector<Complex>& v) {
    std::vector<Complex> w(a.rows(), Complex(0.0, 0.0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Complex s(0.0, 0.0);
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
        w[i] = s;
    }
    return w;
}

inline std::vector<Complex> adjoint_matvec(const CMatrix& a, const std::vector<Complex>& w) {
    std::vector<Complex> u(a.cols(), Complex(0.0, 0.0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const Complex wi = w[i];
        if (wi == Complex(0.0, 0.0)) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) u[j] += std::conj(a(i, j)) * wi;
    }
    return u;
}

inline double vec_norm(const std::vector<Complex>& v) {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s);
}

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations.
/// Each off-diagonal entry is first rotated real by a diagonal phase,
/// then annihilated by a plain Givens rotation.
inline std::vector<double> hermitian_eigenvalues(CMatrix b) {
    const std::size_t n = b.rows();
    if (n != b.cols()) throw ShapeError("hermitian_eigenvalues: square matrix required");
    const double scale = std::max(b.frobenius_norm(), 1e-300);
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(b(p, q));
        if (std::sqrt(2.0 * off) <= 1e-15 * scale) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex g = b(p, q);
                const double ag = std::abs(g);
                if (ag <= 1e-18 * scale) continue;

                // Phase rotation: column/row q by conj(u)/u makes b(p,q) real.
                const Complex u = g / ag;
                for (std::size_t i = 0; i < n; ++i) b(i, q) *= std::conj(u);
                for (std::size_t j = 0; j < n; ++j) b(q, j) *= u;

                const double app = b(p, p).real();
                const double aqq = b(q, q).real();
                const double tau = (aqq - app) / (2.0 * ag);
                const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (std::size_t i = 0; i < n; ++i) {
                    const Complex bip = b(i, p), biq = b(i, q);
                    b(i, p) = c * bip - s * biq;
                    b(i, q) = s * bip + c * biq;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const Complex bpj = b(p, j), bqj = b(q, j);
                    b(p, j) = c * bpj - s * bqj;
                    b(q, j) = s * bpj + c * bqj;
                }
                b(p, q) = Complex(0.0, 0.0);
                b(q, p) = Complex(0.0, 0.0);
            }
        }
    }
    std::vector<double> eigs(n);
    for (std::size_t i = 0; i < n; ++i) eigs[i] = b(i, i).real();
    return eigs;
}

}  // namespace detail

/// Largest singular value. Power iteration on A*A with relative
/// convergence 1e-13; a full Jacobi decomposition takes over if the
/// iteration stalls and the matrix is small (n <= 64). The power
/// iteration estimate never exceeds the true norm, so partial results
/// stay valid as lower bounds.
inline double operator_norm(const CMatrix& a, double rel_tol = 1e-13) {
    if (a.empty()) return 0.0;
    const std::size_t n = a.cols();

    // Deterministic start vector: fixed seed, independent of call site.
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<Complex> v(n);
    for (auto& x : v) x = Complex(dist(rng), dist(rng));
    const double nv = detail::vec_norm(v);
    for (auto& x : v) x /= nv;

    double sigma = 0.0;
    double prev = -1.0;
    const int max_iters = 500 + static_cast<int>(20 * n);
    for (int iter = 0; iter < max_iters; ++iter) {
        std::vector<Complex> w = detail::matvec(a, v);
        sigma = detail::vec_norm(w);  // ||A v||, v unit
        if (sigma == 0.0) return 0.0;
        if (prev >= 0.0 && sigma - prev <= rel_tol * sigma) return sigma;
        prev = sigma;
        std::vector<Complex> u = detail::adjoint_matvec(a, w);
        const double nu = detail::vec_norm(u);
        if (nu == 0.0) return sigma;
        for (std::size_t j = 0; j < n; ++j) v[j] = u[j] / nu;
    }

    if (n <= 64) {
        CMatrix b = a.adjoint() * a;
        double lmax = 0.0;
        for (double e : detail::hermitian_eigenvalues(std::move(b))) lmax = std::max(lmax, e);
        return std::sqrt(lmax);
    }
    return sigma;
}

}  // namespace nctorus
