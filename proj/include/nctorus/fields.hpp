#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "nctorus/errors.hpp"
#include "nctorus/rational.hpp"

// Frobenius companion matrices, exact characteristic polynomials, and the
// degree-bounded field of constants over Q. An algebraic number is a monic
// irreducible minimal polynomial plus an isolating numeric approximation;
// everything that decides membership or equality runs in exact arithmetic,
// with numerics only steering (root location, factor candidates).

namespace nctorus::fields {

namespace detail {

// Dense polynomials over Q, coefficients low to high, leading zeros trimmed.
using QPoly = std::vector<Rational>;

inline void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

inline QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly c(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

inline QPoly derivative(const QPoly& p) {
    QPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(i));
    trim(d);
    return d;
}

/// Exact division with remainder over Q; divisor must be nonzero.
inline std::pair<QPoly, QPoly> divrem(QPoly num, const QPoly& den) {
    if (den.empty()) throw DomainError("polynomial division by zero");
    trim(num);
    QPoly quot;
    if (num.size() >= den.size()) quot.assign(num.size() - den.size() + 1, Rational(0));
    while (num.size() >= den.size()) {
        const Rational factor = num.back() / den.back();
        const std::size_t shift = num.size() - den.size();
        quot[shift] = factor;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= factor * den[i];
        num.pop_back();  // leading term cancels exactly
        trim(num);
    }
    trim(quot);
    return {quot, num};
}

inline QPoly gcd(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        QPoly r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

}  // namespace detail

/// Monic polynomial over Q of degree >= 1: coefficients c0..c_{n-1} plus
/// an implicit leading 1.
class RationalPoly {
  public:
    explicit RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw DomainError("monic polynomial must have degree >= 1");
    }

    /// x + c0, the degree-1 pattern.
    static RationalPoly linear(const Rational& c0) { return RationalPoly({c0}); }

    /// Parses a comma-separated low-to-high coefficient list "c0,c1,...",
    /// rationals as "p/q"; the leading 1 is implicit.
    static RationalPoly parse_coeff_list(const std::string& text) {
        std::vector<Rational> coeffs;
        std::size_t start = 0;
        for (;;) {
            std::size_t comma = text.find(',', start);
            if (comma == std::string::npos) comma = text.size();
            std::string piece = text.substr(start, comma - start);
            while (!piece.empty() && piece.front() == ' ') piece.erase(piece.begin());
            while (!piece.empty() && piece.back() == ' ') piece.pop_back();
            if (piece.empty()) throw ParseError("empty coefficient in list '" + text + "'");
            coeffs.push_back(parse_rational(piece));
            if (comma == text.size()) break;
            start = comma + 1;
        }
        return RationalPoly(std::move(coeffs));
    }

    int degree() const { return static_cast<int>(coeffs_.size()); }

    /// c_i for i < degree; the implicit 1 at i = degree.
    Rational coeff(int i) const {
        if (i == degree()) return Rational(1);
        return coeffs_[static_cast<std::size_t>(i)];
    }

    const std::vector<Rational>& lower_coeffs() const { return coeffs_; }

    /// Full coefficient vector including the leading 1.
    detail::QPoly full() const {
        detail::QPoly p = coeffs_;
        p.push_back(Rational(1));
        return p;
    }

    bool operator==(const RationalPoly& other) const { return coeffs_ == other.coeffs_; }
    bool operator!=(const RationalPoly& other) const { return !(*this == other); }

    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
        detail::QPoly prod = detail::mul(a.full(), b.full());
        prod.pop_back();  // leading 1 stays implicit
        return RationalPoly(std::move(prod));
    }

    /// Exact divisibility over Q.
    bool divisible_by(const RationalPoly& divisor) const {
        return detail::divrem(full(), divisor.full()).second.empty();
    }

    Rational eval(const Rational& x) const {
        Rational acc(1);
        for (int i = degree() - 1; i >= 0; --i)
            acc = acc * x + coeffs_[static_cast<std::size_t>(i)];
        return acc;
    }

    std::complex<double> eval(std::complex<double> x) const {
        std::complex<double> acc(1.0, 0.0);
        for (int i = degree() - 1; i >= 0; --i)
            acc = acc * x + to_double(coeffs_[static_cast<std::size_t>(i)]);
        return acc;
    }

    std::complex<double> eval_derivative(std::complex<double> x) const {
        const int n = degree();
        std::complex<double> acc(static_cast<double>(n), 0.0);
        for (int i = n - 1; i >= 1; --i)
            acc = acc * x + static_cast<double>(i) * to_double(coeffs_[static_cast<std::size_t>(i)]);
        return acc;
    }

    /// "x^3 + 2x - 7" style rendering.
    std::string str() const {
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const Rational c = coeff(k);
            if (c == 0) continue;
            const bool negative = c < 0;
            const Rational mag = negative ? Rational(-c) : c;
            if (out.empty()) {
                if (negative) out += '-';
            } else {
                out += negative ? " - " : " + ";
            }
            if (mag != 1 || k == 0) out += nctorus::to_string(mag);
            if (k >= 1) {
                out += 'x';
                if (k >= 2) out += '^' + std::to_string(k);
            }
        }
        return out.empty() ? "0" : out;
    }

  private:
    std::vector<Rational> coeffs_;
};

/// Frobenius companion matrix: 1s on the subdiagonal, last column
/// -c_0..-c_{n-1}, zeros elsewhere.
struct CompanionMatrix {
    std::size_t n = 0;
    std::vector<std::vector<Rational>> entries;

    Rational trace() const {
        Rational t(0);
        for (std::size_t i = 0; i < n; ++i) t += entries[i][i];
        return t;
    }
};

inline CompanionMatrix companion(const RationalPoly& p) {
    const std::size_t n = static_cast<std::size_t>(p.degree());
    CompanionMatrix m;
    m.n = n;
    m.entries.assign(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i + 1 < n; ++i) m.entries[i + 1][i] = 1;
    for (std::size_t i = 0; i < n; ++i) m.entries[i][n - 1] = -p.coeff(static_cast<int>(i));
    return m;
}

/// True iff the entries follow the companion pattern exactly.
inline bool is_companion_pattern(const CompanionMatrix& m) {
    if (m.entries.size() != m.n) return false;
    for (std::size_t i = 0; i < m.n; ++i) {
        if (m.entries[i].size() != m.n) return false;
        for (std::size_t j = 0; j + 1 < m.n; ++j) {
            const Rational expected = (i == j + 1) ? 1 : 0;
            if (m.entries[i][j] != expected) return false;
        }
    }
    return true;
}

/// det(xI - m) over Q by the Faddeev-LeVerrier recursion. Deliberately
/// generic — it never reads the companion pattern, so the round trip
/// through companion() checks an identity rather than a tautology.
inline RationalPoly char_poly(const CompanionMatrix& m) {
    const std::size_t n = m.n;
    if (n == 0 || m.entries.size() != n) throw ShapeError("char_poly: malformed matrix");
    using Mat = std::vector<std::vector<Rational>>;
    const Mat& a = m.entries;

    auto matmul = [n](const Mat& x, const Mat& y) {
        Mat z(n, std::vector<Rational>(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if (x[i][k] == 0) continue;
                for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
            }
        return z;
    };
    auto trace = [n](const Mat& x) {
        Rational t(0);
        for (std::size_t i = 0; i < n; ++i) t += x[i][i];
        return t;
    };

    std::vector<Rational> c(n + 1, Rational(0));  // c[k] multiplies x^(n-k)
    c[0] = 1;
    Mat mk = a;
    c[1] = -trace(mk);
    for (std::size_t k = 2; k <= n; ++k) {
        Mat shifted = mk;
        for (std::size_t i = 0; i < n; ++i) shifted[i][i] += c[k - 1];
        mk = matmul(a, shifted);
        c[k] = -trace(mk) / Rational(k);
    }

    std::vector<Rational> low(n);
    for (std::size_t i = 0; i < n; ++i) low[i] = c[n - i];
    return RationalPoly(std::move(low));
}

/// All complex roots by simultaneous (Durand-Kerner) iteration.
/// Deterministic: fixed initial configuration, no randomness.
inline std::vector<std::complex<double>> roots_numeric(const RationalPoly& p, double tol) {
    if (tol <= 0.0) throw DomainError("roots_numeric: tol must be positive");
    const int n = p.degree();
    double coeff_scale = 0.0;
    for (int i = 0; i < n; ++i) coeff_scale = std::max(coeff_scale, std::abs(to_double(p.coeff(i))));
    const double radius = 1.0 + coeff_scale;  // Cauchy bound on root modulus

    std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
    const std::complex<double> seed(0.4, 0.9);  // customary non-real spread
    std::complex<double> power(1.0, 0.0);
    for (auto& zk : z) {
        power *= seed;
        zk = radius * power;
    }

    const int max_iters = 600;
    for (int iter = 0; iter < max_iters; ++iter) {
        double max_step = 0.0;
        for (int k = 0; k < n; ++k) {
            auto& zk = z[static_cast<std::size_t>(k)];
            std::complex<double> denom(1.0, 0.0);
            for (int j = 0; j < n; ++j)
                if (j != k) denom *= zk - z[static_cast<std::size_t>(j)];
            if (denom == std::complex<double>(0.0, 0.0)) {
                zk += std::complex<double>(1e-8, 1e-8) * radius;  // split coincident iterates
                max_step = radius;
                continue;
            }
            const std::complex<double> step = p.eval(zk) / denom;
            zk -= step;
            max_step = std::max(max_step, std::abs(step));
        }
        if (max_step < 1e-14 * radius) break;
    }

    const double bound = tol * (1.0 + coeff_scale);
    for (const auto& root : z)
        if (!(std::abs(p.eval(root)) < bound))
            throw RootConvergenceError(
                "roots_numeric: residual above tolerance after iteration cap", z);

    std::sort(z.begin(), z.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return z;
}

namespace detail {

// ---- irreducibility over Q -------------------------------------------

/// Monic integer rescaling: with D = lcm(denominators), P(y) = D^n p(y/D)
/// is monic integer and factors over Q exactly as p does.
inline std::vector<BigInt> monic_integer_rescale(const RationalPoly& p, BigInt& d_out) {
    const int n = p.degree();
    BigInt d = 1;
    for (int i = 0; i < n; ++i)
        d = boost::multiprecision::lcm(d, boost::multiprecision::denominator(p.coeff(i)));
    std::vector<BigInt> out(static_cast<std::size_t>(n) + 1);
    out[static_cast<std::size_t>(n)] = 1;
    BigInt dpow = 1;
    for (int i = n - 1; i >= 0; --i) {
        dpow *= d;
        out[static_cast<std::size_t>(i)] =
            boost::multiprecision::numerator(p.coeff(i) * Rational(dpow));
    }
    d_out = d;
    return out;
}

// Polynomials over F_p as int64 vectors, low to high; p stays small.
using ModPoly = std::vector<std::int64_t>;

inline void mod_trim(ModPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int mod_degree(const ModPoly& f) { return static_cast<int>(f.size()) - 1; }

inline ModPoly mod_mul(const ModPoly& a, const ModPoly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    ModPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    mod_trim(c);
    return c;
}

/// Remainder modulo monic f.
inline ModPoly mod_rem(ModPoly a, const ModPoly& f, std::int64_t p) {
    mod_trim(a);
    while (a.size() >= f.size()) {
        const std::int64_t lead = a.back();
        const std::size_t shift = a.size() - f.size();
        if (lead != 0)
            for (std::size_t i = 0; i < f.size(); ++i)
                a[shift + i] = ((a[shift + i] - lead * f[i]) % p + p) % p;
        a.pop_back();
        mod_trim(a);
    }
    return a;
}

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t result = 1, base = ((a % p) + p) % p, e = p - 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

inline ModPoly mod_gcd(ModPoly a, ModPoly b, std::int64_t p) {
    mod_trim(a);
    mod_trim(b);
    while (!b.empty()) {
        // mod_rem needs a monic divisor; scaling does not change the gcd
        const std::int64_t inv = mod_inverse(b.back(), p);
        for (auto& c : b) c = c * inv % p;
        ModPoly r = mod_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const std::int64_t inv = mod_inverse(a.back(), p);
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

/// x^(p^k) mod f by binary exponentiation; p^k < 2^63 for p <= 29, k <= 12.
inline ModPoly mod_frobenius_power(const ModPoly& f, std::int64_t p, int k) {
    unsigned long long e = 1;
    for (int i = 0; i < k; ++i) e *= static_cast<unsigned long long>(p);
    ModPoly base = mod_rem(ModPoly{0, 1}, f, p);
    ModPoly result{1};
    while (e > 0) {
        if (e & 1ull) result = mod_rem(mod_mul(result, base, p), f, p);
        base = mod_rem(mod_mul(base, base, p), f, p);
        e >>= 1;
    }
    return result;
}

inline ModPoly mod_sub_x(ModPoly h, std::int64_t p) {
    if (h.size() < 2) h.resize(2, 0);
    h[1] = ((h[1] - 1) % p + p) % p;
    mod_trim(h);
    return h;
}

/// Rabin's irreducibility test for monic f over F_p.
inline bool mod_irreducible_rabin(const ModPoly& f, std::int64_t p) {
    const int n = mod_degree(f);
    if (n <= 0) return false;
    if (n == 1) return true;

    std::vector<int> prime_divisors;
    int m = n;
    for (int d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            prime_divisors.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) prime_divisors.push_back(m);

    for (int d : prime_divisors) {
        const ModPoly h = mod_sub_x(mod_frobenius_power(f, p, n / d), p);
        if (mod_degree(mod_gcd(f, h, p)) != 0) return false;
    }
    return mod_sub_x(mod_frobenius_power(f, p, n), p).empty();
}

/// Exact division test for monic integer polynomials.
inline bool integer_divides(const std::vector<BigInt>& num, const std::vector<BigInt>& den) {
    std::vector<BigInt> rem = num;
    while (rem.size() >= den.size()) {
        const BigInt lead = rem.back();
        const std::size_t shift = rem.size() - den.size();
        for (std::size_t i = 0; i < den.size(); ++i) rem[shift + i] -= lead * den[i];
        rem.pop_back();
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    return rem.empty();
}

}  // namespace detail

/// Irreducibility over Q for monic rational polynomials of degree <= 12:
/// squarefree screen, reduction modulo small primes (a Rabin certificate
/// settles it), then a numerically guided exact factor search decides.
inline bool is_irreducible(const RationalPoly& p) {
    const int n = p.degree();
    if (n == 1) return true;
    if (n > 12) throw DomainError("is_irreducible: degree capped at 12");

    // A repeated factor is a proper factor.
    if (detail::degree(detail::gcd(p.full(), detail::derivative(p.full()))) >= 1) return false;

    BigInt d_scale;
    const std::vector<BigInt> pz = detail::monic_integer_rescale(p, d_scale);

    for (std::int64_t prime : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29}) {
        detail::ModPoly f(pz.size());
        for (std::size_t i = 0; i < pz.size(); ++i) {
            BigInt r = pz[i] % prime;
            if (r < 0) r += prime;
            f[i] = r.convert_to<std::int64_t>();
        }
        detail::mod_trim(f);
        if (detail::mod_degree(f) != n) continue;
        if (detail::mod_irreducible_rabin(f, prime)) return true;
    }

    // Factor search: numeric roots propose integer factor candidates and
    // exact division decides. Needs exactly representable coefficients.
    for (const auto& c : pz)
        if (boost::multiprecision::abs(c) > (BigInt(1) << 53))
            throw DomainError(
                "is_irreducible: coefficients too large for the factor-search fallback");

    std::vector<Rational> low(pz.size() - 1);
    for (std::size_t i = 0; i + 1 < pz.size(); ++i) low[i] = Rational(pz[i]);
    const std::vector<std::complex<double>> roots = roots_numeric(RationalPoly(low), 1e-9);

    for (int size = 1; size <= n / 2; ++size) {
        std::vector<int> index(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) index[static_cast<std::size_t>(i)] = i;
        for (;;) {
            std::vector<std::complex<double>> cand = {{1.0, 0.0}};
            for (int i : index) {
                std::vector<std::complex<double>> next(cand.size() + 1, {0.0, 0.0});
                for (std::size_t k = 0; k < cand.size(); ++k) {
                    next[k + 1] += cand[k];
                    next[k] -= cand[k] * roots[static_cast<std::size_t>(i)];
                }
                cand = std::move(next);
            }
            bool integral = true;
            std::vector<BigInt> candidate(cand.size());
            for (std::size_t k = 0; k < cand.size(); ++k) {
                const double re = cand[k].real();
                const double rounded = std::round(re);
                if (std::abs(cand[k].imag()) > 1e-4 * (1.0 + std::abs(re)) ||
                    std::abs(re - rounded) > 1e-4 * (1.0 + std::abs(re))) {
                    integral = false;
                    break;
                }
                candidate[k] = BigInt(static_cast<long long>(rounded));
            }
            if (integral && detail::integer_divides(pz, candidate)) return false;

            int pos = size - 1;
            while (pos >= 0 && index[static_cast<std::size_t>(pos)] == n - size + pos) --pos;
            if (pos < 0) break;
            ++index[static_cast<std::size_t>(pos)];
            for (int i = pos + 1; i < size; ++i)
                index[static_cast<std::size_t>(i)] = index[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
    return true;
}

/// Monic rational minimal polynomial plus an isolating approximation.
/// Equality is decided by identical minimal polynomials together with
/// overlapping isolating boxes after Newton refinement.
class AlgebraicNumber {
  public:
    /// A rational number as a degree-1 algebraic number (minpoly x - r).
    static AlgebraicNumber from_rational(const Rational& r) {
        return AlgebraicNumber(RationalPoly({-r}), {to_double(r), 0.0}, 0.0);
    }

    /// The root of minpoly nearest to `near`. Verifies irreducibility.
    static AlgebraicNumber root_of(const RationalPoly& minpoly, std::complex<double> near) {
        const auto roots = checked_roots(minpoly);
        std::size_t best = 0;
        for (std::size_t i = 1; i < roots.size(); ++i)
            if (std::abs(roots[i] - near) < std::abs(roots[best] - near)) best = i;
        return isolate(minpoly, roots, best);
    }

    /// The index-th root in the deterministic (re, im) ordering.
    static AlgebraicNumber root_by_index(const RationalPoly& minpoly, std::size_t index = 0) {
        const auto roots = checked_roots(minpoly);
        if (index >= roots.size()) throw DomainError("AlgebraicNumber: root index out of range");
        return isolate(minpoly, roots, index);
    }

    const RationalPoly& minpoly() const { return minpoly_; }
    int degree() const { return minpoly_.degree(); }
    std::complex<double> approx() const { return center_; }
    double radius() const { return radius_; }

    friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        if (a.minpoly_ != b.minpoly_) return false;
        AlgebraicNumber ra = a, rb = b;
        ra.newton_refine();
        rb.newton_refine();
        const double slack = 1e-14 * (1.0 + std::abs(ra.center_));
        return std::abs(ra.center_ - rb.center_) <= ra.radius_ + rb.radius_ + slack;
    }

  private:
    AlgebraicNumber(RationalPoly minpoly, std::complex<double> center, double radius)
        : minpoly_(std::move(minpoly)), center_(center), radius_(radius) {}

    static std::vector<std::complex<double>> checked_roots(const RationalPoly& minpoly) {
        if (!is_irreducible(minpoly))
            throw InvalidParametersError("AlgebraicNumber: minimal polynomial is reducible");
        return roots_numeric(minpoly, 1e-10);
    }

    static AlgebraicNumber isolate(const RationalPoly& minpoly,
                                   const std::vector<std::complex<double>>& roots,
                                   std::size_t index) {
        double separation = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < roots.size(); ++i)
            if (i != index) separation = std::min(separation, std::abs(roots[i] - roots[index]));
        AlgebraicNumber out(minpoly, roots[index], 0.0);
        out.newton_refine();
        if (roots.size() > 1) out.radius_ = std::min(out.radius_, separation / 3.0);
        return out;
    }

    /// Newton polish; the classical bound n*|p(z)/p'(z)| certifies a root
    /// of the (squarefree) minimal polynomial inside the stored box.
    void newton_refine() {
        if (degree() == 1) {
            center_ = {to_double(-minpoly_.coeff(0)), 0.0};
            radius_ = 0.0;
            return;
        }
        std::complex<double> z = center_;
        for (int iter = 0; iter < 60; ++iter) {
            const std::complex<double> slope = minpoly_.eval_derivative(z);
            if (slope == std::complex<double>(0.0, 0.0)) break;
            const std::complex<double> step = minpoly_.eval(z) / slope;
            z -= step;
            if (std::abs(step) < 1e-15 * (1.0 + std::abs(z))) break;
        }
        center_ = z;
        const std::complex<double> slope = minpoly_.eval_derivative(z);
        if (slope == std::complex<double>(0.0, 0.0)) {
            radius_ = 1e-10 * (1.0 + std::abs(z));
        } else {
            radius_ = degree() * std::abs(minpoly_.eval(z) / slope) +
                      1e-15 * (1.0 + std::abs(z));
        }
    }

    RationalPoly minpoly_;
    std::complex<double> center_;
    double radius_;
};

/// Scalar-membership criterion: c*I realizes as a companion matrix root
/// of p exactly when c is a root of p — decided exactly by divisibility
/// of p by the minimal polynomial of c.
inline bool is_scalar_witness(const AlgebraicNumber& c, const RationalPoly& p) {
    return p.divisible_by(c.minpoly());
}

/// Field-of-constants membership for M_n over Q: the algebraic numbers of
/// degree at most n (pad the minimal polynomial with linear factors to
/// reach a degree-n witness).
inline bool constants_member(const AlgebraicNumber& c, std::int64_t n) {
    if (n < 1) throw DomainError("constants_member: n must be positive");
    return c.degree() <= n;
}

}  // namespace nctorus::fields
