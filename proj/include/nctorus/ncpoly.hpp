#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "nctorus/errors.hpp"

// Formal complex-linear combinations of words in the generators
// U1..Un and their inverses. Words are free: letters are never reordered,
// only identical words are merged. The text format is
//
//   U1 + U1' + U2 + U2'          (the Harper element)
//   2 U1 U2 - (0.5+1.5i) U2'
//
// and printing followed by parsing reproduces the polynomial exactly.

namespace nctorus {

struct Letter {
    int gen;  // 1-based generator index
    int exp;  // +1 or -1

    bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

struct NcTerm {
    std::complex<double> coeff;
    Word word;
};

namespace detail {

inline std::pair<int, int> letter_key(const Letter& l) {
    return {l.gen, l.exp > 0 ? 0 : 1};
}

inline bool word_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(),
        [](const Letter& x, const Letter& y) { return letter_key(x) < letter_key(y); });
}

inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace detail

class NcPolynomial {
  public:
    NcPolynomial() = default;

    explicit NcPolynomial(std::vector<NcTerm> terms) : terms_(std::move(terms)) {
        normalize();
    }

    static NcPolynomial zero() { return NcPolynomial(); }

    static NcPolynomial constant(std::complex<double> c) {
        return NcPolynomial({NcTerm{c, {}}});
    }

    /// The single letter U_gen (or its inverse for exp = -1).
    static NcPolynomial generator(int gen, int exp = 1) {
        if (gen < 1) throw DomainError("generator index must be >= 1");
        if (exp != 1 && exp != -1) throw DomainError("generator exponent must be +-1");
        return NcPolynomial({NcTerm{{1.0, 0.0}, {Letter{gen, exp}}}});
    }

    const std::vector<NcTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Maximum word length over the terms.
    std::size_t degree() const {
        std::size_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.word.size());
        return d;
    }

    /// Largest generator index that appears (0 for constants).
    int max_generator() const {
        int m = 0;
        for (const auto& t : terms_)
            for (const auto& l : t.word) m = std::max(m, l.gen);
        return m;
    }

    bool uses_inverses() const {
        for (const auto& t : terms_)
            for (const auto& l : t.word)
                if (l.exp < 0) return true;
        return false;
    }

    NcPolynomial& operator+=(const NcPolynomial& other) {
        terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
        normalize();
        return *this;
    }

    NcPolynomial& operator-=(const NcPolynomial& other) {
        for (const auto& t : other.terms_) terms_.push_back({-t.coeff, t.word});
        normalize();
        return *this;
    }

    NcPolynomial& operator*=(std::complex<double> s) {
        for (auto& t : terms_) t.coeff *= s;
        normalize();
        return *this;
    }

    friend NcPolynomial operator+(NcPolynomial a, const NcPolynomial& b) { return a += b; }
    friend NcPolynomial operator-(NcPolynomial a, const NcPolynomial& b) { return a -= b; }
    friend NcPolynomial operator*(std::complex<double> s, NcPolynomial a) { return a *= s; }
    friend NcPolynomial operator*(NcPolynomial a, std::complex<double> s) { return a *= s; }

    friend NcPolynomial operator-(NcPolynomial a) {
        for (auto& t : a.terms_) t.coeff = -t.coeff;
        return a;
    }

    /// Free product: words concatenate, nothing commutes.
    friend NcPolynomial operator*(const NcPolynomial& a, const NcPolynomial& b) {
        std::vector<NcTerm> out;
        out.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& s : a.terms_) {
            for (const auto& t : b.terms_) {
                Word w = s.word;
                w.insert(w.end(), t.word.begin(), t.word.end());
                out.push_back({s.coeff * t.coeff, std::move(w)});
            }
        }
        return NcPolynomial(std::move(out));
    }

    /// (c, l1...lm) -> (conj c, lm^-1 ... l1^-1); an involution.
    NcPolynomial adjoint() const {
        std::vector<NcTerm> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            Word w;
            w.reserve(t.word.size());
            for (auto it = t.word.rbegin(); it != t.word.rend(); ++it)
                w.push_back(Letter{it->gen, -it->exp});
            out.push_back({std::conj(t.coeff), std::move(w)});
        }
        return NcPolynomial(std::move(out));
    }

    bool operator==(const NcPolynomial& other) const {
        if (terms_.size() != other.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (terms_[i].coeff != other.terms_[i].coeff) return false;
            if (terms_[i].word != other.terms_[i].word) return false;
        }
        return true;
    }

    std::string str(const std::string& gen_prefix = "U") const;

    static NcPolynomial parse(const std::string& text);

  private:
    void normalize() {
        std::sort(terms_.begin(), terms_.end(), [](const NcTerm& a, const NcTerm& b) {
            return detail::word_less(a.word, b.word);
        });
        std::vector<NcTerm> merged;
        for (auto& t : terms_) {
            if (!merged.empty() && merged.back().word == t.word)
                merged.back().coeff += t.coeff;
            else
                merged.push_back(std::move(t));
        }
        std::erase_if(merged, [](const NcTerm& t) { return t.coeff == std::complex<double>(0.0, 0.0); });
        terms_ = std::move(merged);
    }

    std::vector<NcTerm> terms_;
};

namespace detail {

inline void append_word(std::string& out, const Word& w, const std::string& prefix) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out += ' ';
        out += prefix;
        out += std::to_string(w[i].gen);
        if (w[i].exp < 0) out += '\'';
    }
}

}  // namespace detail

inline std::string NcPolynomial::str(const std::string& gen_prefix) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        const double re = t.coeff.real();
        const double im = t.coeff.imag();
        bool negative = false;
        std::string body;

        if (im == 0.0) {
            negative = re < 0.0;
            const double mag = std::abs(re);
            if (mag != 1.0 || t.word.empty()) body = detail::format_double(mag);
        } else if (re == 0.0) {
            negative = im < 0.0;
            const double mag = std::abs(im);
            body = (mag == 1.0) ? "i" : detail::format_double(mag) + "i";
        } else {
            body = "(" + detail::format_double(re) + (im < 0.0 ? "-" : "+") +
                   detail::format_double(std::abs(im)) + "i)";
        }

        if (first) {
            if (negative) out += '-';
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        out += body;
        if (!t.word.empty()) {
            if (!body.empty()) out += ' ';
            detail::append_word(out, t.word, gen_prefix);
        }
    }
    return out;
}

namespace detail {

class NcPolyParser {
  public:
    explicit NcPolyParser(const std::string& text) : s_(text) {}

    NcPolynomial run() {
        std::vector<NcTerm> terms;
        skip_ws();
        if (done()) throw ParseError("empty polynomial expression");
        double sign = 1.0;
        if (peek() == '+' || peek() == '-') sign = (get() == '-') ? -1.0 : 1.0;
        terms.push_back(parse_term(sign));
        skip_ws();
        while (!done()) {
            const char c = get();
            if (c != '+' && c != '-')
                throw ParseError(std::string("expected '+' or '-', found '") + c + "'");
            terms.push_back(parse_term(c == '-' ? -1.0 : 1.0));
            skip_ws();
        }
        return NcPolynomial(std::move(terms));
    }

  private:
    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    char get() { return s_[pos_++]; }
    void skip_ws() {
        while (!done() && (peek() == ' ' || peek() == '\t' || peek() == '*')) ++pos_;
    }

    bool at_number() const {
        if (done()) return false;
        const char c = peek();
        return (c >= '0' && c <= '9') || c == '.';
    }

    double parse_number() {
        const char* begin = s_.data() + pos_;
        const char* end = s_.data() + s_.size();
        double value = 0.0;
        const auto res = std::from_chars(begin, end, value);
        if (res.ec != std::errc() || res.ptr == begin)
            throw ParseError("invalid numeric literal near '" + s_.substr(pos_, 8) + "'");
        pos_ += static_cast<std::size_t>(res.ptr - begin);
        return value;
    }

    /// 'i' that is a lone imaginary unit, not the start of an identifier.
    bool at_imaginary_unit() const { return !done() && peek() == 'i'; }

    std::complex<double> parse_coefficient(bool& any) {
        any = true;
        skip_ws();
        if (!done() && peek() == '(') {
            ++pos_;
            skip_ws();
            double re_sign = 1.0;
            if (!done() && (peek() == '+' || peek() == '-'))
                re_sign = (get() == '-') ? -1.0 : 1.0;
            const double re = re_sign * parse_number();
            skip_ws();
            if (done()) throw ParseError("unterminated complex literal");
            const char op = get();
            if (op != '+' && op != '-') throw ParseError("malformed complex literal");
            skip_ws();
            const double im = (op == '-' ? -1.0 : 1.0) * parse_number();
            skip_ws();
            if (done() || get() != 'i') throw ParseError("complex literal missing 'i'");
            skip_ws();
            if (done() || get() != ')') throw ParseError("complex literal missing ')'");
            return {re, im};
        }
        if (at_number()) {
            const double v = parse_number();
            if (at_imaginary_unit()) {
                ++pos_;
                return {0.0, v};
            }
            return {v, 0.0};
        }
        if (at_imaginary_unit()) {
            ++pos_;
            return {0.0, 1.0};
        }
        any = false;
        return {1.0, 0.0};
    }

    NcTerm parse_term(double sign) {
        skip_ws();
        bool has_coeff = false;
        std::complex<double> coeff = parse_coefficient(has_coeff);
        Word word;
        skip_ws();
        while (!done() && (peek() == 'U' || peek() == 'u')) {
            ++pos_;
            if (done() || peek() < '0' || peek() > '9')
                throw ParseError("generator letter missing index");
            int gen = 0;
            while (!done() && peek() >= '0' && peek() <= '9') gen = gen * 10 + (get() - '0');
            if (gen < 1) throw ParseError("generator index must be >= 1");
            int exp = 1;
            if (!done() && peek() == '\'') {
                exp = -1;
                ++pos_;
            }
            word.push_back(Letter{gen, exp});
            skip_ws();
        }
        if (!has_coeff && word.empty())
            throw ParseError("expected a coefficient or a generator letter");
        return NcTerm{sign * coeff, std::move(word)};
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline NcPolynomial NcPolynomial::parse(const std::string& text) {
    return detail::NcPolyParser(text).run();
}

/// U1 + U1' + U2 + U2': the canonical norm witness element.
inline NcPolynomial harper_element() {
    return NcPolynomial::generator(1) + NcPolynomial::generator(1, -1) +
           NcPolynomial::generator(2) + NcPolynomial::generator(2, -1);
}

}  // namespace nctorus
