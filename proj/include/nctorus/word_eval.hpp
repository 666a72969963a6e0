#pragma once

#include <string>
#include <vector>

#include "nctorus/matrix.hpp"
#include "nctorus/ncpoly.hpp"

namespace nctorus {

/// Substitutes matrices for generators: each word maps to the ordered
/// product of the corresponding matrices, terms sum with coefficients.
/// Inverse letters become conjugate transposes when the substituted
/// matrices are unitary (inverse_as_adjoint); otherwise they are refused,
/// since a plain polynomial relation has no inverses to offer.
inline CMatrix evaluate_poly(const NcPolynomial& x, const std::vector<CMatrix>& gens,
                             bool inverse_as_adjoint) {
    if (gens.empty()) throw ShapeError("evaluate_poly: no generator matrices");
    const std::size_t d = gens.front().rows();
    for (const auto& g : gens)
        if (g.rows() != d || g.cols() != d)
            throw ShapeError("evaluate_poly: generator matrices must be square of equal size");

    CMatrix sum(d, d);
    for (const auto& term : x.terms()) {
        CMatrix prod = CMatrix::identity(d);
        for (const auto& letter : term.word) {
            if (letter.gen < 1 || static_cast<std::size_t>(letter.gen) > gens.size())
                throw UnsupportedError("evaluate_poly: generator U" +
                                       std::to_string(letter.gen) + " has no matrix (rank " +
                                       std::to_string(gens.size()) + ")");
            if (letter.exp < 0) {
                if (!inverse_as_adjoint)
                    throw UnsupportedError("evaluate_poly: inverse letters are not allowed here");
                prod = prod * gens[letter.gen - 1].adjoint();
            } else {
                prod = prod * gens[letter.gen - 1];
            }
        }
        prod *= term.coeff;
        sum += prod;
    }
    return sum;
}

}  // namespace nctorus
