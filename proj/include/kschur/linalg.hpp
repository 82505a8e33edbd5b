#pragma once

/* Exact triangular and dense solves for transition matrices.  Matrices
 * here are a few hundred entries at most; plain vectors of vectors.
 */

#include "kschur/trat.hpp"

#include <stdexcept>
#include <vector>

namespace kschur {

/* thrown by unitriangular_solve when a diagonal entry is not 1; the
 * caller decides whether to escalate to a TRat solve */
struct NonUnitDiagonal : std::runtime_error {
    explicit NonUnitDiagonal(size_t row)
        : std::runtime_error("unitriangular_solve: non-unit diagonal at row " +
                             std::to_string(row)),
          row(row) {}
    size_t row;
};

/* Solve M x = b for unit upper triangular M by back substitution.
 * Rejects matrices with nonzero entries below the diagonal.  Works for
 * any exact scalar with +,-,*,==0 semantics (Int, TPoly). */
template <class Scalar>
std::vector<Scalar> unitriangular_solve(const std::vector<std::vector<Scalar>>& M,
                                        const std::vector<Scalar>& b) {
    const size_t n = b.size();
    if (M.size() != n) throw std::invalid_argument("unitriangular_solve: shape mismatch");
    const Scalar zero{}, one{1};
    for (size_t i = 0; i < n; ++i) {
        if (M[i].size() != n) throw std::invalid_argument("unitriangular_solve: shape mismatch");
        for (size_t j = 0; j < i; ++j)
            if (!(M[i][j] == zero))
                throw std::invalid_argument("unitriangular_solve: not upper triangular");
        if (!(M[i][i] == one)) throw NonUnitDiagonal(i);
    }
    std::vector<Scalar> x(n, zero);
    for (size_t ii = n; ii-- > 0;) {
        Scalar acc = b[ii];
        for (size_t j = ii + 1; j < n; ++j)
            acc = acc - M[ii][j] * x[j];
        x[ii] = acc;
    }
    return x;
}

/* Dense Gaussian elimination over Q(t).  Throws on singular systems. */
std::vector<TRat> dense_solve(std::vector<std::vector<TRat>> M, std::vector<TRat> b);

}  // namespace kschur
