#include "kschur/linalg.hpp"

namespace kschur {

std::vector<TRat> dense_solve(std::vector<std::vector<TRat>> M, std::vector<TRat> b) {
    const size_t n = b.size();
    if (M.size() != n) throw std::invalid_argument("dense_solve: shape mismatch");
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && M[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::runtime_error("dense_solve: singular system");
        std::swap(M[piv], M[col]);
        std::swap(b[piv], b[col]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || M[r][col].is_zero()) continue;
            TRat f = M[r][col] / M[col][col];
            for (size_t c = col; c < n; ++c) M[r][c] -= f * M[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<TRat> x(n);
    for (size_t i = 0; i < n; ++i) x[i] = b[i] / M[i][i];
    return x;
}

}  // namespace kschur
