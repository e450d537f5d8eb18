#pragma once

#include <optional>
#include <vector>

namespace shrinker {

// Gaussian elimination over an exact field S (needs is_zero(), inverse(), +,-,*).
// Returns nullopt when A is singular.
template <class S>
std::optional<std::vector<S>> solve_linear(std::vector<std::vector<S>> A, std::vector<S> b) {
    const std::size_t n = A.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && A[piv][col].is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        S inv = A[col][col].inverse();
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || A[row][col].is_zero()) continue;
            S factor = A[row][col] * inv;
            for (std::size_t k = col; k < n; ++k)
                if (!A[col][k].is_zero()) A[row][k] -= factor * A[col][k];
            b[row] -= factor * b[col];
        }
    }
    std::vector<S> x;
    x.reserve(n);
    for (std::size_t i = 0; i < n; ++i) x.push_back(b[i] * A[i][i].inverse());
    return x;
}

}  // namespace shrinker
