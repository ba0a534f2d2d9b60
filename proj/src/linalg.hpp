#pragma once

#include <vector>

#include "fields.hpp"

namespace cuspidal {

using Mat = std::vector<std::vector<FieldElem>>;

/// Row-reduce in place (reduced row echelon form); returns the rank.
inline int rref_in_place(Mat& M, const FieldPtr& F) {
    if (M.empty()) return 0;
    const size_t rows = M.size(), cols = M[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && M[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(M[r], M[piv]);
        FieldElem inv = M[r][c].inverse();
        for (size_t j = c; j < cols; ++j) M[r][j] = M[r][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || M[i][c].is_zero()) continue;
            FieldElem f = M[i][c];
            for (size_t j = c; j < cols; ++j) M[i][j] = M[i][j] - f * M[r][j];
        }
        ++r;
    }
    (void)F;
    return int(r);
}

inline int mat_rank(Mat M, const FieldPtr& F) { return rref_in_place(M, F); }

/// Basis of the right kernel {x : Mx = 0}; each vector has length cols.
inline std::vector<std::vector<FieldElem>> kernel_basis(Mat M, const FieldPtr& F) {
    std::vector<std::vector<FieldElem>> out;
    if (M.empty()) return out;
    const size_t cols = M[0].size();
    rref_in_place(M, F);
    std::vector<int> pivot_of_col(cols, -1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < M.size(); ++c) {
        if (!M[r][c].is_zero()) pivot_of_col[c] = int(r++);
    }
    for (size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] != -1) continue;
        std::vector<FieldElem> v(cols, F->zero());
        v[c] = F->one();
        for (size_t cc = 0; cc < c; ++cc)
            if (pivot_of_col[cc] != -1) v[cc] = -M[pivot_of_col[cc]][c];
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace cuspidal
