#include "grw/linalg.hpp"

#include <algorithm>
#include <string>

namespace grw {

Mat Mat::from_rows(const std::vector<Vec>& rows_in, std::size_t cols_hint) {
    std::size_t c = rows_in.empty() ? cols_hint : rows_in[0].size();
    Mat M(rows_in.size(), c);
    for (std::size_t i = 0; i < rows_in.size(); ++i) {
        if (rows_in[i].size() != c)
            throw std::invalid_argument("ragged rows in matrix construction");
        M.set_row(i, rows_in[i]);
    }
    return M;
}

Mat Mat::identity(std::size_t n) {
    Mat M(n, n);
    for (std::size_t i = 0; i < n; ++i) M.at(i, i) = 1;
    return M;
}

Mat rref(const FieldTower& T, Mat M) {
    std::size_t lead = 0;
    for (std::size_t col = 0; col < M.cols && lead < M.rows; ++col) {
        std::size_t piv = lead;
        while (piv < M.rows && M.at(piv, col) == 0) ++piv;
        if (piv == M.rows) continue;
        if (piv != lead)
            for (std::size_t j = 0; j < M.cols; ++j)
                std::swap(M.at(piv, j), M.at(lead, j));
        FE s = T.inv(M.at(lead, col));
        for (std::size_t j = col; j < M.cols; ++j)
            M.at(lead, j) = T.mul(s, M.at(lead, j));
        for (std::size_t i = 0; i < M.rows; ++i) {
            if (i == lead || M.at(i, col) == 0) continue;
            FE f = M.at(i, col);
            for (std::size_t j = col; j < M.cols; ++j)
                M.at(i, j) = T.sub(M.at(i, j), T.mul(f, M.at(lead, j)));
        }
        ++lead;
    }
    M.rows = lead;  // rows below are all zero by construction
    M.a.resize(lead * M.cols);
    return M;
}

std::size_t rank(const FieldTower& T, const Mat& M) { return rref(T, M).rows; }

Mat kernel(const FieldTower& T, const Mat& M) {
    Mat R = rref(T, M);
    std::vector<std::size_t> pivots;
    std::vector<bool> is_pivot(R.cols, false);
    for (std::size_t i = 0, col = 0; i < R.rows; ++i) {
        while (R.at(i, col) == 0) ++col;
        pivots.push_back(col);
        is_pivot[col] = true;
    }
    Mat K(R.cols - R.rows, R.cols);
    std::size_t r = 0;
    for (std::size_t f = 0; f < R.cols; ++f) {
        if (is_pivot[f]) continue;
        K.at(r, f) = 1;
        for (std::size_t i = 0; i < R.rows; ++i)
            K.at(r, pivots[i]) = T.neg(R.at(i, f));
        ++r;
    }
    return rref(T, K);
}

Mat matmul(const FieldTower& T, const Mat& A, const Mat& B) {
    if (A.cols != B.rows) throw std::invalid_argument("matmul shape mismatch");
    Mat C(A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t k = 0; k < A.cols; ++k) {
            FE v = A.at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < B.cols; ++j)
                C.at(i, j) = T.add(C.at(i, j), T.mul(v, B.at(k, j)));
        }
    return C;
}

Mat transpose(const Mat& M) {
    Mat R(M.cols, M.rows);
    for (std::size_t i = 0; i < M.rows; ++i)
        for (std::size_t j = 0; j < M.cols; ++j) R.at(j, i) = M.at(i, j);
    return R;
}

Mat stack(const Mat& A, const Mat& B) {
    if (A.cols != B.cols && A.rows != 0 && B.rows != 0)
        throw std::invalid_argument("stack column mismatch");
    Mat S(A.rows + B.rows, A.rows ? A.cols : B.cols);
    std::copy(A.a.begin(), A.a.end(), S.a.begin());
    std::copy(B.a.begin(), B.a.end(), S.a.begin() + A.a.size());
    return S;
}

FE dot(const FieldTower& T, const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dot length mismatch");
    FE s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s = T.add(s, T.mul(x[i], y[i]));
    return s;
}

Vec row_combine(const FieldTower& T, const Mat& G, const Vec& coeffs) {
    if (coeffs.size() != G.rows) throw std::invalid_argument("coefficient count mismatch");
    Vec v(G.cols, 0);
    for (std::size_t i = 0; i < G.rows; ++i) {
        if (coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < G.cols; ++j)
            v[j] = T.add(v[j], T.mul(coeffs[i], G.at(i, j)));
    }
    return v;
}

bool in_row_space(const FieldTower& T, const Mat& A, const Vec& v) {
    Mat R = rref(T, A);
    std::size_t r = R.rows;
    R = stack(R, Mat::from_rows({v}));
    return rank(T, R) == r;
}

Mat intersect_row_spaces(const FieldTower& T, const Mat& A, const Mat& B) {
    if (A.cols != B.cols) throw std::invalid_argument("intersection in different spaces");
    return kernel(T, stack(kernel(T, A), kernel(T, B)));
}

BigInt gaussian_binomial(std::uint64_t fsize, std::uint32_t n, std::uint32_t dim) {
    if (dim > n) return 0;
    BigInt num = 1, den = 1, f = fsize;
    for (std::uint32_t i = 0; i < dim; ++i) {
        num *= boost::multiprecision::pow(f, n - i) - 1;
        den *= boost::multiprecision::pow(f, i + 1) - 1;
    }
    return num / den;  // always exact
}

void for_each_subspace(const FieldTower& T, std::uint64_t fsize, std::uint32_t n,
                       std::uint32_t dim, std::uint64_t budget,
                       const std::function<bool(const Mat&)>& visit) {
    if (fsize != T.q() && fsize != T.order())
        throw std::invalid_argument("fsize must be one of the tower's two levels");
    if (dim > n) return;
    BigInt total = gaussian_binomial(fsize, n, dim);
    if (total > budget) throw budget_exceeded(total);

    if (dim == 0) {
        Mat M(0, n);
        visit(M);
        return;
    }

    // pivot columns: successive size-dim subsets of {0..n-1} in lex order
    std::vector<std::uint32_t> piv(dim);
    for (std::uint32_t i = 0; i < dim; ++i) piv[i] = i;
    for (;;) {
        std::vector<bool> is_pivot(n, false);
        for (auto c : piv) is_pivot[c] = true;
        // free positions in row-major order: (i, j) with j past the row's
        // pivot and j not itself a pivot column
        std::vector<std::pair<std::uint32_t, std::uint32_t>> free_pos;
        for (std::uint32_t i = 0; i < dim; ++i)
            for (std::uint32_t j = piv[i] + 1; j < n; ++j)
                if (!is_pivot[j]) free_pos.emplace_back(i, j);

        Mat M(dim, n);
        for (std::uint32_t i = 0; i < dim; ++i) M.at(i, piv[i]) = 1;
        std::vector<std::uint64_t> odo(free_pos.size(), 0);
        for (;;) {
            for (std::size_t t = 0; t < free_pos.size(); ++t)
                M.at(free_pos[t].first, free_pos[t].second) = static_cast<FE>(odo[t]);
            if (!visit(M)) return;
            // odometer, rightmost fastest
            std::size_t t = free_pos.size();
            while (t > 0 && ++odo[t - 1] == fsize) odo[--t] = 0;
            if (t == 0) break;
        }

        // next pivot combination
        std::int64_t i = dim - 1;
        while (i >= 0 && piv[i] == n - dim + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (std::uint32_t j = i + 1; j < dim; ++j) piv[j] = piv[j - 1] + 1;
    }
}

std::vector<Mat> enumerate_subspaces(const FieldTower& T, std::uint64_t fsize,
                                     std::uint32_t n, std::uint32_t dim,
                                     std::uint64_t budget) {
    std::vector<Mat> out;
    for_each_subspace(T, fsize, n, dim, budget, [&](const Mat& M) {
        out.push_back(M);
        return true;
    });
    return out;
}

}  // namespace grw
