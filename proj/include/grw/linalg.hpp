#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "grw/field.hpp"

namespace grw {

using Vec = std::vector<FE>;
using BigInt = boost::multiprecision::cpp_int;

// Dense row-major matrix over one level of a tower. The level is implicit:
// base-field matrices simply keep every entry below q, which all operations
// preserve.
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<FE> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    FE& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    FE at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    Vec row(std::size_t i) const {
        return Vec(a.begin() + i * cols, a.begin() + (i + 1) * cols);
    }
    void set_row(std::size_t i, const Vec& v) {
        std::copy(v.begin(), v.end(), a.begin() + i * cols);
    }
    static Mat from_rows(const std::vector<Vec>& rows_in, std::size_t cols_hint = 0);
    static Mat identity(std::size_t n);

    bool operator==(const Mat&) const = default;
};

/// Reduced row echelon form with zero rows removed: the canonical basis
/// matrix of the row space. rows == rank afterwards.
Mat rref(const FieldTower& T, Mat M);

std::size_t rank(const FieldTower& T, const Mat& M);

/// Canonical basis of the right kernel {x : M x = 0}, one basis vector per
/// row (possibly zero rows, always M.cols columns).
Mat kernel(const FieldTower& T, const Mat& M);

Mat matmul(const FieldTower& T, const Mat& A, const Mat& B);
Mat transpose(const Mat& M);

/// A's rows on top of B's rows; column counts must agree.
Mat stack(const Mat& A, const Mat& B);

FE dot(const FieldTower& T, const Vec& x, const Vec& y);

/// coeffs * G, one codeword of the row space.
Vec row_combine(const FieldTower& T, const Mat& G, const Vec& coeffs);

bool in_row_space(const FieldTower& T, const Mat& A, const Vec& v);

/// Canonical basis of rowspace(A) ∩ rowspace(B), computed as the kernel of
/// the stacked kernels (the orthogonal of the sum of orthogonals).
Mat intersect_row_spaces(const FieldTower& T, const Mat& A, const Mat& B);

/// Gaussian binomial: the number of dim-dimensional subspaces of F^n over a
/// field with fsize elements. Exact at any size.
BigInt gaussian_binomial(std::uint64_t fsize, std::uint32_t n, std::uint32_t dim);

/// Thrown when a requested enumeration would visit more subspaces than the
/// caller's budget allows. Raised up front from the subspace count, before
/// any work is done.
struct budget_exceeded : std::runtime_error {
    BigInt required;
    explicit budget_exceeded(const BigInt& req)
        : std::runtime_error("enumeration budget exceeded: would visit " +
                             req.str() + " subspaces"),
          required(req) {}
};

constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// Visits every dim-dimensional subspace of F^n (F = the level of the tower
/// with fsize elements, which must be q or q^m) exactly once, as its
/// canonical basis matrix. Order: pivot-column sets ascending
/// lexicographically, then free entries as an odometer over packed element
/// codes, rightmost position fastest. Returning false stops the walk.
void for_each_subspace(const FieldTower& T, std::uint64_t fsize, std::uint32_t n,
                       std::uint32_t dim, std::uint64_t budget,
                       const std::function<bool(const Mat&)>& visit);

/// Same walk, collected into a vector.
std::vector<Mat> enumerate_subspaces(const FieldTower& T, std::uint64_t fsize,
                                     std::uint32_t n, std::uint32_t dim,
                                     std::uint64_t budget = kDefaultBudget);

}  // namespace grw
