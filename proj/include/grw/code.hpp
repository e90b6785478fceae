#pragma once

#include <cstdint>
#include <functional>

#include "grw/field.hpp"
#include "grw/linalg.hpp"

namespace grw {

// An [n, k] linear code over F_{q^m}, held by its canonical (reduced row
// echelon) generator matrix. Two codes with the same row space compare equal.
struct LinearCode {
    TowerPtr tower;
    Mat G;  // k x n, RREF, full row rank
    std::uint32_t n = 0, k = 0;

    bool operator==(const LinearCode& other) const {
        return tower->same_structure(*other.tower) && G == other.G;
    }
};

/// Validates entries and row independence, canonicalizes the generator.
/// Throws std::invalid_argument on rank-deficient or empty generators.
LinearCode make_code(TowerPtr tower, const Mat& generator);

/// The dual code under the standard bilinear form sum_i x_i y_i.
/// Throws std::domain_error when k == n (the dual would be the zero code,
/// which cannot carry a generator matrix).
LinearCode dual(const LinearCode& C);

/// Expansion of a word over F_{q^m} into its n x m matrix of F_q
/// coordinates, row i holding the coordinates of x_i in the basis
/// (1, z, ..., z^(m-1)).
Mat expansion(const FieldTower& T, const Vec& x);

/// Rank of the expansion matrix over F_q; equivalently the F_q-dimension of
/// the span of the entries of x.
std::uint32_t rank_weight(const FieldTower& T, const Vec& x);

std::uint32_t hamming_weight(const Vec& x);

/// Visits all q^(mk) codewords, the zero word included. Throws
/// budget_exceeded if there are more than budget of them.
void for_each_codeword(const LinearCode& C, std::uint64_t budget,
                       const std::function<bool(const Vec&)>& visit);

/// Minimum rank weight over the nonzero codewords.
std::uint32_t min_rank_distance(const LinearCode& C, std::uint64_t budget = kDefaultBudget);

/// Minimum Hamming weight over the nonzero codewords.
std::uint32_t min_hamming_distance(const LinearCode& C, std::uint64_t budget = kDefaultBudget);

}  // namespace grw
