#pragma once

#include <cstdint>
#include <vector>

#include "grw/code.hpp"
#include "grw/galois.hpp"

namespace grw {

// How grw_d evaluates max rank weight over the closure of a subcode.
// ClosureDim reads it off as the closure's dimension, valid only for n <= m;
// Enumerate walks the closure's elements and works for any shape. Auto picks
// ClosureDim exactly when n <= m.
enum class InnerMaxPath { Auto, ClosureDim, Enumerate };

struct WeightResult {
    std::uint32_t value = 0;
    GammaSubspace witness;  // first minimizer in canonical order
};

// The sequence (M_1, ..., M_k) with one witness subspace per entry. Plain
// data: nothing here enforces monotonicity or bounds, the theorem checks do.
struct WeightHierarchy {
    std::vector<std::uint32_t> values;
    std::vector<GammaSubspace> witnesses;
};

/// r-th generalized weight as a minimum over Frobenius-invariant spaces:
/// the smallest dim V with V invariant and dim(C ∩ V) >= r, scanned in
/// ascending dimension so the first hit is optimal. 1 <= r <= k.
WeightResult grw_M(const LinearCode& C, std::uint32_t r, std::uint64_t budget = kDefaultBudget);

/// r-th generalized weight as a minimum over r-dimensional subcodes D of the
/// maximum rank weight found in D's closure. Exists to be compared against
/// grw_M; the subcode count is a Gaussian binomial over q^m, so this is the
/// expensive direction.
std::uint32_t grw_d(const LinearCode& C, std::uint32_t r, InnerMaxPath path = InnerMaxPath::Auto,
                    std::uint64_t budget = kDefaultBudget);

/// All of (M_1, ..., M_k). The scan for M_r starts at dimension M_{r-1}+1.
WeightHierarchy weight_hierarchy(const LinearCode& C, std::uint64_t budget = kDefaultBudget);

/// r-th generalized Hamming weight: the smallest support size of an
/// r-dimensional subcode, as the minimum cardinality of a coordinate subset
/// whose span meets C in dimension >= r.
std::uint32_t ghw(const LinearCode& C, std::uint32_t r);

/// dim(C ∩ rowspace(V)) without materializing the intersection.
std::uint32_t meet_dim(const LinearCode& C, const Mat& V);

}  // namespace grw
