#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "grw/field.hpp"
#include "grw/linalg.hpp"

namespace grw {

// A Frobenius-invariant subspace of F_{q^m}^n, carried in both presentations:
// its canonical basis over the extension field and a basis of the same space
// with every coordinate in F_q. The two matrices span the same set; for an
// invariant space the canonical forms coincide entry for entry.
struct GammaSubspace {
    Mat space;           // ext-level canonical basis
    Mat rational_basis;  // base-level canonical basis, entries below q

    std::uint32_t dim() const { return static_cast<std::uint32_t>(space.rows); }
};

/// Coordinatewise q^j-th power.
Vec frobenius_vec(const FieldTower& T, const Vec& x, std::uint32_t j = 1);

/// Canonical basis of {x^(q^j) : x in rowspace(V)}; dimension is preserved
/// because the Frobenius is an F_q-semilinear bijection.
Mat frob_subspace(const FieldTower& T, const Mat& V, std::uint32_t j = 1);

/// True iff rowspace(V) equals its own Frobenius image.
bool is_frobenius_invariant(const FieldTower& T, const Mat& V);

/// Canonical basis of the smallest Frobenius-invariant space containing
/// rowspace(V), without the rational-basis packaging.
Mat star_closure_space(const FieldTower& T, const Mat& V);

/// Its dimension alone.
std::uint32_t star_closure_dim(const FieldTower& T, const Mat& V);

/// The smallest Frobenius-invariant space containing rowspace(V): the sum of
/// the Frobenius images over j = 0..m-1.
GammaSubspace star_closure(const FieldTower& T, const Mat& V);

/// Base-level canonical basis of the F_q-rational vectors inside V, found by
/// solving the F_q-linear system that kills every z-coordinate above the
/// constant one. For an invariant space this basis spans all of V.
/// Throws std::invalid_argument when V is not Frobenius-invariant.
Mat fq_rational_basis(const FieldTower& T, const Mat& V);

/// The F_{q^m}-span of a base-level subspace, packaged with its rational
/// basis. Always Frobenius-invariant; inverse to fq_rational_basis.
GammaSubspace extend_scalars(const FieldTower& T, const Mat& W);

/// Walks every Frobenius-invariant subspace of F_{q^m}^n of the given
/// dimension, in the canonical order of their base-level bases. The count is
/// the Gaussian binomial over q, not q^m. Returning false stops the walk.
void for_each_gamma_subspace(const FieldTower& T, std::uint32_t n, std::uint32_t dim,
                             std::uint64_t budget,
                             const std::function<bool(const GammaSubspace&)>& visit);

std::vector<GammaSubspace> enumerate_gamma_subspaces(const FieldTower& T, std::uint32_t n,
                                                     std::uint32_t dim,
                                                     std::uint64_t budget = kDefaultBudget);

/// A vector x in V whose Frobenius shifts x, x^q, ..., x^(q^(l-1)) span the
/// whole l-dimensional invariant space V: the combination of V's rational
/// basis with the coefficients 1, z, ..., z^(l-1), whose Moore matrix is
/// nonsingular. Requires l <= m (throws std::invalid_argument beyond); the
/// spanning property is recomputed and enforced, not assumed.
Vec find_cyclic_generator(const FieldTower& T, const GammaSubspace& V);

}  // namespace grw
