#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace grw {

// Packed element of F_{q^m}. An element with F_q-coordinates
// (c_0, ..., c_{m-1}) in the basis (1, z, ..., z^{m-1}), constant term
// first, packs to sum_j code(c_j) * q^j; a base element with F_p-digits
// (d_0, ..., d_{e-1}) packs to sum_i d_i * p^i. Codes below q are exactly
// the embedded F_q subfield.
using FE = std::uint32_t;

class FieldTower;
using TowerPtr = std::shared_ptr<const FieldTower>;

/// The chain F_p ⊂ F_q ⊂ F_{q^m}, q = p^e, with explicit irreducible
/// moduli at both levels. Immutable after construction; every operation is
/// pure, so a tower may be shared freely across threads.
class FieldTower {
  public:
    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t m() const { return m_; }
    std::uint64_t q() const { return q_; }          // p^e
    std::uint64_t order() const { return order_; }  // p^(e*m)

    // Monic irreducible over F_p, degree e, constant term first.
    const std::vector<std::uint32_t>& base_modulus() const { return base_mod_; }
    // Monic irreducible over F_q, degree m; coefficients are base-element
    // digit vectors, constant term first at both levels.
    const std::vector<std::vector<std::uint32_t>>& ext_modulus() const { return ext_mod_; }

    FE add(FE a, FE b) const;
    FE sub(FE a, FE b) const;
    FE neg(FE a) const;
    FE mul(FE a, FE b) const;
    FE inv(FE a) const;  // throws std::domain_error on 0
    FE pow(FE a, std::uint64_t n) const;

    /// a^(q^j), the j-fold relative Frobenius.
    FE frobenius(FE a, std::uint32_t j = 1) const;

    /// True iff a lies in the F_q subfield, i.e. frobenius(a) == a.
    bool is_base_rational(FE a) const;

    // Serialization form: m arrays of e integers in [0, p), constant term
    // first at both levels.
    std::vector<std::vector<std::uint32_t>> to_coeffs(FE a) const;
    FE from_coeffs(const std::vector<std::vector<std::uint32_t>>& c) const;

    /// Same (p, e, m) and identical moduli; packed codes are interchangeable
    /// between structurally equal towers.
    bool same_structure(const FieldTower& other) const;

    static FE zero() { return 0; }
    static FE one() { return 1; }

  private:
    friend TowerPtr make_field(std::uint32_t, std::uint32_t, std::uint32_t,
                               const std::vector<std::uint32_t>*,
                               const std::vector<std::vector<std::uint32_t>>*);
    FieldTower() = default;

    FE dense_mul(FE a, FE b) const;
    FE dense_inv(FE a) const;
    FE dense_pow(FE a, std::uint64_t n) const;
    void build_tables();

    std::uint32_t p_ = 0, e_ = 0, m_ = 0;
    std::uint64_t q_ = 0, order_ = 0;
    std::vector<std::uint32_t> base_mod_;
    std::vector<std::vector<std::uint32_t>> ext_mod_;
    std::vector<FE> ext_mod_packed_;  // m+1 packed base codes

    // Dense arithmetic is the ground truth; full tables are an internal
    // accelerator for small fields, exhaustively tested against it.
    bool has_tables_ = false;
    std::vector<FE> mul_table_;   // order x order
    std::vector<FE> inv_table_;   // order
    std::vector<FE> frob_table_;  // order, one Frobenius step
};

/// Builds a validated tower. Omitted moduli default to the first monic
/// irreducible of the required degree in ascending packed-coefficient order.
/// Throws std::invalid_argument on inputs that do not define a field
/// (p not prime, reducible or malformed modulus, unsupported size).
TowerPtr make_field(std::uint32_t p, std::uint32_t e, std::uint32_t m,
                    const std::vector<std::uint32_t>* base_modulus = nullptr,
                    const std::vector<std::vector<std::uint32_t>>* ext_modulus = nullptr);

}  // namespace grw
