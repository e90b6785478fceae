#include "grw/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace grw {
namespace {

// Largest field for which full multiplication / inverse / Frobenius tables
// are precomputed. 1024^2 entries of 4 bytes is 4 MiB, built once per tower.
constexpr std::uint64_t kTableLimit = 1024;

// Supported sizes: packed codes must fit comfortably in FE and table-free
// arithmetic must stay exact in 64-bit intermediates.
constexpr std::uint64_t kOrderLimit = std::uint64_t(1) << 31;

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    // extended Euclid on (a, p), a != 0
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        std::int64_t qq = r / nr;
        std::swap(t -= qq * nt, nt);
        std::swap(r -= qq * nr, nr);
    }
    return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

// Coefficient-field abstraction for the generic polynomial engine below.
// PrimeRing models F_p on uint32 residues, QuotientRing models
// F_p[y]/(g) on dense digit vectors.
struct PrimeRing {
    using Elem = std::uint32_t;
    std::uint32_t p;

    std::uint64_t size() const { return p; }
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((std::uint64_t(a) * b) % p);
    }
    Elem inv(Elem a) const { return inv_mod_p(a, p); }
    Elem by_code(std::uint64_t c) const { return static_cast<Elem>(c); }
};

template <class Ring>
using PolyOf = std::vector<typename Ring::Elem>;  // coefficient i of x^i

template <class Ring>
int degree(const Ring& R, const PolyOf<Ring>& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (!R.is_zero(f[i])) return i;
    return -1;
}

template <class Ring>
PolyOf<Ring> poly_mul(const Ring& R, const PolyOf<Ring>& a, const PolyOf<Ring>& b) {
    int da = degree(R, a), db = degree(R, b);
    if (da < 0 || db < 0) return {};
    PolyOf<Ring> out(da + db + 1, R.zero());
    for (int i = 0; i <= da; ++i) {
        if (R.is_zero(a[i])) continue;
        for (int j = 0; j <= db; ++j)
            out[i + j] = R.add(out[i + j], R.mul(a[i], b[j]));
    }
    return out;
}

// f mod g in place; g need not be monic.
template <class Ring>
void poly_mod(const Ring& R, PolyOf<Ring>& f, const PolyOf<Ring>& g) {
    int dg = degree(R, g);
    if (dg < 0) throw std::logic_error("poly_mod: zero divisor polynomial");
    auto lead_inv = R.inv(g[dg]);
    for (int df = degree(R, f); df >= dg; df = degree(R, f)) {
        auto c = R.mul(f[df], lead_inv);
        for (int j = 0; j <= dg; ++j)
            f[df - dg + j] = R.sub(f[df - dg + j], R.mul(c, g[j]));
    }
}

// Inverse of f modulo the monic irreducible g, via extended Euclid.
template <class Ring>
PolyOf<Ring> poly_inv_mod(const Ring& R, PolyOf<Ring> f, const PolyOf<Ring>& g) {
    PolyOf<Ring> r0 = g, r1 = std::move(f);
    poly_mod(R, r1, g);
    PolyOf<Ring> t0, t1{R.one()};
    while (degree(R, r1) > 0) {
        // one long-division step: r0 = q*r1 + r2
        PolyOf<Ring> r2 = r0, qt;
        int d1 = degree(R, r1);
        auto lead_inv = R.inv(r1[d1]);
        qt.assign(degree(R, r0) - d1 + 1, R.zero());
        for (int dr = degree(R, r2); dr >= d1; dr = degree(R, r2)) {
            auto c = R.mul(r2[dr], lead_inv);
            qt[dr - d1] = c;
            for (int j = 0; j <= d1; ++j)
                r2[dr - d1 + j] = R.sub(r2[dr - d1 + j], R.mul(c, r1[j]));
        }
        PolyOf<Ring> t2 = t0;
        {
            PolyOf<Ring> qt1 = poly_mul(R, qt, t1);
            if (t2.size() < qt1.size()) t2.resize(qt1.size(), R.zero());
            for (std::size_t i = 0; i < qt1.size(); ++i) t2[i] = R.sub(t2[i], qt1[i]);
        }
        r0 = std::move(r1); r1 = std::move(r2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (degree(R, r1) != 0)
        throw std::domain_error("inverse of zero");
    auto scale = R.inv(r1[0]);
    for (auto& c : t1) c = R.mul(c, scale);
    poly_mod(R, t1, g);
    return t1;
}

// Decodes counter t into degree-d monic coefficients: digit i of t in base
// |Ring| is the coefficient of x^i, so candidates ascend numerically with
// low-order coefficients varying fastest.
template <class Ring>
PolyOf<Ring> monic_by_counter(const Ring& R, int d, std::uint64_t t) {
    PolyOf<Ring> f(d + 1, R.zero());
    for (int i = 0; i < d; ++i) {
        f[i] = R.by_code(t % R.size());
        t /= R.size();
    }
    f[d] = R.one();
    return f;
}

// Trial division by every monic polynomial of degree 1..d/2. Fine for the
// tiny degrees seen here.
template <class Ring>
bool is_irreducible(const Ring& R, const PolyOf<Ring>& f) {
    int d = degree(R, f);
    if (d <= 0) return false;
    if (d == 1) return true;
    if (R.is_zero(f[0])) return false;  // divisible by x
    for (int dd = 1; 2 * dd <= d; ++dd) {
        std::uint64_t count = 1;
        for (int i = 0; i < dd; ++i) count *= R.size();
        for (std::uint64_t t = 0; t < count; ++t) {
            PolyOf<Ring> g = monic_by_counter(R, dd, t);
            PolyOf<Ring> r = f;
            poly_mod(R, r, g);
            if (degree(R, r) < 0) return false;
        }
    }
    return true;
}

template <class Ring>
PolyOf<Ring> first_irreducible(const Ring& R, int d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= R.size();
    for (std::uint64_t t = 0; t < count; ++t) {
        PolyOf<Ring> f = monic_by_counter(R, d, t);
        if (is_irreducible(R, f)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

}  // namespace

// F_q = F_p[y]/(g) on packed digit codes; the quotient by a second modulus
// reuses the same polynomial engine one level up.
struct QuotientRing {
    using Elem = std::vector<std::uint32_t>;  // e digits mod p
    PrimeRing fp;
    std::vector<std::uint32_t> g;  // monic irreducible, degree e
    std::uint32_t e;
    std::uint64_t q;

    std::uint64_t size() const { return q; }
    Elem zero() const { return Elem(e, 0); }
    Elem one() const {
        Elem r(e, 0);
        r[0] = 1;
        return r;
    }
    bool is_zero(const Elem& a) const {
        return std::all_of(a.begin(), a.end(), [](std::uint32_t d) { return d == 0; });
    }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const {
        Elem r(e);
        for (std::uint32_t i = 0; i < e; ++i) r[i] = fp.add(a[i], b[i]);
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r(e);
        for (std::uint32_t i = 0; i < e; ++i) r[i] = fp.sub(a[i], b[i]);
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        PolyOf<PrimeRing> prod = poly_mul(fp, a, b);
        poly_mod(fp, prod, g);
        prod.resize(e, 0);
        return prod;
    }
    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw std::domain_error("inverse of zero");
        PolyOf<PrimeRing> r = poly_inv_mod(fp, a, g);
        r.resize(e, 0);
        return r;
    }
    Elem by_code(std::uint64_t c) const {
        Elem r(e);
        for (std::uint32_t i = 0; i < e; ++i) {
            r[i] = static_cast<std::uint32_t>(c % fp.p);
            c /= fp.p;
        }
        return r;
    }
    std::uint64_t to_code(const Elem& a) const {
        std::uint64_t c = 0;
        for (std::uint32_t i = e; i-- > 0;) c = c * fp.p + a[i];
        return c;
    }
};

namespace {

// Shared dense view of a tower: unpack, compute in F_q[z]/(h), repack.
struct DenseCtx {
    QuotientRing fq;
    PolyOf<QuotientRing> h;  // monic irreducible over F_q, degree m
    std::uint32_t m;

    static DenseCtx from(const FieldTower& T) {
        DenseCtx c;
        c.fq = QuotientRing{PrimeRing{T.p()}, T.base_modulus(), T.e(), T.q()};
        c.h.reserve(T.m() + 1);
        for (const auto& coeff : T.ext_modulus()) c.h.push_back(coeff);
        c.m = T.m();
        return c;
    }
    PolyOf<QuotientRing> unpack(FE a) const {
        PolyOf<QuotientRing> v(m);
        std::uint64_t rest = a;
        for (std::uint32_t j = 0; j < m; ++j) {
            v[j] = fq.by_code(rest % fq.q);
            rest /= fq.q;
        }
        return v;
    }
    FE pack(PolyOf<QuotientRing> v) const {
        v.resize(m, fq.zero());
        std::uint64_t c = 0;
        for (std::uint32_t j = m; j-- > 0;) c = c * fq.q + fq.to_code(v[j]);
        return static_cast<FE>(c);
    }
};

}  // namespace

FE FieldTower::add(FE a, FE b) const {
    // digitwise mod p; no carries cross digit boundaries
    FE r = 0;
    std::uint64_t scale = 1;
    for (std::uint32_t i = 0; i < e_ * m_; ++i) {
        r += static_cast<FE>(scale * ((a % p_ + b % p_) % p_));
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return r;
}

FE FieldTower::neg(FE a) const {
    FE r = 0;
    std::uint64_t scale = 1;
    for (std::uint32_t i = 0; i < e_ * m_; ++i) {
        r += static_cast<FE>(scale * ((p_ - a % p_) % p_));
        a /= p_;
        scale *= p_;
    }
    return r;
}

FE FieldTower::sub(FE a, FE b) const { return add(a, neg(b)); }

FE FieldTower::mul(FE a, FE b) const {
    if (has_tables_) return mul_table_[std::uint64_t(a) * order_ + b];
    return dense_mul(a, b);
}

FE FieldTower::inv(FE a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (has_tables_) return inv_table_[a];
    return dense_inv(a);
}

FE FieldTower::pow(FE a, std::uint64_t n) const {
    FE r = 1, base = a;
    while (n) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

FE FieldTower::frobenius(FE a, std::uint32_t j) const {
    j %= m_;  // q^m-th power is the identity on F_{q^m}
    FE r = a;
    for (std::uint32_t i = 0; i < j; ++i)
        r = has_tables_ ? frob_table_[r] : dense_pow(r, q_);
    return r;
}

bool FieldTower::is_base_rational(FE a) const { return frobenius(a, 1) == a; }

std::vector<std::vector<std::uint32_t>> FieldTower::to_coeffs(FE a) const {
    std::vector<std::vector<std::uint32_t>> out(m_, std::vector<std::uint32_t>(e_));
    std::uint64_t rest = a;
    for (std::uint32_t j = 0; j < m_; ++j)
        for (std::uint32_t i = 0; i < e_; ++i) {
            out[j][i] = static_cast<std::uint32_t>(rest % p_);
            rest /= p_;
        }
    return out;
}

FE FieldTower::from_coeffs(const std::vector<std::vector<std::uint32_t>>& c) const {
    if (c.size() != m_)
        throw std::invalid_argument("element needs exactly " + std::to_string(m_) +
                                    " coordinate arrays, got " + std::to_string(c.size()));
    std::uint64_t code = 0;
    for (std::uint32_t j = m_; j-- > 0;) {
        if (c[j].size() != e_)
            throw std::invalid_argument("coordinate " + std::to_string(j) + " needs " +
                                        std::to_string(e_) + " digits, got " +
                                        std::to_string(c[j].size()));
        for (std::uint32_t i = e_; i-- > 0;) {
            if (c[j][i] >= p_)
                throw std::invalid_argument("digit " + std::to_string(c[j][i]) +
                                            " out of range for p=" + std::to_string(p_));
            code = code * p_ + c[j][i];
        }
    }
    return static_cast<FE>(code);
}

bool FieldTower::same_structure(const FieldTower& other) const {
    return p_ == other.p_ && e_ == other.e_ && m_ == other.m_ &&
           base_mod_ == other.base_mod_ && ext_mod_ == other.ext_mod_;
}

FE FieldTower::dense_mul(FE a, FE b) const {
    DenseCtx c = DenseCtx::from(*this);
    auto prod = poly_mul(c.fq, c.unpack(a), c.unpack(b));
    poly_mod(c.fq, prod, c.h);
    return c.pack(std::move(prod));
}

FE FieldTower::dense_inv(FE a) const {
    DenseCtx c = DenseCtx::from(*this);
    return c.pack(poly_inv_mod(c.fq, c.unpack(a), c.h));
}

FE FieldTower::dense_pow(FE a, std::uint64_t n) const {
    FE r = 1, base = a;
    while (n) {
        if (n & 1) r = dense_mul(r, base);
        base = dense_mul(base, base);
        n >>= 1;
    }
    return r;
}

void FieldTower::build_tables() {
    if (order_ > kTableLimit) return;
    const std::size_t n = static_cast<std::size_t>(order_);
    DenseCtx c = DenseCtx::from(*this);
    mul_table_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        auto ua = c.unpack(static_cast<FE>(a));
        for (std::size_t b = a; b < n; ++b) {
            auto prod = poly_mul(c.fq, ua, c.unpack(static_cast<FE>(b)));
            poly_mod(c.fq, prod, c.h);
            FE v = c.pack(std::move(prod));
            mul_table_[a * n + b] = v;
            mul_table_[b * n + a] = v;
        }
    }
    inv_table_.assign(n, 0);
    for (std::size_t a = 1; a < n; ++a) inv_table_[a] = dense_inv(static_cast<FE>(a));
    frob_table_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) frob_table_[a] = dense_pow(static_cast<FE>(a), q_);
    has_tables_ = true;
}

TowerPtr make_field(std::uint32_t p, std::uint32_t e, std::uint32_t m,
                    const std::vector<std::uint32_t>* base_modulus,
                    const std::vector<std::vector<std::uint32_t>>* ext_modulus) {
    if (!is_prime(p)) throw std::invalid_argument("p=" + std::to_string(p) + " is not prime");
    if (e == 0 || m == 0) throw std::invalid_argument("e and m must be positive");
    std::uint64_t order = 1;
    for (std::uint32_t i = 0; i < e * m; ++i) {
        order *= p;
        if (order > kOrderLimit)
            throw std::invalid_argument("field order p^(e*m) exceeds 2^31");
    }

    auto T = std::shared_ptr<FieldTower>(new FieldTower());
    T->p_ = p;
    T->e_ = e;
    T->m_ = m;
    T->order_ = order;
    T->q_ = 1;
    for (std::uint32_t i = 0; i < e; ++i) T->q_ *= p;

    PrimeRing fp{p};
    if (base_modulus) {
        const auto& g = *base_modulus;
        if (g.size() != e + 1)
            throw std::invalid_argument("base modulus must have degree " + std::to_string(e));
        for (auto d : g)
            if (d >= p) throw std::invalid_argument("base modulus digit out of range");
        if (g.back() != 1) throw std::invalid_argument("base modulus must be monic");
        if (!is_irreducible(fp, g))
            throw std::invalid_argument("base modulus is reducible over F_p");
        T->base_mod_ = g;
    } else {
        T->base_mod_ = first_irreducible(fp, static_cast<int>(e));
    }

    QuotientRing fq{fp, T->base_mod_, e, T->q_};
    if (ext_modulus) {
        const auto& h = *ext_modulus;
        if (h.size() != m + 1)
            throw std::invalid_argument("extension modulus must have degree " + std::to_string(m));
        for (const auto& coeff : h) {
            if (coeff.size() != e)
                throw std::invalid_argument("extension modulus coefficient needs " +
                                            std::to_string(e) + " digits");
            for (auto d : coeff)
                if (d >= p) throw std::invalid_argument("extension modulus digit out of range");
        }
        if (!fq.eq(h.back(), fq.one()))
            throw std::invalid_argument("extension modulus must be monic");
        if (!is_irreducible(fq, h))
            throw std::invalid_argument("extension modulus is reducible over F_q");
        T->ext_mod_ = h;
    } else {
        auto h = first_irreducible(fq, static_cast<int>(m));
        T->ext_mod_.assign(h.begin(), h.end());
    }

    T->ext_mod_packed_.reserve(m + 1);
    for (const auto& coeff : T->ext_mod_)
        T->ext_mod_packed_.push_back(static_cast<FE>(fq.to_code(coeff)));

    T->build_tables();
    return T;
}

}  // namespace grw
