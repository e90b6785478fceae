#include "grw/galois.hpp"

#include <stdexcept>

#include "grw/code.hpp"

namespace grw {

Vec frobenius_vec(const FieldTower& T, const Vec& x, std::uint32_t j) {
    Vec y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = T.frobenius(x[i], j);
    return y;
}

Mat frob_subspace(const FieldTower& T, const Mat& V, std::uint32_t j) {
    Mat F(V.rows, V.cols);
    for (std::size_t i = 0; i < V.a.size(); ++i) F.a[i] = T.frobenius(V.a[i], j);
    return rref(T, F);
}

bool is_frobenius_invariant(const FieldTower& T, const Mat& V) {
    return frob_subspace(T, V, 1) == rref(T, V);
}

namespace {
Mat stacked_frobenius_orbit(const FieldTower& T, const Mat& V) {
    Mat S = rref(T, V);
    Mat all(0, S.cols);
    for (std::uint32_t j = 0; j < T.m(); ++j) {
        Mat F(S.rows, S.cols);
        for (std::size_t i = 0; i < S.a.size(); ++i) F.a[i] = T.frobenius(S.a[i], j);
        all = stack(all, F);
    }
    return all;
}
}  // namespace

Mat star_closure_space(const FieldTower& T, const Mat& V) {
    return rref(T, stacked_frobenius_orbit(T, V));
}

std::uint32_t star_closure_dim(const FieldTower& T, const Mat& V) {
    return static_cast<std::uint32_t>(rank(T, stacked_frobenius_orbit(T, V)));
}

GammaSubspace star_closure(const FieldTower& T, const Mat& V) {
    GammaSubspace G;
    G.space = star_closure_space(T, V);
    G.rational_basis = fq_rational_basis(T, G.space);
    return G;
}

Mat fq_rational_basis(const FieldTower& T, const Mat& V) {
    if (!is_frobenius_invariant(T, V))
        throw std::invalid_argument("subspace is not Frobenius-invariant");
    Mat B = rref(T, V);
    const std::uint32_t v = static_cast<std::uint32_t>(B.rows);
    const std::uint32_t n = static_cast<std::uint32_t>(B.cols);
    const std::uint32_t m = T.m();
    if (v == 0) return Mat(0, n);

    // Unknowns: the F_q-coordinates a_(l,t) of the combination
    // x = sum_(l,t) a_(l,t) z^t B_l. Constraints: every z-coordinate of x
    // above the constant one vanishes. Row (l,t) of A holds those
    // coordinates of z^t B_l.
    Mat A(std::size_t(v) * m, std::size_t(n) * (m - 1));
    std::vector<Vec> direction(std::size_t(v) * m);
    for (std::uint32_t l = 0; l < v; ++l)
        for (std::uint32_t t = 0; t < m; ++t) {
            FE zt = t == 0 ? FE(1) : T.pow(static_cast<FE>(T.q()), t);
            Vec w(n);
            for (std::uint32_t i = 0; i < n; ++i) w[i] = T.mul(zt, B.at(l, i));
            direction[l * m + t] = w;
            Mat E = expansion(T, w);
            for (std::uint32_t i = 0; i < n; ++i)
                for (std::uint32_t j = 1; j < m; ++j)
                    A.at(l * m + t, std::size_t(i) * (m - 1) + (j - 1)) = E.at(i, j);
        }

    Mat sols = kernel(T, transpose(A));
    Mat R(sols.rows, n);
    for (std::size_t s = 0; s < sols.rows; ++s) {
        Vec x(n, 0);
        for (std::size_t d = 0; d < direction.size(); ++d) {
            FE c = sols.at(s, d);
            if (c == 0) continue;
            for (std::uint32_t i = 0; i < n; ++i)
                x[i] = T.add(x[i], T.mul(c, direction[d][i]));
        }
        R.set_row(s, x);
    }
    R = rref(T, R);
    if (R.rows != v)
        throw std::logic_error("rational point space has the wrong dimension");
    for (FE entry : R.a)
        if (entry >= T.q())
            throw std::logic_error("rational basis left the base field");
    return R;
}

GammaSubspace extend_scalars(const FieldTower& T, const Mat& W) {
    for (FE entry : W.a)
        if (entry >= T.q())
            throw std::invalid_argument("base-level matrix has entries outside F_q");
    GammaSubspace G;
    // a base-canonical matrix is also ext-canonical, and extending scalars
    // preserves independence, so one echelon pass serves both presentations
    G.rational_basis = rref(T, W);
    G.space = G.rational_basis;
    return G;
}

void for_each_gamma_subspace(const FieldTower& T, std::uint32_t n, std::uint32_t dim,
                             std::uint64_t budget,
                             const std::function<bool(const GammaSubspace&)>& visit) {
    for_each_subspace(T, T.q(), n, dim, budget, [&](const Mat& W) {
        GammaSubspace G;
        G.rational_basis = W;
        G.space = W;
        return visit(G);
    });
}

std::vector<GammaSubspace> enumerate_gamma_subspaces(const FieldTower& T, std::uint32_t n,
                                                     std::uint32_t dim, std::uint64_t budget) {
    std::vector<GammaSubspace> out;
    for_each_gamma_subspace(T, n, dim, budget, [&](const GammaSubspace& G) {
        out.push_back(G);
        return true;
    });
    return out;
}

Vec find_cyclic_generator(const FieldTower& T, const GammaSubspace& V) {
    const std::uint32_t l = V.dim();
    if (l > T.m())
        throw std::invalid_argument("no single vector can span " + std::to_string(l) +
                                    " Frobenius shifts over m=" + std::to_string(T.m()));
    const std::uint32_t n = static_cast<std::uint32_t>(V.space.cols);
    // coefficients 1, z, ..., z^(l-1): F_q-independent, so the Moore matrix
    // of the combination is nonsingular and the shifts span V
    Vec x(n, 0);
    for (std::uint32_t i = 0; i < l; ++i) {
        FE zi = i == 0 ? FE(1) : T.pow(static_cast<FE>(T.q()), i);
        for (std::uint32_t c = 0; c < n; ++c)
            x[c] = T.add(x[c], T.mul(zi, V.rational_basis.at(i, c)));
    }
    Mat shifts(l, n);
    for (std::uint32_t j = 0; j < l; ++j)
        shifts.set_row(j, frobenius_vec(T, x, j));
    if (rref(T, shifts) != rref(T, V.space))
        throw std::logic_error("cyclic generator postcondition failed");
    return x;
}

}  // namespace grw
