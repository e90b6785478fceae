#include "grw/weights.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace grw {

namespace {
void check_r(const LinearCode& C, std::uint32_t r) {
    if (r < 1 || r > C.k)
        throw std::invalid_argument("weight index r=" + std::to_string(r) +
                                    " outside 1.." + std::to_string(C.k));
}
}  // namespace

std::uint32_t meet_dim(const LinearCode& C, const Mat& V) {
    // dim(C) + dim(V) - dim(C + V)
    std::size_t joint = rank(*C.tower, stack(C.G, V));
    return static_cast<std::uint32_t>(C.k + V.rows - joint);
}

namespace {
// smallest invariant-space dimension >= start whose meet with C reaches r
WeightResult scan_gamma(const LinearCode& C, std::uint32_t r, std::uint32_t start,
                        std::uint64_t budget) {
    const FieldTower& T = *C.tower;
    for (std::uint32_t v = start; v <= C.n; ++v) {
        WeightResult found;
        bool hit = false;
        for_each_gamma_subspace(T, C.n, v, budget, [&](const GammaSubspace& G) {
            if (meet_dim(C, G.space) >= r) {
                found.value = v;
                found.witness = G;
                hit = true;
                return false;
            }
            return true;
        });
        if (hit) return found;
    }
    // dim(C ∩ F_{q^m}^n) = k >= r, so the full space always terminates the scan
    throw std::logic_error("invariant-space scan fell through");
}
}  // namespace

WeightResult grw_M(const LinearCode& C, std::uint32_t r, std::uint64_t budget) {
    check_r(C, r);
    // dim(C ∩ V) <= dim V rules out anything below r
    return scan_gamma(C, r, r, budget);
}

std::uint32_t grw_d(const LinearCode& C, std::uint32_t r, InnerMaxPath path,
                    std::uint64_t budget) {
    check_r(C, r);
    const FieldTower& T = *C.tower;
    if (path == InnerMaxPath::Auto)
        path = C.n <= T.m() ? InnerMaxPath::ClosureDim : InnerMaxPath::Enumerate;
    if (path == InnerMaxPath::ClosureDim && C.n > T.m())
        throw std::invalid_argument("closure-dimension shortcut needs n <= m");

    const std::uint32_t rank_cap = std::min(C.n, T.m());
    std::uint32_t best = C.n + 1;
    // r-dim subcodes of C = r-dim coefficient spaces applied to G
    for_each_subspace(T, T.order(), C.k, r, budget, [&](const Mat& coeffs) {
        Mat D = matmul(T, coeffs, C.G);
        std::uint32_t inner;
        if (path == InnerMaxPath::ClosureDim) {
            inner = star_closure_dim(T, D);
        } else {
            Mat S = star_closure_space(T, D);
            BigInt points = boost::multiprecision::pow(BigInt(T.order()), S.rows);
            if (points > budget) throw budget_exceeded(points);
            inner = 0;
            Vec cf(S.rows, 0);
            for (;;) {
                inner = std::max(inner, rank_weight(T, row_combine(T, S, cf)));
                if (inner == rank_cap) break;
                std::size_t i = 0;
                while (i < cf.size() && ++cf[i] == T.order()) cf[i++] = 0;
                if (i == cf.size()) break;
            }
        }
        best = std::min(best, inner);
        // the closure's dimension floors the fast path at r; the walk only
        // knows the universal floor 1
        std::uint32_t floor = path == InnerMaxPath::ClosureDim ? r : 1;
        return best > floor;
    });
    return best;
}

WeightHierarchy weight_hierarchy(const LinearCode& C, std::uint64_t budget) {
    WeightHierarchy H;
    std::uint32_t start = 1;
    for (std::uint32_t r = 1; r <= C.k; ++r) {
        WeightResult w = scan_gamma(C, r, std::max(r, start), budget);
        H.values.push_back(w.value);
        H.witnesses.push_back(std::move(w.witness));
        start = w.value + 1;
    }
    return H;
}

std::uint32_t ghw(const LinearCode& C, std::uint32_t r) {
    check_r(C, r);
    const FieldTower& T = *C.tower;
    // coordinate subsets by ascending size, lex within a size
    for (std::uint32_t s = r; s <= C.n; ++s) {
        std::vector<std::uint32_t> idx(s);
        for (std::uint32_t i = 0; i < s; ++i) idx[i] = i;
        for (;;) {
            Mat E(s, C.n);
            for (std::uint32_t i = 0; i < s; ++i) E.at(i, idx[i]) = 1;
            if (meet_dim(C, E) >= r) return s;
            std::int64_t i = s - 1;
            while (i >= 0 && idx[i] == C.n - s + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < s; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    throw std::logic_error("support scan fell through");  // s = n always meets
}

}  // namespace grw
