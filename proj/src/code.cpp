#include "grw/code.hpp"

#include <stdexcept>
#include <string>

namespace grw {

LinearCode make_code(TowerPtr tower, const Mat& generator) {
    if (!tower) throw std::invalid_argument("code needs a field");
    if (generator.rows == 0 || generator.cols == 0)
        throw std::invalid_argument("generator matrix must be nonempty");
    for (FE v : generator.a)
        if (v >= tower->order())
            throw std::invalid_argument("generator entry " + std::to_string(v) +
                                        " is no element of the field");
    Mat G = rref(*tower, generator);
    if (G.rows != generator.rows)
        throw std::invalid_argument("generator matrix has dependent rows");
    LinearCode C;
    C.n = static_cast<std::uint32_t>(G.cols);
    C.k = static_cast<std::uint32_t>(G.rows);
    C.tower = std::move(tower);
    C.G = std::move(G);
    return C;
}

LinearCode dual(const LinearCode& C) {
    if (C.k == C.n)
        throw std::domain_error("dual of the full code is the zero code");
    return make_code(C.tower, kernel(*C.tower, C.G));
}

Mat expansion(const FieldTower& T, const Vec& x) {
    Mat M(x.size(), T.m());
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::uint64_t rest = x[i];
        for (std::uint32_t j = 0; j < T.m(); ++j) {
            M.at(i, j) = static_cast<FE>(rest % T.q());
            rest /= T.q();
        }
    }
    return M;
}

std::uint32_t rank_weight(const FieldTower& T, const Vec& x) {
    return static_cast<std::uint32_t>(rank(T, expansion(T, x)));
}

std::uint32_t hamming_weight(const Vec& x) {
    std::uint32_t w = 0;
    for (FE v : x)
        if (v != 0) ++w;
    return w;
}

void for_each_codeword(const LinearCode& C, std::uint64_t budget,
                       const std::function<bool(const Vec&)>& visit) {
    const FieldTower& T = *C.tower;
    BigInt total = boost::multiprecision::pow(BigInt(T.order()), C.k);
    if (total > budget) throw budget_exceeded(total);

    Vec coeffs(C.k, 0);
    for (;;) {
        if (!visit(row_combine(T, C.G, coeffs))) return;
        std::size_t i = 0;
        while (i < coeffs.size() && ++coeffs[i] == T.order()) coeffs[i++] = 0;
        if (i == coeffs.size()) return;
    }
}

std::uint32_t min_rank_distance(const LinearCode& C, std::uint64_t budget) {
    std::uint32_t best = C.n + 1;
    for_each_codeword(C, budget, [&](const Vec& w) {
        if (hamming_weight(w) != 0)
            best = std::min(best, rank_weight(*C.tower, w));
        return best > 1;  // 1 is the floor, stop early
    });
    return best;
}

std::uint32_t min_hamming_distance(const LinearCode& C, std::uint64_t budget) {
    std::uint32_t best = C.n + 1;
    for_each_codeword(C, budget, [&](const Vec& w) {
        std::uint32_t hw = hamming_weight(w);
        if (hw != 0) best = std::min(best, hw);
        return best > 1;
    });
    return best;
}

}  // namespace grw
