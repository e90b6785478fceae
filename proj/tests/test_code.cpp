#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "grw/code.hpp"
#include "oracles.hpp"

using namespace grw;

namespace {
Mat rows(const std::vector<Vec>& r) { return Mat::from_rows(r); }
}  // namespace

TEST_CASE("expansion lays out F_q coordinates row by row") {
    auto T = make_field(2, 1, 2);  // F_4, a = 2
    Mat E = expansion(*T, {1, 2});
    CHECK(E == rows({{1, 0}, {0, 1}}));
    CHECK(expansion(*T, {3, 0}) == rows({{1, 1}, {0, 0}}));

    // e = 2: digits of the packed code in base q
    auto T16 = make_field(2, 2, 2);
    CHECK(expansion(*T16, {7}) == rows({{3, 1}}));  // 7 = 3 + 1*4
}

TEST_CASE("rank weight equals the oracle span dimension everywhere") {
    for (auto [p, e, m, n] : {std::tuple{2u, 1u, 2u, 2u}, {2u, 1u, 3u, 2u},
                              {3u, 1u, 2u, 2u}, {2u, 2u, 2u, 1u}}) {
        auto T = make_field(p, e, m);
        std::uint64_t words = 1;
        for (std::uint32_t i = 0; i < n; ++i) words *= T->order();
        for (std::uint64_t t = 0; t < words; ++t) {
            Vec x(n);
            std::uint64_t rest = t;
            for (auto& xi : x) {
                xi = static_cast<FE>(rest % T->order());
                rest /= T->order();
            }
            std::uint32_t rw = rank_weight(*T, x);
            CHECK(rw == static_cast<std::uint32_t>(oracle::toy_rank_weight(*T, x)));
            CHECK(rw <= hamming_weight(x));  // rank never beats support
            CHECK(rw <= T->m());
        }
    }
}

TEST_CASE("make_code canonicalizes and validates") {
    auto T = make_field(2, 1, 2);
    auto C = make_code(T, rows({{2, 1}}));
    CHECK(C.G == rows({{1, 3}}));  // scaled by inv(a)
    CHECK(C.n == 2);
    CHECK(C.k == 1);
    CHECK(C == make_code(T, rows({{3, 2}})));  // the a-multiple, same line

    CHECK_THROWS_AS(make_code(T, rows({{1, 2}, {2, 3}})), std::invalid_argument);
    CHECK_THROWS_AS(make_code(T, rows({{0, 0}})), std::invalid_argument);
    CHECK_THROWS_AS(make_code(T, Mat(0, 2)), std::invalid_argument);
    CHECK_THROWS_AS(make_code(T, rows({{4, 0}})), std::invalid_argument);
    CHECK_THROWS_AS(make_code(nullptr, rows({{1}})), std::invalid_argument);
}

TEST_CASE("dual code") {
    auto T = make_field(2, 1, 2);
    auto C = make_code(T, rows({{1, 2}}));
    auto D = dual(C);
    CHECK(D.G == rows({{1, 3}}));
    CHECK(dual(D) == C);

    // exhaustive: every proper subcode of F_4^3 dualizes involutively
    for (std::uint32_t k = 1; k <= 2; ++k)
        for (const Mat& M : enumerate_subspaces(*T, 4, 3, k)) {
            auto X = make_code(T, M);
            auto Y = dual(X);
            CHECK(Y.k == 3 - k);
            for (std::size_t i = 0; i < X.G.rows; ++i)
                for (std::size_t j = 0; j < Y.G.rows; ++j)
                    CHECK(dot(*T, X.G.row(i), Y.G.row(j)) == 0);
            CHECK(dual(Y) == X);
        }

    auto full = make_code(T, Mat::identity(2));
    CHECK_THROWS_AS(dual(full), std::domain_error);
}

TEST_CASE("codeword walk covers the whole code once") {
    auto T = make_field(2, 1, 3);
    auto C = make_code(T, rows({{1, 0, 2}, {0, 1, 5}}));
    std::set<Vec> seen;
    for_each_codeword(C, kDefaultBudget, [&](const Vec& w) {
        CHECK(in_row_space(*T, C.G, w));
        seen.insert(w);
        return true;
    });
    CHECK(seen.size() == 64);  // 8^2
    CHECK(seen.count(Vec{0, 0, 0}) == 1);

    CHECK_THROWS_AS(for_each_codeword(C, 63, [](const Vec&) { return true; }),
                    budget_exceeded);
}

TEST_CASE("minimum distances of pinned examples") {
    auto T4 = make_field(2, 1, 2);
    auto C = make_code(T4, rows({{1, 2}}));
    CHECK(min_rank_distance(C) == 2);
    CHECK(min_hamming_distance(C) == 2);

    // repetition: full Hamming weight but rank weight 1
    auto T8 = make_field(2, 1, 3);
    auto rep = make_code(T8, rows({{1, 1, 1}}));
    CHECK(min_rank_distance(rep) == 1);
    CHECK(min_hamming_distance(rep) == 3);

    // a coordinate subspace word keeps rank below its support
    auto mixed = make_code(T8, rows({{1, 2, 4}}));  // 1, b, b^2 independent
    CHECK(min_rank_distance(mixed) == 3);

    // identity code: both distances 1
    auto id = make_code(T8, Mat::identity(3));
    CHECK(min_rank_distance(id) == 1);
    CHECK(min_hamming_distance(id) == 1);
}

TEST_CASE("rank distance is scaling invariant, checked against the oracle") {
    auto T = make_field(2, 1, 3);
    auto C = make_code(T, rows({{1, 0, 2}, {0, 1, 3}}));
    std::uint32_t best = 4;
    for_each_codeword(C, kDefaultBudget, [&](const Vec& w) {
        if (hamming_weight(w))
            best = std::min(best, static_cast<std::uint32_t>(oracle::toy_rank_weight(*T, w)));
        return true;
    });
    CHECK(min_rank_distance(C) == best);
}
