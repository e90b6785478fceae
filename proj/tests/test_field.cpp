#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "grw/field.hpp"
#include "oracles.hpp"

using grw::FE;
using grw::make_field;

TEST_CASE("default moduli are the first irreducibles in ascending code order") {
    // over F_2 the only irreducible quadratic is y^2+y+1
    auto f4 = make_field(2, 2, 1);
    CHECK(f4->base_modulus() == std::vector<std::uint32_t>{1, 1, 1});

    // cubics over F_2 in ascending order: z^3, z^3+1, z^3+z all split,
    // z^3+z+1 is the first irreducible
    auto f8 = make_field(2, 1, 3);
    CHECK(f8->ext_modulus() ==
          std::vector<std::vector<std::uint32_t>>{{1}, {1}, {0}, {1}});

    // over F_3: z^2 splits, z^2+1 has no root
    auto f9 = make_field(3, 1, 2);
    CHECK(f9->ext_modulus() ==
          std::vector<std::vector<std::uint32_t>>{{1}, {0}, {1}});

    // over F_4 = F_2(a): z^2+c is a square for every c, z^2+z and z^2+z+1
    // have roots, z^2+z+a is the first with none
    auto f16 = make_field(2, 2, 2);
    CHECK(f16->base_modulus() == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(f16->ext_modulus() ==
          std::vector<std::vector<std::uint32_t>>{{0, 1}, {1, 0}, {1, 0}});
}

TEST_CASE("default moduli are irreducible per the product-enumeration oracle") {
    for (auto [p, e, m] : {std::tuple{2u, 1u, 3u}, {2u, 2u, 2u}, {3u, 1u, 2u},
                           {2u, 1u, 4u}, {3u, 2u, 1u}, {5u, 1u, 2u}}) {
        auto T = make_field(p, e, m);
        auto toy = oracle::mirror(*T);
        // base modulus over F_p
        oracle::ToyField fp{static_cast<int>(p), {0, 1}};
        std::vector<long long> g(T->base_modulus().begin(), T->base_modulus().end());
        CHECK(!oracle::toy_splits(fp, g));
        // extension modulus over F_q
        CHECK(!oracle::toy_splits(toy.base, toy.ext_mod));
    }
}

TEST_CASE("arithmetic in F_4") {
    auto T = make_field(2, 1, 2);  // a = code 2, a^2 = a+1
    CHECK(T->mul(2, 2) == 3);
    CHECK(T->mul(2, 3) == 1);
    CHECK(T->inv(2) == 3);
    CHECK(T->inv(3) == 2);
    CHECK(T->add(2, 3) == 1);
    CHECK(T->frobenius(2) == 3);
    CHECK(T->frobenius(3) == 2);
    CHECK_THROWS_AS(T->inv(0), std::domain_error);
}

TEST_CASE("arithmetic in F_8") {
    auto T = make_field(2, 1, 3);  // b = code 2, b^3 = b+1
    CHECK(T->pow(2, 3) == 3);
    CHECK(T->pow(2, 7) == 1);
    CHECK(T->inv(2) == 5);  // b * (b^2+1) = 1
    CHECK(T->mul(2, 5) == 1);
}

TEST_CASE("arithmetic in F_9") {
    auto T = make_field(3, 1, 2);  // z^2 = -1
    CHECK(T->mul(3, 3) == 2);
    CHECK(T->inv(3) == 6);  // z * 2z = 2 z^2 = 1
    CHECK(T->add(1, 2) == 0);
    CHECK(T->neg(1) == 2);
    CHECK(T->neg(0) == 0);
}

TEST_CASE("every operation matches the schoolbook oracle") {
    for (auto [p, e, m] : {std::tuple{2u, 1u, 3u}, {2u, 2u, 2u}, {3u, 1u, 2u},
                           {2u, 1u, 4u}, {5u, 1u, 1u}}) {
        auto T = make_field(p, e, m);
        auto toy = oracle::mirror(*T);
        REQUIRE(T->order() == static_cast<std::uint64_t>(toy.order()));
        for (FE a = 0; a < T->order(); ++a) {
            for (FE b = 0; b < T->order(); ++b) {
                CHECK(T->add(a, b) == toy.add(a, b));
                CHECK(T->mul(a, b) == toy.mul(a, b));
            }
            if (a != 0) CHECK(T->inv(a) == toy.inv(a));
            CHECK(T->frobenius(a) == toy.frob(a));
        }
    }
}

TEST_CASE("field axioms hold exhaustively in F_16 over F_4") {
    auto T = make_field(2, 2, 2);
    const FE n = static_cast<FE>(T->order());
    for (FE a = 0; a < n; ++a) {
        CHECK(T->add(a, 0) == a);
        CHECK(T->mul(a, 1) == a);
        CHECK(T->add(a, T->neg(a)) == 0);
        if (a != 0) CHECK(T->mul(a, T->inv(a)) == 1);
        for (FE b = 0; b < n; ++b) {
            CHECK(T->add(a, b) == T->add(b, a));
            CHECK(T->mul(a, b) == T->mul(b, a));
            for (FE c = 0; c < n; ++c) {
                CHECK(T->add(T->add(a, b), c) == T->add(a, T->add(b, c)));
                CHECK(T->mul(T->mul(a, b), c) == T->mul(a, T->mul(b, c)));
                CHECK(T->mul(a, T->add(b, c)) == T->add(T->mul(a, b), T->mul(a, c)));
            }
        }
    }
}

TEST_CASE("frobenius is a field automorphism fixing exactly F_q") {
    for (auto [p, e, m] : {std::tuple{2u, 2u, 2u}, {3u, 1u, 2u}, {2u, 1u, 3u}}) {
        auto T = make_field(p, e, m);
        std::set<FE> fixed;
        for (FE a = 0; a < T->order(); ++a) {
            for (FE b = 0; b < T->order(); ++b) {
                CHECK(T->frobenius(T->add(a, b)) == T->add(T->frobenius(a), T->frobenius(b)));
                CHECK(T->frobenius(T->mul(a, b)) == T->mul(T->frobenius(a), T->frobenius(b)));
            }
            CHECK(T->frobenius(a, T->m()) == a);
            // iterating one step j times agrees with the j-step form
            FE it = a;
            for (std::uint32_t j = 0; j < T->m(); ++j) {
                CHECK(T->frobenius(a, j) == it);
                it = T->frobenius(it);
            }
            if (T->is_base_rational(a)) fixed.insert(a);
        }
        CHECK(fixed.size() == T->q());
        // the embedded subfield is exactly the codes below q
        for (FE a = 0; a < T->q(); ++a) CHECK(fixed.count(a) == 1);
    }
}

TEST_CASE("coefficient serialization round-trips and validates") {
    auto T = make_field(2, 2, 2);
    for (FE a = 0; a < T->order(); ++a) {
        auto c = T->to_coeffs(a);
        REQUIRE(c.size() == 2);
        REQUIRE(c[0].size() == 2);
        CHECK(T->from_coeffs(c) == a);
    }
    // code 6 = digits (0,1,1,0) = a + z
    CHECK(T->to_coeffs(6) ==
          std::vector<std::vector<std::uint32_t>>{{0, 1}, {1, 0}});

    CHECK_THROWS_AS(T->from_coeffs({{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(T->from_coeffs({{0, 1}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(T->from_coeffs({{0, 2}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("make_field rejects bad towers") {
    CHECK_THROWS_AS(make_field(4, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_field(1, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_field(2, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_field(2, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_field(2, 1, 32), std::invalid_argument);  // 2^32 > 2^31

    // y^2+1 = (y+1)^2 over F_2
    std::vector<std::uint32_t> sq{1, 0, 1};
    CHECK_THROWS_AS(make_field(2, 2, 1, &sq), std::invalid_argument);
    // not monic
    std::vector<std::uint32_t> nm{1, 1, 2};
    CHECK_THROWS_AS(make_field(3, 2, 1, &nm), std::invalid_argument);
    // z^2+1 = (z+1)^2 over F_2 as extension modulus
    std::vector<std::vector<std::uint32_t>> esq{{1}, {0}, {1}};
    CHECK_THROWS_AS(make_field(2, 1, 2, nullptr, &esq), std::invalid_argument);
    // wrong coefficient width
    std::vector<std::vector<std::uint32_t>> wide{{1, 0}, {1, 0}, {1, 0}};
    CHECK_THROWS_AS(make_field(2, 1, 2, nullptr, &wide), std::invalid_argument);
}

TEST_CASE("explicit moduli are honored and same_structure compares them") {
    std::vector<std::vector<std::uint32_t>> alt{{1}, {0}, {1}, {1}};  // z^3+z^2+1
    auto a = make_field(2, 1, 3);
    auto b = make_field(2, 1, 3, nullptr, &alt);
    auto c = make_field(2, 1, 3);
    CHECK(b->ext_modulus() == alt);
    CHECK(a->same_structure(*c));
    CHECK(!a->same_structure(*b));
    CHECK(!a->same_structure(*make_field(2, 3, 1)));

    // both presentations of F_8 satisfy their own modulus
    // z^3+z^2+1 = 0 means z^3 = z^2+1, i.e. pow(2,3) == 5
    CHECK(b->pow(2, 3) == 5);
    CHECK(a->pow(2, 3) == 3);
}

TEST_CASE("large table-free tower still computes correctly") {
    auto T = make_field(2, 2, 4);  // F_256 over F_4, within table range
    auto big = make_field(2, 2, 8);  // F_65536 over F_4, dense path
    // the embedded F_4 behaves identically in both
    for (FE a = 0; a < 4; ++a)
        for (FE b = 0; b < 4; ++b)
            CHECK(T->mul(a, b) == big->mul(a, b));
    // spot inverse and Frobenius fixed field on the dense path
    for (FE a : {FE(1), FE(5), FE(123), FE(40000)})
        CHECK(big->mul(a, big->inv(a)) == 1);
    std::uint32_t fixed = 0;
    for (FE a = 0; a < 4096; ++a)
        if (big->is_base_rational(a)) ++fixed;
    CHECK(fixed == 4);  // only codes < 4 among the first 4096
}
