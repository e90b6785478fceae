#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grw/checks.hpp"
#include "grw/zoo.hpp"

using namespace grw;

namespace {

Mat rows(const std::vector<Vec>& r) { return Mat::from_rows(r); }

LinearCode line(TowerPtr T, const Vec& v) { return make_code(T, rows({v})); }

}  // namespace

TEST_CASE("check name registry") {
    const auto& names = all_check_names();
    CHECK(names.size() == 10);
    CHECK(names.front() == "closure_rank");
    CHECK(names.back() == "hamming_domination");
    auto T = make_field(2, 1, 2);
    CHECK_THROWS_AS(run_checks(line(T, {1, 2}), {"florp"}, {}), std::invalid_argument);
}

TEST_CASE("closure dimension equals rank weight") {
    auto T4 = make_field(2, 1, 2);
    auto rep = check_closure_rank(T4, 2, SampleSpec{});
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(rep.detail["vectors_checked"] == 16);

    auto T8 = make_field(2, 1, 3);
    rep = check_closure_rank(T8, 3, SampleSpec{});
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(rep.detail["vectors_checked"] == 512);

    auto T16 = make_field(2, 1, 4);
    rep = check_closure_rank(T16, 4, SampleSpec{false, 1, 32});
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(rep.detail["vectors_checked"] == 32);
    CHECK(rep.params["sample"]["mode"] == "random");

    // over-large exhaustive request degrades to a skip, not a stall
    rep = check_closure_rank(T16, 4, SampleSpec{});
    CHECK(rep.verdict == Verdict::Skip);

    CHECK_THROWS_AS(check_closure_rank(T4, 3, SampleSpec{}), std::invalid_argument);
}

TEST_CASE("invariant-space complements stay invariant") {
    auto rep = check_gamma_complement(make_field(2, 1, 2), 2);
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(rep.detail["spaces_checked"] == 5);  // 1 + 3 + 1 over F_2

    rep = check_gamma_complement(make_field(3, 1, 2), 2);
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(rep.detail["spaces_checked"] == 6);  // 1 + 4 + 1 over F_3

    rep = check_gamma_complement(make_field(2, 1, 3), 3);
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(rep.detail["spaces_checked"] == 16);  // 1 + 7 + 7 + 1
}

TEST_CASE("monotonicity instances") {
    auto T4 = make_field(2, 1, 2);
    auto rep = check_monotonicity(named_code(T4, Family::Full, 2, 2));
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(rep.detail["hierarchy"] == Json({1, 2}));

    auto T16 = make_field(2, 1, 4);
    rep = check_monotonicity(gabidulin_code(T16, 4, 2));
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(rep.detail["hierarchy"] == Json({3, 4}));

    rep = check_monotonicity(line(T4, {1, 2}));
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(rep.detail["hierarchy"] == Json({2}));
}

TEST_CASE("growth inequality instances") {
    auto T4 = make_field(2, 1, 2);
    auto rep = check_growth_inequality(named_code(T4, Family::Full, 2, 2));
    CHECK(rep.verdict == Verdict::Pass);
    // (16-1)*1 = 15 <= (16-4)*2 = 24 at r=2

    auto T16 = make_field(2, 1, 4);
    rep = check_growth_inequality(gabidulin_code(T16, 4, 2));
    CHECK(rep.verdict == Verdict::Pass);
    // (256-1)*3 = 765 <= (256-16)*4 = 960 at r=2

    CHECK_THROWS_AS(check_growth_inequality(line(T4, {1, 2})), std::invalid_argument);
}

TEST_CASE("distance bound and the codes sitting on it") {
    auto T4 = make_field(2, 1, 2);
    auto rep = check_singleton(named_code(T4, Family::Full, 2, 2));
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(rep.detail["r_mrd"] == Json({1, 2}));

    rep = check_singleton(line(T4, {1, 1}));
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(rep.detail["r_mrd"] == Json::array());

    rep = check_singleton(line(T4, {1, 2}));
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(rep.detail["r_mrd"] == Json({1}));

    CHECK(is_r_mrd(line(T4, {1, 2}), 1));
    CHECK_FALSE(is_r_mrd(line(T4, {1, 1}), 1));
}

TEST_CASE("hierarchy duality partition") {
    auto T4 = make_field(2, 1, 2);
    auto rep = check_duality(line(T4, {1, 2}));
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(rep.detail["primal"] == Json({2}));
    CHECK(rep.detail["dual"] == Json({2}));

    rep = check_duality(named_code(T4, Family::Full, 2, 2));
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(rep.detail["dual"] == Json::array());

    rep = check_duality(line(T4, {1, 0}));
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(rep.detail["primal"] == Json({1}));
    CHECK(rep.detail["dual"] == Json({1}));
}

TEST_CASE("dual gap instances") {
    auto T4 = make_field(2, 1, 2);
    auto rep = check_dual_gap(line(T4, {1, 2}));
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(rep.detail["per_r"][0]["t"] == 0);
    CHECK(rep.detail["per_r"][0]["part1"] == "vacuous");
    CHECK(rep.detail["per_r"][0]["part2_values_checked"] == 1);

    rep = check_dual_gap(line(T4, {1, 0}));
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(rep.detail["per_r"][0]["t"] == 1);
    CHECK(rep.detail["per_r"][0]["part1"] == "checked");

    rep = check_dual_gap(named_code(T4, Family::Full, 2, 2));
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(rep.detail.contains("note"));
}

TEST_CASE("bound attainment against the dual's first weight") {
    auto T4 = make_field(2, 1, 2);
    auto rep = check_mrd_dual(line(T4, {1, 2}));
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(rep.detail["dual_first_weight"] == 2);
    CHECK(rep.detail["per_r"][0]["is_mrd"] == true);
    CHECK(rep.detail["per_r"][0]["variant_r_holds"] == true);
    CHECK(rep.detail["rationale"].is_string());

    rep = check_mrd_dual(line(T4, {1, 1}));
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(rep.detail["dual_first_weight"] == 1);
    CHECK(rep.detail["per_r"][0]["is_mrd"] == false);

    auto T16 = make_field(2, 1, 4);
    rep = check_mrd_dual(gabidulin_code(T16, 4, 2));
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(rep.detail["dual_first_weight"] == 3);

    rep = check_mrd_dual(named_code(T4, Family::Full, 2, 2));
    CHECK(rep.verdict == Verdict::Skip);
}

TEST_CASE("the two weight definitions coincide where tied") {
    auto T4 = make_field(2, 1, 2);
    auto rep = check_equivalence(line(T4, {1, 2}));
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(rep.detail["per_r"][0]["value"] == 2);

    auto T8 = make_field(2, 1, 3);
    rep = check_equivalence(named_code(T8, Family::Full, 3, 3));
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(rep.detail["per_r"][2]["value"] == 3);

    rep = check_equivalence(named_code(T4, Family::Coordinate, 3, 2));
    CHECK(rep.verdict == Verdict::Skip);  // n = 3 > m = 2
}

TEST_CASE("rank weights sit below Hamming weights") {
    auto T8 = make_field(2, 1, 3);
    auto rep = check_hamming_domination(named_code(T8, Family::Repetition, 3, 1));
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(rep.detail["rank"] == Json({1}));
    CHECK(rep.detail["hamming"] == Json({3}));

    auto T4 = make_field(2, 1, 2);
    rep = check_hamming_domination(gabidulin_code(T4, 2, 1));
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(rep.detail["hamming"] == Json({2}));
}

TEST_CASE("run_checks dispatch, gating and serialization") {
    auto T4 = make_field(2, 1, 2);
    auto C = gabidulin_code(T4, 2, 1);
    auto reps = run_checks(C, {}, {});
    REQUIRE(reps.size() == 10);
    for (std::size_t i = 0; i < reps.size(); ++i) {
        CHECK(reps[i].check == all_check_names()[i]);
        CHECK(reps[i].verdict != Verdict::Fail);
    }
    // k = 1: the growth ratio needs two weights
    CHECK(reps[4].check == "growth_inequality");
    CHECK(reps[4].verdict == Verdict::Skip);

    auto pair = run_checks(C, {"duality", "monotonicity"}, {});
    REQUIRE(pair.size() == 2);
    CHECK(pair[0].check == "monotonicity");  // canonical order, not request order
    CHECK(pair[1].check == "duality");
    CHECK(summary_line(pair) == "2 passed / 0 skipped / 0 failed");

    auto j = report_to_json(pair[1]);
    CHECK(j["check"] == "duality");
    CHECK(j["verdict"] == "pass");
    CHECK(j["params"]["generator"] == Json({{1, 2}}));

    // n > m gates both vector-level checks
    auto C32 = named_code(T4, Family::Coordinate, 3, 2);
    auto gated = run_checks(C32, {"closure_rank", "equivalence"}, {});
    REQUIRE(gated.size() == 2);
    CHECK(gated[0].verdict == Verdict::Skip);
    CHECK(gated[1].verdict == Verdict::Skip);
    CHECK(gated[0].detail["reason"].is_string());

    // a starved budget surfaces as skip with the exact required count
    CheckContext tight;
    tight.budget = 1;
    auto starved = run_checks(C32, {"gamma_complement"}, tight);
    CHECK(starved[0].verdict == Verdict::Skip);
    CHECK(starved[0].detail["required"] == "7");  // first dim over budget: [3,1]_2
}

TEST_CASE("every check clears the exhaustive small-shape census") {
    // all codes with q=2, m in {2,3}, n in {2,3}, n <= m+1, 1 <= k <= n
    std::size_t codes = 0, fails = 0, passes = 0, skips = 0;
    for (std::uint32_t m : {2u, 3u}) {
        auto T = make_field(2, 1, m);
        for (std::uint32_t n : {2u, 3u}) {
            if (n > m + 1) continue;
            for (std::uint32_t k = 1; k <= n; ++k) {
                for_each_subspace(*T, T->order(), n, k, kDefaultBudget, [&](const Mat& G) {
                    ++codes;
                    for (const auto& rep : run_checks(make_code(T, G), {}, {})) {
                        if (rep.verdict == Verdict::Fail) {
                            ++fails;
                            MESSAGE(report_to_json(rep).dump());
                        } else if (rep.verdict == Verdict::Pass) {
                            ++passes;
                        } else {
                            ++skips;
                        }
                    }
                    return true;
                });
            }
        }
    }
    CHECK(codes == 206);  // 6 + 43 + 10 + 147
    CHECK(fails == 0);
    CHECK(passes + skips == codes * 10);
    CHECK(passes > codes * 7);  // gates stay the exception, not the rule
}
