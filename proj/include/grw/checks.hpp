#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "grw/code.hpp"
#include "grw/weights.hpp"

namespace grw {

using Json = nlohmann::ordered_json;

// Pass and fail are contentful verdicts; skip marks a check whose hypothesis
// the inputs do not satisfy (or whose enumeration blew the budget), reported
// distinctly so vacuous truth never inflates a pass count.
enum class Verdict { Pass, Skip, Fail };

std::string to_string(Verdict v);

struct CheckReport {
    std::string check;
    Json params;   // enough to reconstruct the inputs bit for bit
    Verdict verdict = Verdict::Fail;
    Json detail;   // counterexample on fail, reason on skip, data otherwise
};

// Vector sampling policy for the closure/rank comparison.
struct SampleSpec {
    bool exhaustive = true;
    std::uint64_t seed = 0;
    std::uint32_t count = 0;  // ignored when exhaustive
};

struct CheckContext {
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t sample_seed = 0;
    std::uint32_t sample_count = 64;
};

// Exhaustive vector sampling is used when order^n stays at or below this;
// beyond it the closure/rank comparison falls back to seeded random vectors.
constexpr std::uint64_t kExhaustiveVectorLimit = 4096;

/// Stable list of check names, in canonical execution and report order.
const std::vector<std::string>& all_check_names();

/// M_r(C) == n - k + r, the r-th weight sitting on its upper bound.
bool is_r_mrd(const LinearCode& C, std::uint32_t r, std::uint64_t budget = kDefaultBudget);

/// dim(closure of the line through x) == rank weight of x, for every sampled
/// vector of F_{q^m}^n. Requires n <= m (throws std::invalid_argument).
CheckReport check_closure_rank(const TowerPtr& tower, std::uint32_t n, const SampleSpec& sample);

/// The orthogonal complement of every Frobenius-invariant subspace is again
/// Frobenius-invariant, over all dimensions 0..n.
CheckReport check_gamma_complement(const TowerPtr& tower, std::uint32_t n,
                                   std::uint64_t budget = kDefaultBudget);

/// 1 <= M_1 < M_2 < ... < M_k <= n.
CheckReport check_monotonicity(const LinearCode& C);

/// M_r <= n - k + r for every r; records which r sit on the bound.
CheckReport check_singleton(const LinearCode& C);

/// (q^{mr} - 1) M_{r-1} <= (q^{mr} - q^m) M_r for 1 < r <= k, in exact
/// big-integer arithmetic. Requires k >= 2 (throws std::invalid_argument).
CheckReport check_growth_inequality(const LinearCode& C);

/// {M_r(C)} and {n+1 - M_s(dual)} partition {1..n}: disjoint, union full.
/// With k == n the dual contributes nothing and the primal set must be all
/// of {1..n}.
CheckReport check_duality(const LinearCode& C);

/// For every r <= n-k and t = k + r - M_r(dual): M_t(C) <= n - M_r(dual)
/// whenever 1 <= t <= k, and M_s(C) != n - M_r(dual) + 1 for every s > t
/// up to k. Full codes have no admissible r and pass vacuously.
CheckReport check_dual_gap(const LinearCode& C);

/// C is r-MRD iff the dual's first weight is at least k - r + 2, for every
/// r; the right-hand side always uses M_1 of the dual. Whether the variant
/// with M_r of the dual also holds is recorded per r as data, never
/// asserted. Skips when k == n (no dual code).
CheckReport check_mrd_dual(const LinearCode& C, std::uint64_t budget = kDefaultBudget);

/// The subcode-closure minimum agrees with the invariant-space minimum for
/// every r. Skips when n > m, where only the invariant-space form is
/// defined as the weight.
CheckReport check_equivalence(const LinearCode& C, std::uint64_t budget = kDefaultBudget);

/// M_r <= r-th generalized Hamming weight <= n - k + r for every r.
CheckReport check_hamming_domination(const LinearCode& C);

/// Runs the named checks (all of them when names is empty) against one code,
/// in canonical order. Unknown names throw std::invalid_argument. Hypothesis
/// gates and blown budgets come back as skip verdicts with a reason.
std::vector<CheckReport> run_checks(const LinearCode& C, const std::vector<std::string>& names,
                                    const CheckContext& ctx = {});

Json report_to_json(const CheckReport& r);

/// "P passed / S skipped / F failed".
std::string summary_line(const std::vector<CheckReport>& reports);

}  // namespace grw
