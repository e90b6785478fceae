#pragma once

#include <cstdint>
#include <string>

#include "grw/code.hpp"

namespace grw {

enum class Family { Gabidulin, Repetition, Full, Coordinate, Random };

// Parsed form of a family descriptor string such as "gabidulin:n=4,k=2" or
// "random:n=3,k=2,seed=7".
struct CodeDescriptor {
    Family family;
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::uint64_t seed = 0;

    std::string to_string() const;
};

CodeDescriptor parse_descriptor(const std::string& text);

/// Generator rows (g_1^(q^(i-1)), ..., g_n^(q^(i-1))) for i = 1..k over the
/// evaluation points g_j = z^(j-1), which are F_q-independent. Requires
/// k <= n <= m. The maximum-distance property is asserted by tests, never
/// assumed here.
LinearCode gabidulin_code(TowerPtr tower, std::uint32_t n, std::uint32_t k);

/// Deterministic seeded [n, k] code: rows drawn from mt19937_64 reduced mod
/// the field order, redrawn whole while dependent, capped at 10^4 attempts.
LinearCode random_code(TowerPtr tower, std::uint32_t n, std::uint32_t k, std::uint64_t seed);

/// repetition = the all-ones line, full = F_{q^m}^n, coordinate = the span
/// of the first k unit vectors.
LinearCode named_code(TowerPtr tower, Family family, std::uint32_t n, std::uint32_t k);

/// Realizes any descriptor against a tower.
LinearCode code_from_descriptor(TowerPtr tower, const CodeDescriptor& d);

}  // namespace grw
