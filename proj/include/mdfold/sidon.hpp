#pragma once

#include <cstdint>
#include <vector>

#include "mdfold/finite_field.hpp"

namespace mdfold {

/// Sorted residues mod n with pairwise distinct differences.
struct B2Sequence {
    std::uint64_t n = 0;
    std::vector<std::uint64_t> elements;
};

/// All ordered differences a_i - a_j (i != j) distinct mod n. Throws on
/// duplicates or residues outside [0, n).
bool verify_b2(std::uint64_t n, const std::vector<std::uint64_t>& elements);

/// All sums a_i + a_j (i <= j) distinct mod n. Same preconditions.
bool verify_b2_sums(std::uint64_t n, const std::vector<std::uint64_t>& elements);

/// Bose construction: q residues mod q^2 - 1, taken as discrete logs of
/// theta + a for a in the subfield GF(q) of GF(q^2), theta the generator.
B2Sequence bose(std::uint64_t q);
/// Same, over an explicitly constructed GF(q^2).
B2Sequence bose(const Field& extension);

/// q = p^k with p prime; returns {p, k} or throws.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q);

}  // namespace mdfold
