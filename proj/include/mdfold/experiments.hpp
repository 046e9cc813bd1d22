#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mdfold/folding.hpp"

namespace mdfold {

/// Every upper-triangular Hermite basis of the given dimension and volume:
/// positive diagonal, entries above each pivot in [0, pivot).
std::vector<Lattice> hermite_lattices(std::size_t dim, Coord volume);

/// Random full-rank basis with entries in [-max_entry, max_entry] and
/// 1 <= volume <= max_volume, by rejection.
Lattice random_lattice(std::mt19937_64& rng, std::size_t dim, Coord max_volume, Coord max_entry = 6);

struct RowSearchResult {
    Coord max_volume = 0;
    std::size_t lattices_checked = 0;
    /// Lattices (smallest volume first) whose tiles have (3^D - 1) / 2
    /// distinct folded-rows.
    std::vector<Lattice> complete;
};

/// Exhaustive search over Hermite bases of volume <= max_volume. Stops after
/// the first volume that yields a complete lattice when stop_at_first.
RowSearchResult search_complete_folding_lattices(std::size_t dim, Coord max_volume, bool stop_at_first = false);

struct EquivalenceStats {
    std::size_t lattices = 0;
    std::size_t cases = 0;
    std::size_t agreements = 0;
    std::size_t foldings = 0;
};

/// Compares is_folding (and is_folding_2d in the plane) with the walk on
/// random lattices tiling their fundamental box, over all canonical
/// directions.
EquivalenceStats predicate_equivalence(std::size_t dim, std::size_t lattices, Coord max_volume, std::uint64_t seed);

}  // namespace mdfold
