#include "mdfold/experiments.hpp"

#include <stdexcept>

namespace mdfold {

namespace {

void divisor_chains(std::size_t dim, Coord volume, std::vector<Coord>& diag, std::vector<std::vector<Coord>>& out) {
    if (diag.size() + 1 == dim) {
        diag.push_back(volume);
        out.push_back(diag);
        diag.pop_back();
        return;
    }
    for (Coord d = 1; d <= volume; ++d) {
        if (volume % d) continue;
        diag.push_back(d);
        divisor_chains(dim, volume / d, diag, out);
        diag.pop_back();
    }
}

std::size_t full_count(std::size_t dim) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < dim; ++i) n *= 3;
    return (n - 1) / 2;
}

}  // namespace

std::vector<Lattice> hermite_lattices(std::size_t dim, Coord volume) {
    if (dim == 0 || dim > kMaxDim) throw std::invalid_argument("dimension must be in [1, 8]");
    if (volume < 1) throw std::invalid_argument("volume must be positive");
    std::vector<std::vector<Coord>> diagonals;
    std::vector<Coord> scratch;
    divisor_chains(dim, volume, scratch, diagonals);

    std::vector<Lattice> out;
    for (const auto& diag : diagonals) {
        // Free entries: (i, j) with i < j, each ranging over [0, diag[j]).
        std::vector<std::pair<std::size_t, std::size_t>> cells;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = i + 1; j < dim; ++j) cells.emplace_back(i, j);
        IntMatrix basis(dim, std::vector<Coord>(dim, 0));
        for (std::size_t i = 0; i < dim; ++i) basis[i][i] = diag[i];
        while (true) {
            out.emplace_back(basis);
            std::size_t c = 0;
            for (; c < cells.size(); ++c) {
                auto& v = basis[cells[c].first][cells[c].second];
                if (++v < diag[cells[c].second]) break;
                v = 0;
            }
            if (c == cells.size()) break;
        }
    }
    return out;
}

Lattice random_lattice(std::mt19937_64& rng, std::size_t dim, Coord max_volume, Coord max_entry) {
    std::uniform_int_distribution<Coord> entry(-max_entry, max_entry);
    while (true) {
        IntMatrix basis(dim, std::vector<Coord>(dim));
        for (auto& row : basis)
            for (auto& x : row) x = entry(rng);
        const Coord det = determinant(basis);
        if (det != 0 && det <= max_volume && det >= -max_volume) return Lattice(std::move(basis));
    }
}

RowSearchResult search_complete_folding_lattices(std::size_t dim, Coord max_volume, bool stop_at_first) {
    RowSearchResult result;
    result.max_volume = max_volume;
    const std::size_t target = full_count(dim);
    for (Coord v = 1; v <= max_volume; ++v) {
        for (auto& lattice : hermite_lattices(dim, v)) {
            ++result.lattices_checked;
            // Cheap necessary condition first: every direction must fold.
            bool all_fold = true;
            for (const auto& d : Direction::all(dim)) {
                if (!is_folding(lattice, d)) {
                    all_fold = false;
                    break;
                }
            }
            if (!all_fold) continue;
            const Shape tile = fundamental_box(lattice);
            if (count_distinct_folded_rows(lattice, tile) == target) result.complete.push_back(std::move(lattice));
        }
        if (stop_at_first && !result.complete.empty()) break;
    }
    return result;
}

EquivalenceStats predicate_equivalence(std::size_t dim, std::size_t lattices, Coord max_volume, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    EquivalenceStats stats;
    for (std::size_t n = 0; n < lattices; ++n) {
        const Lattice lattice = random_lattice(rng, dim, max_volume);
        const Tiling tiling(lattice, fundamental_box(lattice));
        ++stats.lattices;
        for (const auto& d : Direction::all(dim)) {
            const bool walked = std::holds_alternative<Folding>(walk_folded_row(tiling, d));
            bool agree = is_folding(lattice, d) == walked;
            if (dim == 2) agree = agree && is_folding_2d(lattice, d) == walked;
            ++stats.cases;
            stats.agreements += agree ? 1 : 0;
            stats.foldings += walked ? 1 : 0;
        }
    }
    return stats;
}

}  // namespace mdfold
