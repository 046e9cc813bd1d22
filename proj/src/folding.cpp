#include "mdfold/folding.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mdfold {

namespace {

Coord gcd_abs(Coord a, Coord b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

}  // namespace

Direction::Direction(std::vector<int> delta) : delta_(std::move(delta)) {
    if (delta_.empty() || delta_.size() > kMaxDim) throw std::invalid_argument("direction dimension must be in [1, 8]");
    int first = 0;
    for (int v : delta_) {
        if (v < -1 || v > 1) throw std::invalid_argument("direction entries must be -1, 0 or 1");
        if (first == 0) first = v;
    }
    if (first == 0) throw std::invalid_argument("direction must be nonzero");
    if (first < 0) {
        for (int& v : delta_) v = -v;
        negated_ = true;
    }
}

Direction Direction::parse(const std::string& text) {
    std::vector<int> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int x = 0;
        try {
            x = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad direction '" + text + "'");
        }
        if (item.find_first_not_of(" \t", used) != std::string::npos) {
            throw std::invalid_argument("bad direction '" + text + "'");
        }
        v.push_back(x);
    }
    return Direction(std::move(v));
}

std::vector<Direction> Direction::all(std::size_t dim) {
    if (dim == 0 || dim > kMaxDim) throw std::invalid_argument("direction dimension must be in [1, 8]");
    std::vector<Direction> out;
    std::vector<int> v(dim, -1);
    while (true) {
        int first = 0;
        for (int x : v) {
            if (x != 0) {
                first = x;
                break;
            }
        }
        if (first == 1) out.emplace_back(v);
        std::size_t i = 0;
        while (i < dim && v[i] == 1) v[i++] = -1;
        if (i == dim) break;
        ++v[i];
    }
    auto key = [](const Direction& d) {
        std::vector<int> k;
        for (int x : d.delta()) k.push_back(x == 1 ? 0 : x == -1 ? 1 : 2);
        return k;
    };
    std::sort(out.begin(), out.end(), [&](const Direction& a, const Direction& b) { return key(a) < key(b); });
    return out;
}

std::string Direction::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < delta_.size(); ++i) {
        if (i) s += ",";
        s += delta_[i] > 0 ? "+1" : delta_[i] < 0 ? "-1" : "0";
    }
    return s + ")";
}

Folding::Folding(Tiling tiling, Direction direction, std::vector<std::size_t> order)
    : tiling_(std::move(tiling)), direction_(std::move(direction)), order_(std::move(order)) {
    if (order_.size() != tiling_.size()) throw std::invalid_argument("folded-row must visit every shape point");
    position_.assign(order_.size(), order_.size());
    for (std::size_t k = 0; k < order_.size(); ++k) {
        if (order_[k] >= order_.size() || position_[order_[k]] != order_.size()) {
            throw std::invalid_argument("folded-row is not a permutation of the shape");
        }
        position_[order_[k]] = k;
    }
}

std::vector<Point> Folding::order() const {
    std::vector<Point> out;
    out.reserve(order_.size());
    for (std::size_t idx : order_) out.push_back(shape().points()[idx]);
    return out;
}

std::size_t Folding::index_of(const Point& shape_point) const {
    if (!shape().contains(shape_point)) throw std::invalid_argument(format_point(shape_point) + " is not in the shape");
    return index(shape_point);
}

WalkResult walk_folded_row(const Tiling& tiling, const Direction& direction) {
    if (direction.dim() != tiling.dim()) throw std::invalid_argument("walk: direction dimension mismatch");
    const Point step = direction.step();
    const std::size_t origin = tiling.shape_index(zero_point(tiling.dim()));
    std::vector<std::size_t> order{origin};
    Point p = zero_point(tiling.dim());
    while (true) {
        const std::size_t next = tiling.shape_index(p + step);
        if (next == origin) break;
        order.push_back(next);
        p = tiling.shape().points()[next];
    }
    if (order.size() != tiling.size()) return NotAFolding{order.size(), tiling.size()};
    return Folding(tiling, direction, std::move(order));
}

WalkResult walk_folded_row(const Lattice& lattice, const Shape& shape, const Direction& direction) {
    return walk_folded_row(Tiling(lattice, shape), direction);
}

Folding require_folding(const Tiling& tiling, const Direction& direction) {
    auto result = walk_folded_row(tiling, direction);
    if (auto* failed = std::get_if<NotAFolding>(&result)) {
        throw std::runtime_error("not a folding: direction " + direction.str() + " cycles after " +
                                 std::to_string(failed->cycle_length) + " of " + std::to_string(failed->shape_size) +
                                 " points");
    }
    return std::get<Folding>(std::move(result));
}

bool is_folding_2d(const Lattice& lattice, const Direction& direction) {
    if (lattice.dim() != 2 || direction.dim() != 2) throw std::invalid_argument("is_folding_2d needs D = 2");
    const auto& v = lattice.basis();
    const auto& d = direction.delta();
    Coord g = 0;
    if (d[0] == 1 && d[1] == 1) g = gcd_abs(v[1][1] - v[1][0], v[0][0] - v[0][1]);
    else if (d[0] == 1 && d[1] == -1) g = gcd_abs(v[1][1] + v[1][0], v[0][0] + v[0][1]);
    else if (d[0] == 1 && d[1] == 0) g = gcd_abs(v[0][1], v[1][1]);
    else g = gcd_abs(v[0][0], v[1][0]);
    return g == 1;
}

bool is_folding(const Lattice& lattice, const Direction& direction) {
    const std::size_t n = lattice.dim();
    if (direction.dim() != n) throw std::invalid_argument("is_folding: direction dimension mismatch");
    if (n == 1) return true;

    // Stable order of coordinates: +1 entries, then -1 entries, then zeros.
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    const auto& d = direction.delta();
    auto rank = [&](std::size_t i) { return d[i] == 1 ? 0 : d[i] == -1 ? 1 : 2; };
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return rank(a) < rank(b); });

    const auto& v = lattice.basis();
    // Row r of the reduced system is indexed by coordinate perm[r]; column j
    // by basis vector j.
    IntMatrix reduced(n - 1, std::vector<Coord>(n));
    const std::size_t first = perm[0];
    for (std::size_t r = 1; r < n; ++r) {
        const std::size_t coord = perm[r];
        for (std::size_t j = 0; j < n; ++j) {
            switch (rank(coord)) {
                case 0: reduced[r - 1][j] = v[j][coord] - v[j][first]; break;
                case 1: reduced[r - 1][j] = v[j][coord] + v[j][first]; break;
                default: reduced[r - 1][j] = v[j][coord]; break;
            }
        }
    }

    Coord g = 0;
    for (std::size_t skip = 0; skip < n; ++skip) {
        IntMatrix minor(n - 1);
        for (std::size_t r = 0; r + 1 < n; ++r) {
            for (std::size_t j = 0; j < n; ++j) {
                if (j != skip) minor[r].push_back(reduced[r][j]);
            }
        }
        g = gcd_abs(g, determinant(minor));
        if (g == 1) return true;
    }
    return g == 1;
}

Shape morph_shape(const Folding& folding, const Point& p) {
    const Shape& shape = folding.shape();
    if (!shape.contains(p)) throw std::invalid_argument("morph: " + format_point(p) + " is not in the shape");
    const Point added = p + folding.direction().step();
    if (shape.contains(added)) throw std::invalid_argument("morph: " + format_point(added) + " is already in the shape");
    const Point removed = folding.tiling().reduce(added);
    if (is_zero(removed)) throw std::invalid_argument("morph: would remove the origin");
    std::vector<Point> pts = shape.points();
    *std::find(pts.begin(), pts.end(), removed) = added;
    return Shape(shape.dim(), std::move(pts));
}

Shape morph_shape(const Lattice& lattice, const Shape& shape, const Direction& direction, const Point& p) {
    return morph_shape(require_folding(Tiling(lattice, shape), direction), p);
}

std::vector<Shape> morph_toward(const Folding& folding, const Shape& target) {
    if (!is_tiling(folding.lattice(), target)) throw std::invalid_argument("morph target is not tiled by the lattice");
    const Point step = folding.direction().step();
    std::vector<Shape> path;
    Folding current = folding;
    while (!(current.shape() == target)) {
        const Shape& shape = current.shape();
        const Point* chosen = nullptr;
        for (const auto& t : target.points()) {
            if (shape.contains(t) || !shape.contains(t - step)) continue;
            if (is_zero(current.tiling().reduce(t))) continue;
            chosen = &t;
            break;
        }
        if (!chosen) break;
        Shape next = morph_shape(current, *chosen - step);
        current = require_folding(Tiling(current.lattice(), next), current.direction());
        path.push_back(std::move(next));
    }
    return path;
}

bool same_folded_row(const Folding& a, const Folding& b) {
    if (!(a.shape() == b.shape()) || a.size() != b.size()) return false;
    const std::size_t n = a.size();
    bool forward = true, backward = true;
    for (std::size_t k = 0; k < n && (forward || backward); ++k) {
        if (a.at(k) != b.at(k)) forward = false;
        if (a.at(k) != b.at((n - k) % n)) backward = false;
    }
    return forward || backward;
}

std::size_t count_distinct_folded_rows(const Tiling& tiling) {
    std::vector<Folding> rows;
    for (const auto& d : Direction::all(tiling.dim())) {
        auto result = walk_folded_row(tiling, d);
        auto* row = std::get_if<Folding>(&result);
        if (!row) continue;
        const bool seen =
            std::any_of(rows.begin(), rows.end(), [&](const Folding& other) { return same_folded_row(*row, other); });
        if (!seen) rows.push_back(std::move(*row));
    }
    return rows.size();
}

std::size_t count_distinct_folded_rows(const Lattice& lattice, const Shape& shape) {
    return count_distinct_folded_rows(Tiling(lattice, shape));
}

}  // namespace mdfold
