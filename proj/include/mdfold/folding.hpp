#pragma once

#include <string>
#include <variant>
#include <vector>

#include "mdfold/geometry.hpp"

namespace mdfold {

/// Nonzero ternary step vector, stored with its first nonzero entry equal to +1.
class Direction {
public:
    /// Canonicalizes; negated() reports whether the input had to be flipped.
    explicit Direction(std::vector<int> delta);

    /// "1,-1,0" style; whitespace tolerated.
    static Direction parse(const std::string& text);
    /// All (3^D - 1) / 2 canonical directions, ordered lexicographically with
    /// +1 before -1 before 0; for D = 2: (+1,+1), (+1,-1), (+1,0), (0,+1).
    static std::vector<Direction> all(std::size_t dim);

    std::size_t dim() const { return delta_.size(); }
    const std::vector<int>& delta() const { return delta_; }
    bool negated() const { return negated_; }
    Point step() const { return Point(delta_.begin(), delta_.end()); }
    std::string str() const;

    friend bool operator==(const Direction& a, const Direction& b) { return a.delta_ == b.delta_; }

private:
    std::vector<int> delta_;
    bool negated_ = false;
};

/// Successful walk: the folded-row of a tiling under a direction.
class Folding {
public:
    Folding(Tiling tiling, Direction direction, std::vector<std::size_t> order);

    const Tiling& tiling() const { return tiling_; }
    const Lattice& lattice() const { return tiling_.lattice(); }
    const Shape& shape() const { return tiling_.shape(); }
    const Direction& direction() const { return direction_; }
    std::size_t size() const { return order_.size(); }

    /// Shape points in walk order; order()[0] is the origin.
    std::vector<Point> order() const;
    const Point& at(std::size_t position) const { return shape().points()[order_[position]]; }
    /// Position of a shape point on the folded-row.
    std::size_t index_of(const Point& shape_point) const;
    /// Position of p - center_of(p); additive modulo size().
    std::size_t index(const Point& p) const { return position_[tiling_.shape_index(p)]; }

private:
    Tiling tiling_;
    Direction direction_;
    std::vector<std::size_t> order_;     // walk position -> shape point index
    std::vector<std::size_t> position_;  // shape point index -> walk position
};

struct NotAFolding {
    std::size_t cycle_length = 0;
    std::size_t shape_size = 0;
};

using WalkResult = std::variant<Folding, NotAFolding>;

WalkResult walk_folded_row(const Tiling& tiling, const Direction& direction);
WalkResult walk_folded_row(const Lattice& lattice, const Shape& shape, const Direction& direction);

/// Throws std::runtime_error with the cycle length if the walk fails.
Folding require_folding(const Tiling& tiling, const Direction& direction);

/// gcd criteria for the four canonical plane directions.
bool is_folding_2d(const Lattice& lattice, const Direction& direction);

/// General criterion: gcd of the maximal minors of the (D-1) x D reduced
/// system equals 1.
bool is_folding(const Lattice& lattice, const Direction& direction);

/// Exchanges p + delta for its congruent point inside the shape. The result is
/// tiled by the same lattice and still folds under the same direction.
Shape morph_shape(const Folding& folding, const Point& p);
Shape morph_shape(const Lattice& lattice, const Shape& shape, const Direction& direction, const Point& p);

/// Greedy sequence of morph steps moving the folding's shape toward target,
/// another tile of the same lattice. Each step adds a target point t with
/// t - delta in the current shape and drops its congruent point outside the
/// target. Returns the intermediate shapes (the last one equals target when
/// the greedy walk completes).
std::vector<Shape> morph_toward(const Folding& folding, const Shape& target);

/// Rows a and b are the same folded-row, possibly traversed in reverse.
bool same_folded_row(const Folding& a, const Folding& b);

/// Number of canonical directions that fold, counting rows equal up to
/// reversal once.
std::size_t count_distinct_folded_rows(const Tiling& tiling);
std::size_t count_distinct_folded_rows(const Lattice& lattice, const Shape& shape);

}  // namespace mdfold
