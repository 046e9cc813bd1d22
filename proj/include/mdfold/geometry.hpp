#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace mdfold {

using Coord = std::int64_t;
using Point = std::vector<Coord>;
using IntMatrix = std::vector<std::vector<Coord>>;

inline constexpr std::size_t kMaxDim = 8;
inline constexpr Coord kMaxVolume = Coord{1} << 31;

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point zero_point(std::size_t dim);
bool is_zero(const Point& p);
std::string format_point(const Point& p);

/// Exact determinant by fraction-free (Bareiss) elimination. 0x0 has det 1.
Coord determinant(const IntMatrix& m);

/// Canonical coset label of a grid point modulo a lattice.
struct Residue {
    Point coords;
    friend bool operator==(const Residue&, const Residue&) = default;
    friend auto operator<=>(const Residue&, const Residue&) = default;
};

/// Full-rank sublattice of Z^D, given by the rows of its generator matrix.
class Lattice {
public:
    explicit Lattice(IntMatrix basis);

    std::size_t dim() const { return basis_.size(); }
    const IntMatrix& basis() const { return basis_; }
    /// Upper-triangular row Hermite form: positive diagonal, entries above
    /// each pivot reduced into [0, pivot).
    const IntMatrix& hermite() const { return hermite_; }
    Coord volume() const { return volume_; }

    Residue residue(const Point& p) const;
    /// Mixed-radix position of residue(p) in [0, volume()).
    std::size_t residue_index(const Point& p) const;
    bool contains(const Point& p) const;

    friend bool operator==(const Lattice& a, const Lattice& b) { return a.basis_ == b.basis_; }

private:
    Point reduce(Point p) const;

    IntMatrix basis_;
    IntMatrix hermite_;
    Coord volume_ = 0;
};

Coord volume(const Lattice& lattice);
Residue residue(const Lattice& lattice, const Point& p);

/// Finite set of distinct grid points containing the origin (the center).
class Shape {
public:
    Shape(std::size_t dim, std::vector<Point> points);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<Point>& points() const { return points_; }
    bool contains(const Point& p) const { return members_.count(p) != 0; }

    /// Per-axis inclusive bounds.
    std::pair<Point, Point> bounding_box() const;
    Shape translated(const Point& offset) const;

    friend bool operator==(const Shape& a, const Shape& b) { return a.members_ == b.members_; }

private:
    std::size_t dim_;
    std::vector<Point> points_;
    std::set<Point> members_;
};

/// Points with 0 <= x_i < dims_i.
Shape box_shape(const std::vector<Coord>& dims);

/// The residue representatives 0 <= x_i < hermite()[i][i]: always a tile.
Shape fundamental_box(const Lattice& lattice);

bool is_tiling(const Lattice& lattice, const Shape& shape);

/// A verified lattice tiling with a residue -> shape point table.
class Tiling {
public:
    Tiling(Lattice lattice, Shape shape);

    const Lattice& lattice() const { return lattice_; }
    const Shape& shape() const { return shape_; }
    std::size_t dim() const { return shape_.dim(); }
    std::size_t size() const { return shape_.size(); }

    /// Index into shape().points() of the unique point congruent to p.
    std::size_t shape_index(const Point& p) const { return table_[lattice_.residue_index(p)]; }
    /// p - center_of(p), which always lies in the shape.
    const Point& reduce(const Point& p) const { return shape_.points()[shape_index(p)]; }
    /// Lattice point c with p - c in the shape.
    Point center_of(const Point& p) const { return p - reduce(p); }

private:
    Lattice lattice_;
    Shape shape_;
    std::vector<std::size_t> table_;
};

Point center_of(const Lattice& lattice, const Shape& shape, const Point& p);

// Text formats. '#' lines are comments.
Lattice parse_lattice(std::istream& in);
Shape parse_shape(std::istream& in);
Lattice load_lattice(const std::string& path);
Shape load_shape(const std::string& path);
void write_lattice(std::ostream& out, const Lattice& lattice);
void write_shape(std::ostream& out, const Shape& shape);

}  // namespace mdfold
