#pragma once

#include <iosfwd>
#include <vector>

#include "mdfold/folding.hpp"
#include "mdfold/sidon.hpp"

namespace mdfold {

/// Dots placed on a subset of a shape's points.
struct DotPattern {
    DotPattern(Shape shape, std::vector<Point> dots);

    Shape shape;
    std::vector<Point> dots;
};

/// Every ordered difference between two distinct dots occurs once.
bool verify_ddc(const std::vector<Point>& dots);
bool verify_ddc(const DotPattern& pattern);

/// Dots at the folded-row positions named by a B2 sequence over Z_|S|.
DotPattern fold_b2(const Folding& folding, const B2Sequence& marks);

/// Lattice-periodic extension of a folded B2 sequence to the whole grid.
class InfiniteDDC {
public:
    InfiniteDDC(Folding folding, B2Sequence marks);

    const Folding& folding() const { return folding_; }
    const B2Sequence& marks() const { return marks_; }
    std::size_t dots_per_tile() const { return marks_.elements.size(); }

    bool dotted(const Point& p) const { return marked_[folding_.index(p)]; }
    /// Dots inside region + offset, in region point order.
    std::vector<Point> dots_in(const Shape& region, const Point& offset) const;

private:
    Folding folding_;
    B2Sequence marks_;
    std::vector<bool> marked_;
};

struct Intersection {
    std::size_t size = 0;
    Point offset;
};

/// Largest |S ∩ (R + t)| over integer offsets t, with the first maximizing t
/// in lexicographic scan order.
Intersection max_intersection(const Shape& s, const Shape& r);

struct RichCopy {
    Point offset;
    std::size_t count = 0;
};

/// Densest translate of region over one lattice period of the pattern.
RichCopy find_rich_copy(const InfiniteDDC& pattern, const Shape& region);

/// ceil(m * overlap / tile_size): dots some translate of the region must hold.
std::size_t rich_copy_floor(std::size_t m, std::size_t tile_size, std::size_t overlap);
/// ceil(m * Δ(S,R) * Δ(R,U) / (|S| * |R|)) for a region U reached through R.
std::size_t mediated_floor(std::size_t m, std::size_t tile_size, std::size_t overlap_sr, std::size_t mediator_size,
                           std::size_t overlap_ru);

/// D = 2: bounding-box grid ('X' dot, '.' empty shape cell, ' ' outside)
/// followed by the coordinate list. Other D: coordinate list only.
void write_dot_pattern(std::ostream& out, const DotPattern& pattern);

}  // namespace mdfold
