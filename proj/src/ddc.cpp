#include "mdfold/ddc.hpp"

#include <ostream>
#include <set>
#include <stdexcept>

namespace mdfold {

namespace {

// Calls f(t) for every t in the inclusive box [lo, hi], last axis fastest.
template <typename F>
void for_each_in_box(const Point& lo, const Point& hi, F&& f) {
    Point t = lo;
    while (true) {
        f(t);
        std::size_t i = t.size();
        while (i-- > 0) {
            if (++t[i] <= hi[i]) break;
            t[i] = lo[i];
        }
        if (i == static_cast<std::size_t>(-1)) return;
    }
}

}  // namespace

DotPattern::DotPattern(Shape shape_in, std::vector<Point> dots_in) : shape(std::move(shape_in)), dots(std::move(dots_in)) {
    std::set<Point> seen;
    for (const auto& d : dots) {
        if (!shape.contains(d)) throw std::invalid_argument("dot " + format_point(d) + " lies outside the shape");
        if (!seen.insert(d).second) throw std::invalid_argument("duplicate dot " + format_point(d));
    }
}

bool verify_ddc(const std::vector<Point>& dots) {
    std::set<Point> differences;
    for (std::size_t i = 0; i < dots.size(); ++i) {
        for (std::size_t j = 0; j < dots.size(); ++j) {
            if (i != j && !differences.insert(dots[i] - dots[j]).second) return false;
        }
    }
    return true;
}

bool verify_ddc(const DotPattern& pattern) { return verify_ddc(pattern.dots); }

DotPattern fold_b2(const Folding& folding, const B2Sequence& marks) {
    if (marks.n != folding.size()) {
        throw std::invalid_argument("B2 modulus " + std::to_string(marks.n) + " does not match shape size " +
                                    std::to_string(folding.size()));
    }
    std::vector<Point> dots;
    for (auto e : marks.elements) {
        if (e >= marks.n) throw std::invalid_argument("B2 element outside [0, n)");
        dots.push_back(folding.at(e));
    }
    return DotPattern(folding.shape(), std::move(dots));
}

InfiniteDDC::InfiniteDDC(Folding folding, B2Sequence marks) : folding_(std::move(folding)), marks_(std::move(marks)) {
    if (marks_.n != folding_.size()) throw std::invalid_argument("B2 modulus does not match shape size");
    marked_.assign(marks_.n, false);
    for (auto e : marks_.elements) {
        if (e >= marks_.n) throw std::invalid_argument("B2 element outside [0, n)");
        marked_[e] = true;
    }
}

std::vector<Point> InfiniteDDC::dots_in(const Shape& region, const Point& offset) const {
    std::vector<Point> out;
    for (const auto& r : region.points()) {
        Point p = r + offset;
        if (dotted(p)) out.push_back(std::move(p));
    }
    return out;
}

Intersection max_intersection(const Shape& s, const Shape& r) {
    if (s.dim() != r.dim()) throw std::invalid_argument("max_intersection: dimension mismatch");
    const auto [slo, shi] = s.bounding_box();
    const auto [rlo, rhi] = r.bounding_box();
    Intersection best{0, zero_point(s.dim())};
    bool first = true;
    for_each_in_box(slo - rhi, shi - rlo, [&](const Point& t) {
        std::size_t count = 0;
        for (const auto& p : r.points()) count += s.contains(p + t) ? 1 : 0;
        if (first || count > best.size) {
            best = {count, t};
            first = false;
        }
    });
    return best;
}

RichCopy find_rich_copy(const InfiniteDDC& pattern, const Shape& region) {
    const Lattice& lattice = pattern.folding().lattice();
    if (region.dim() != lattice.dim()) throw std::invalid_argument("find_rich_copy: dimension mismatch");
    const Shape period = fundamental_box(lattice);
    RichCopy best{zero_point(region.dim()), 0};
    bool first = true;
    for (const auto& t : period.points()) {
        std::size_t count = 0;
        for (const auto& p : region.points()) count += pattern.dotted(p + t) ? 1 : 0;
        if (first || count > best.count) {
            best = {t, count};
            first = false;
        }
    }
    return best;
}

std::size_t rich_copy_floor(std::size_t m, std::size_t tile_size, std::size_t overlap) {
    if (tile_size == 0) throw std::invalid_argument("empty tile");
    return (m * overlap + tile_size - 1) / tile_size;
}

std::size_t mediated_floor(std::size_t m, std::size_t tile_size, std::size_t overlap_sr, std::size_t mediator_size,
                           std::size_t overlap_ru) {
    const std::size_t den = tile_size * mediator_size;
    if (den == 0) throw std::invalid_argument("empty tile");
    return (m * overlap_sr * overlap_ru + den - 1) / den;
}

void write_dot_pattern(std::ostream& out, const DotPattern& pattern) {
    const Shape& shape = pattern.shape;
    const std::set<Point> dots(pattern.dots.begin(), pattern.dots.end());
    if (shape.dim() == 2) {
        const auto [lo, hi] = shape.bounding_box();
        for (Coord x = lo[0]; x <= hi[0]; ++x) {
            std::string row;
            for (Coord y = lo[1]; y <= hi[1]; ++y) {
                const Point p{x, y};
                row += dots.count(p) ? 'X' : shape.contains(p) ? '.' : ' ';
            }
            while (!row.empty() && row.back() == ' ') row.pop_back();
            out << row << "\n";
        }
    }
    out << "dots " << pattern.dots.size() << "\n";
    for (const auto& d : pattern.dots) out << format_point(d) << "\n";
}

}  // namespace mdfold
