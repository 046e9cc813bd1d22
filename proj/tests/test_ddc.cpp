#include <doctest.h>

#include <random>
#include <sstream>
#include <stdexcept>

#include "mdfold/ddc.hpp"
#include "mdfold/shape_gallery.hpp"
#include "mdfold/sidon.hpp"
#include "oracles.hpp"

using namespace mdfold;

namespace {

// Tiles of size q^2 - 1: two for a lattice on which (+1,0) folds, plus a
// compact tile of a second lattice under its first folding direction.
std::vector<Folding> foldings_for(std::uint64_t q) {
    const Coord n = static_cast<Coord>(q * q - 1);
    const Lattice lattice({{n, 0}, {1, 1}});  // volume n; (1,0) has index 1
    std::vector<Folding> out;
    for (const Shape& s : {fundamental_box(lattice), compact_tile(lattice)}) {
        out.push_back(require_folding(Tiling(lattice, s), Direction({1, 0})));
    }
    const Lattice skew({{Coord(q) + 1, 1}, {0, Coord(q) - 1}});
    for (const auto& d : Direction::all(2)) {
        if (!is_folding(skew, d)) continue;
        out.push_back(require_folding(Tiling(skew, compact_tile(skew)), d));
        break;
    }
    return out;
}

}  // namespace

TEST_CASE("verify_ddc examples") {
    CHECK(verify_ddc(std::vector<Point>{{0, 0}, {0, 1}, {1, 0}}));
    CHECK_FALSE(verify_ddc(std::vector<Point>{{0, 0}, {0, 1}, {0, 2}}));
    CHECK(verify_ddc(std::vector<Point>{{0, 0}, {5, 5}}));
    CHECK(verify_ddc(std::vector<Point>{}));
    CHECK(verify_ddc(DotPattern(box_shape({2, 2}), {{0, 0}, {0, 1}, {1, 0}})));
    CHECK_THROWS_AS(DotPattern(box_shape({2, 2}), {{0, 0}, {3, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(DotPattern(box_shape({2, 2}), {{0, 0}, {0, 0}}), std::invalid_argument);
}

TEST_CASE("verify_ddc agrees with brute force") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 300; ++t) {
        std::set<Point> pick;
        const std::size_t want = 2 + rng() % 5;
        while (pick.size() < want) pick.insert({Coord(rng() % 6), Coord(rng() % 6)});
        const std::vector<Point> dots(pick.begin(), pick.end());
        CHECK(verify_ddc(dots) == oracle::distinct_differences(dots));
    }
}

TEST_CASE("fold_b2 examples") {
    std::vector<Point> col;
    for (Coord j = 0; j <= 10; ++j) col.push_back({0, j});
    const Folding eleven = require_folding(Tiling(Lattice({{3, 2}, {7, 1}}), Shape(2, col)), Direction({1, 0}));
    CHECK_THROWS_AS(fold_b2(eleven, B2Sequence{8, {0, 1, 3}}), std::invalid_argument);

    const Folding segment = require_folding(Tiling(Lattice({{1, 0}, {0, 8}}), box_shape({1, 8})), Direction({0, 1}));
    const DotPattern p = fold_b2(segment, B2Sequence{8, {0, 1, 3}});
    CHECK(p.dots == std::vector<Point>{{0, 0}, {0, 1}, {0, 3}});
    CHECK(verify_ddc(p));
}

TEST_CASE("folded B2 sequences are DDCs") {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        const B2Sequence marks = bose(q);
        const auto foldings = foldings_for(q);
        CHECK(foldings.size() >= 2);
        for (const auto& f : foldings) {
            const DotPattern p = fold_b2(f, marks);
            CHECK(p.dots.size() == q);
            CHECK(oracle::distinct_differences(p.dots));
            CHECK(verify_ddc(p));
        }
    }
}

TEST_CASE("infinite pattern: periodic, m dots per translate, DDC everywhere") {
    std::mt19937_64 rng(8);
    for (std::uint64_t q : {3, 5, 7}) {
        for (const auto& f : foldings_for(q)) {
            const B2Sequence seq = bose(q);
            const InfiniteDDC pattern(f, seq);
            const Shape& s = f.shape();
            for (const auto& e : seq.elements) CHECK(pattern.dotted(f.at(e)));
            for (int k = 0; k < 50; ++k) {
                const Point p{Coord(rng() % 200) - 100, Coord(rng() % 200) - 100};
                for (const auto& row : f.lattice().basis()) CHECK(pattern.dotted(p) == pattern.dotted(p + row));
            }
            // Every translate over one full period.
            const Shape period = fundamental_box(f.lattice());
            for (const auto& t : period.points()) {
                const auto dots = pattern.dots_in(s, t);
                CHECK(dots.size() == q);
                CHECK(oracle::distinct_differences(dots));
            }
        }
    }
}

TEST_CASE("max_intersection") {
    const Shape s = box_shape({2, 3});
    CHECK(max_intersection(s, s).size == 6);
    CHECK(is_zero(max_intersection(s, s).offset));
    CHECK(max_intersection(s, box_shape({3, 2})).size == 4);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 30; ++t) {
        std::set<Point> a{{0, 0}}, b{{0, 0}};
        while (a.size() < 7) a.insert({Coord(rng() % 5), Coord(rng() % 5) - 2});
        while (b.size() < 5) b.insert({Coord(rng() % 4) - 1, Coord(rng() % 4)});
        const Shape sa(2, {a.begin(), a.end()}), sb(2, {b.begin(), b.end()});
        const Intersection ab = max_intersection(sa, sb);
        CHECK(ab.size == max_intersection(sb, sa).size);
        std::size_t count = 0;
        for (const auto& p : sb.points()) count += sa.contains(p + ab.offset);
        CHECK(count == ab.size);
    }
}

TEST_CASE("rich copies meet the averaging floors") {
    for (std::uint64_t q : {5, 7}) {
        for (const auto& f : foldings_for(q)) {
            const InfiniteDDC pattern(f, bose(q));
            const Shape& s = f.shape();
            CHECK(find_rich_copy(pattern, s).count == q);

            for (const Shape& r : {box_shape({3, 3}), box_shape({5, 5}), box_shape({2, 7}), raster_circle({3, 1})}) {
                const std::size_t delta = max_intersection(s, r).size;
                const RichCopy best = find_rich_copy(pattern, r);
                CHECK(best.count >= rich_copy_floor(q, s.size(), delta));
                CHECK(pattern.dots_in(r, best.offset).size() == best.count);

                const Shape u = box_shape({2, 2});
                const std::size_t floor2 = mediated_floor(q, s.size(), delta, r.size(), max_intersection(r, u).size);
                CHECK(find_rich_copy(pattern, u).count >= floor2);
            }
        }
    }
    CHECK(rich_copy_floor(7, 48, 25) == 4);
    CHECK(mediated_floor(7, 48, 25, 25, 4) == 1);
}

TEST_CASE("dot pattern text") {
    std::ostringstream out;
    write_dot_pattern(out, DotPattern(Shape(2, {{0, 0}, {0, 1}, {1, 1}}), {{0, 0}, {1, 1}}));
    CHECK(out.str() == "X.\n X\ndots 2\n(0,0)\n(1,1)\n");
}
