#include <doctest.h>

#include <random>
#include <sstream>
#include <stdexcept>

#include "mdfold/geometry.hpp"
#include "oracles.hpp"

using namespace mdfold;

namespace {

const IntMatrix kEleven{{3, 2}, {7, 1}};

Shape column11() {
    std::vector<Point> pts;
    for (Coord j = 0; j <= 10; ++j) pts.push_back({0, j});
    return Shape(2, pts);
}

}  // namespace

TEST_CASE("volume is the absolute determinant") {
    CHECK(Lattice(kEleven).volume() == 11);
    CHECK(volume(Lattice({{1, 0}, {0, 1}})) == 1);
    CHECK(Lattice({{2, 0}, {0, 3}}).volume() == 6);
    CHECK(Lattice({{0, 1}, {1, 0}}).volume() == 1);
    CHECK(Lattice({{2, 1, 0}, {0, 3, 1}, {1, 0, 5}}).volume() == 31);
    CHECK_THROWS_AS(Lattice({{1, 2}, {2, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(Lattice({{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Lattice({}), std::invalid_argument);
}

TEST_CASE("determinant handles small cases") {
    CHECK(determinant({}) == 1);
    CHECK(determinant({{-4}}) == -4);
    CHECK(determinant({{0, 1}, {1, 0}}) == -1);
    CHECK(determinant({{2, 0, 1}, {1, 3, 2}, {1, 1, 1}}) == oracle::det(oracle::widen({{2, 0, 1}, {1, 3, 2}, {1, 1, 1}})));
}

TEST_CASE("residue examples") {
    const Lattice diag({{2, 0}, {0, 3}});
    CHECK(residue(diag, {5, 7}) == residue(diag, {1, 1}));
    const Lattice eleven(kEleven);
    CHECK(eleven.residue({0, 11}) == eleven.residue({0, 0}));
    std::set<Residue> seen;
    for (Coord j = 0; j <= 10; ++j) seen.insert(eleven.residue({0, j}));
    CHECK(seen.size() == 11);
}

TEST_CASE("residue equality matches lattice membership") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Coord> entry(-5, 5), coord(-20, 20);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t dim = 2 + trial % 2;
        IntMatrix g(dim, std::vector<Coord>(dim));
        for (auto& row : g)
            for (auto& x : row) x = entry(rng);
        if (determinant(g) == 0) continue;
        const Lattice lattice(g);
        for (int k = 0; k < 40; ++k) {
            Point p(dim), q(dim);
            for (auto& x : p) x = coord(rng);
            for (auto& x : q) x = coord(rng);
            CHECK((lattice.residue(p) == lattice.residue(q)) == oracle::in_lattice(g, p - q));
            CHECK(lattice.contains(p - q) == oracle::in_lattice(g, p - q));
            CHECK(lattice.residue_index(p) < static_cast<std::size_t>(lattice.volume()));
        }
        // Basis rows are in the lattice.
        for (const auto& row : g) CHECK(lattice.contains(row));
    }
}

TEST_CASE("is_tiling examples") {
    CHECK(is_tiling(Lattice({{2, 0}, {0, 3}}), box_shape({2, 3})));
    CHECK(is_tiling(Lattice(kEleven), column11()));
    CHECK_FALSE(is_tiling(Lattice({{2, 0}, {0, 3}}), box_shape({2, 2})));
    // Right size, repeated residue.
    CHECK_FALSE(is_tiling(Lattice({{2, 0}, {0, 3}}), Shape(2, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}})));
    CHECK_THROWS_AS(Tiling(Lattice({{2, 0}, {0, 3}}), box_shape({2, 2})), std::invalid_argument);
}

TEST_CASE("a tiling uses each residue once") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<Coord> entry(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix g(2, std::vector<Coord>(2));
        for (auto& row : g)
            for (auto& x : row) x = entry(rng);
        if (determinant(g) == 0) continue;
        const Lattice lattice(g);
        const Shape box = fundamental_box(lattice);
        REQUIRE(is_tiling(lattice, box));
        std::set<Residue> residues;
        for (const auto& s : box.points()) residues.insert(lattice.residue(s));
        CHECK(residues.size() == static_cast<std::size_t>(lattice.volume()));
        CHECK(box.size() == static_cast<std::size_t>(lattice.volume()));
    }
}

TEST_CASE("center_of examples") {
    const Lattice eleven(kEleven);
    const Shape col = column11();
    for (const auto& s : col.points()) CHECK(is_zero(center_of(eleven, col, s)));
    CHECK(center_of(eleven, col, {1, 0}) == Point{1, -3});
    CHECK(center_of(Lattice({{2, 0}, {0, 3}}), box_shape({2, 3}), {2, 4}) == Point{2, 3});
}

TEST_CASE("center_of agrees with bounded search and is lattice-equivariant") {
    const std::vector<std::pair<IntMatrix, Shape>> cases{
        {kEleven, column11()},
        {{{2, 0}, {-1, 3}}, box_shape({2, 3})},
        {{{6, 1}, {-1, 5}}, fundamental_box(Lattice({{6, 1}, {-1, 5}}))},
        {{{2, 1, 0}, {0, 3, 1}, {1, 0, 2}}, fundamental_box(Lattice({{2, 1, 0}, {0, 3, 1}, {1, 0, 2}}))},
    };
    for (const auto& [g, shape] : cases) {
        const Tiling tiling(Lattice(g), shape);
        const std::set<Point> members(shape.points().begin(), shape.points().end());
        const std::size_t dim = g.size();
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<Coord> coord(-12, 12);
        for (int k = 0; k < 60; ++k) {
            Point p(dim);
            for (auto& x : p) x = coord(rng);
            const Point c = tiling.center_of(p);
            CHECK(shape.contains(p - c));
            CHECK(oracle::in_lattice(g, c));
            CHECK(c == *oracle::center_search(g, members, p));
            for (const auto& row : g) CHECK(tiling.center_of(p + row) == c + row);
        }
    }
}

TEST_CASE("shape validation") {
    CHECK_THROWS_AS(Shape(2, {{1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Shape(2, {{0, 0}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Shape(2, {{0, 0}, {0, 1, 2}}), std::invalid_argument);
    const Shape box = box_shape({2, 3});
    CHECK(box.size() == 6);
    CHECK(box.points()[1] == Point{0, 1});
    const auto [lo, hi] = box.bounding_box();
    CHECK(lo == Point{0, 0});
    CHECK(hi == Point{1, 2});
}

TEST_CASE("fundamental box has the Hermite diagonal as sides") {
    const Lattice eleven(kEleven);
    const Shape box = fundamental_box(eleven);
    CHECK(box.size() == 11);
    CHECK(is_tiling(eleven, box));
}

TEST_CASE("file formats round trip") {
    std::stringstream lat("# example\ndim 2\n3 2\n\n7 1\n");
    const Lattice l = parse_lattice(lat);
    CHECK(l.basis() == kEleven);
    std::stringstream out;
    write_lattice(out, l);
    CHECK(parse_lattice(out).basis() == kEleven);

    std::stringstream shp("dim 2\ncenter 1 1\n1 1\n1 2\n2 1\n");
    const Shape s = parse_shape(shp);
    CHECK(s == Shape(2, {{0, 0}, {0, 1}, {1, 0}}));
    std::stringstream again;
    write_shape(again, s);
    CHECK(parse_shape(again) == s);

    std::stringstream bad("dim 2\n1 2 3\n4 5\n");
    CHECK_THROWS_AS(parse_lattice(bad), std::invalid_argument);
    std::stringstream short_file("dim 2\n1 0\n");
    CHECK_THROWS_AS(parse_lattice(short_file), std::invalid_argument);
    CHECK_THROWS_AS(load_lattice("/nonexistent/file.lat"), std::invalid_argument);
}
