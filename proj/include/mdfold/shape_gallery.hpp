#pragma once

#include <cstdint>
#include <string>

#include "mdfold/geometry.hpp"

namespace mdfold {

/// Exact positive rational, parsed from "3", "3/2" or "1.5".
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational parse(const std::string& text);
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct RectanglePlan {
    Coord alpha = 0;  // even
    Coord beta = 0;
    std::uint64_t prime = 0;  // alpha * beta = prime^2 - 1
    double gamma_target = 0;
    double gamma_achieved = 0;  // beta / alpha
};

/// Closest beta/alpha to gamma over primes 3 <= p <= p_max and even alpha
/// dividing p^2 - 1. Ties go to the smaller p, then the smaller alpha.
RectanglePlan plan_rectangle(double gamma, std::uint64_t p_max);

/// beta x alpha rectangle (first axis beta) and the row-by-row lattice
/// [[beta, 0], [-1, alpha]] that tiles it.
Shape plan_rectangle_shape(const RectanglePlan& plan);
Lattice plan_rectangle_lattice(const RectanglePlan& plan);

/// [[beta, alpha/2 + t], [0, alpha]] with t = 1 if alpha = 0 mod 4, else 2.
Lattice hexagon_lattice(Coord alpha, Coord beta);

/// Tile of hexagon_lattice(alpha, beta) approximating the hexagon with
/// vertices (b/3,0), (b,0), (4b/3,a/2), (b,a), (b/3,a), (0,a/2), shifted so
/// its center (2b/3, a/2) is the origin. Each residue class contributes the
/// point of least hexagonal gauge; ties keep the smaller |y|, then |x|.
/// Requires even alpha and beta divisible by 3.
Shape hexagon_shape(Coord alpha, Coord beta);

/// Grid points strictly inside the regular polygon with the given
/// circumradius and rotation (radians) centered at the origin. Vertices are
/// snapped to a 2^-32 grid and every edge test is exact.
Shape raster_polygon(int sides, Rational radius, double rotation);

/// Grid points with x^2 + y^2 < radius^2, compared exactly.
Shape raster_circle(Rational radius);

/// Tile of a lattice made of the Euclidean-shortest point of each residue
/// class (ties: lexicographically smallest).
Shape compact_tile(const Lattice& lattice);

}  // namespace mdfold
