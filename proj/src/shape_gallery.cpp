#include "mdfold/shape_gallery.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "mdfold/finite_field.hpp"

namespace mdfold {

namespace {

using Wide = __int128;

// For every residue class, the point of the window minimizing key(p) (with
// std::tuple-style ordering). Result sorted lexicographically.
template <typename Key>
Shape best_representatives(const Lattice& lattice, const Point& lo, const Point& hi, Key&& key) {
    using K = decltype(key(lo));
    std::vector<std::optional<std::pair<K, Point>>> best(static_cast<std::size_t>(lattice.volume()));
    Point p = lo;
    while (true) {
        const std::size_t r = lattice.residue_index(p);
        auto k = key(p);
        if (!best[r] || std::tie(k, p) < std::tie(best[r]->first, best[r]->second)) best[r] = {std::move(k), p};
        std::size_t i = p.size();
        while (i-- > 0) {
            if (++p[i] <= hi[i]) break;
            p[i] = lo[i];
        }
        if (i == static_cast<std::size_t>(-1)) break;
    }
    std::vector<Point> pts;
    for (auto& b : best) {
        if (!b) throw std::logic_error("representative window misses a residue class");
        pts.push_back(std::move(b->second));
    }
    std::sort(pts.begin(), pts.end());
    return Shape(lattice.dim(), std::move(pts));
}

}  // namespace

Rational Rational::parse(const std::string& text) {
    auto fail = [&] { return std::invalid_argument("bad rational '" + text + "'"); };
    Rational r;
    const auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            std::size_t a = 0, b = 0;
            r.num = std::stoll(text.substr(0, slash), &a);
            r.den = std::stoll(text.substr(slash + 1), &b);
            if (a != slash || b != text.size() - slash - 1) throw fail();
        } else {
            const auto dot = text.find('.');
            const std::string whole = text.substr(0, dot);
            const std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);
            if (whole.empty() && frac.empty()) throw fail();
            if (frac.size() > 12) throw fail();
            for (char c : whole + frac) {
                if (c < '0' || c > '9') throw fail();
            }
            r.den = 1;
            for (std::size_t i = 0; i < frac.size(); ++i) r.den *= 10;
            r.num = (whole.empty() ? 0 : std::stoll(whole)) * r.den + (frac.empty() ? 0 : std::stoll(frac));
        }
    } catch (const std::invalid_argument&) {
        throw fail();
    } catch (const std::out_of_range&) {
        throw fail();
    }
    if (r.den <= 0 || r.num <= 0) throw std::invalid_argument("rational '" + text + "' must be positive");
    const auto g = std::gcd(r.num, r.den);
    r.num /= g;
    r.den /= g;
    return r;
}

RectanglePlan plan_rectangle(double gamma, std::uint64_t p_max) {
    if (!(gamma > 0)) throw std::invalid_argument("gamma must be positive");
    if (p_max * p_max > kMaxFieldSize) throw std::invalid_argument("p_max exceeds the field envelope");
    std::optional<RectanglePlan> best;
    double best_gap = 0;
    for (std::uint64_t p = 3; p <= p_max; ++p) {
        if (!is_prime(p)) continue;
        const auto n = static_cast<Coord>(p * p - 1);
        for (Coord alpha = 2; alpha <= n; alpha += 2) {
            if (n % alpha) continue;
            const Coord beta = n / alpha;
            const double ratio = static_cast<double>(beta) / static_cast<double>(alpha);
            const double gap = std::abs(ratio - gamma);
            if (!best || gap < best_gap - 1e-12) {
                best = RectanglePlan{alpha, beta, p, gamma, ratio};
                best_gap = gap;
            }
        }
    }
    if (!best) throw std::invalid_argument("no rectangle plan with p <= " + std::to_string(p_max));
    return *best;
}

Shape plan_rectangle_shape(const RectanglePlan& plan) { return box_shape({plan.beta, plan.alpha}); }

Lattice plan_rectangle_lattice(const RectanglePlan& plan) { return Lattice({{plan.beta, 0}, {-1, plan.alpha}}); }

Lattice hexagon_lattice(Coord alpha, Coord beta) {
    if (alpha < 2 || alpha % 2) throw std::invalid_argument("hexagon lattice needs a positive even alpha");
    if (beta < 1) throw std::invalid_argument("hexagon lattice needs a positive beta");
    const Coord theta = alpha % 4 == 0 ? 1 : 2;
    return Lattice({{beta, alpha / 2 + theta}, {0, alpha}});
}

Shape hexagon_shape(Coord alpha, Coord beta) {
    if (beta < 3 || beta % 3) throw std::invalid_argument("hexagon shape needs beta divisible by 3");
    const Lattice lattice = hexagon_lattice(alpha, beta);
    // Gauge of (u, v) relative to the center, scaled by 2 * alpha * beta:
    // 1 on the hexagon boundary becomes 2 * alpha * beta.
    auto key = [&](const Point& p) {
        const Coord u = p[0] < 0 ? -p[0] : p[0];
        const Coord v = p[1] < 0 ? -p[1] : p[1];
        const Coord gauge = std::max(4 * beta * v, 3 * alpha * u + 2 * beta * v);
        return std::tuple{gauge, v, u};
    };
    Shape shape = best_representatives(lattice, {-2 * beta, -alpha}, {2 * beta, alpha}, key);
    if (static_cast<Coord>(shape.size()) != alpha * beta) {
        throw std::runtime_error("hexagon raster has " + std::to_string(shape.size()) + " cells, expected " +
                                 std::to_string(alpha * beta));
    }
    return shape;
}

Shape raster_polygon(int sides, Rational radius, double rotation) {
    if (sides < 3) throw std::invalid_argument("polygon needs at least 3 sides");
    if (radius.value() > 1e6) throw std::invalid_argument("polygon radius too large");
    constexpr double kScale = 4294967296.0;  // 2^32
    std::vector<std::pair<Wide, Wide>> vertices;
    for (int k = 0; k < sides; ++k) {
        const double angle = rotation + 2.0 * std::numbers::pi * k / sides;
        const double x = radius.value() * std::cos(angle);
        const double y = radius.value() * std::sin(angle);
        vertices.emplace_back(static_cast<Wide>(std::llround(x * kScale)), static_cast<Wide>(std::llround(y * kScale)));
    }
    const auto reach = static_cast<Coord>(std::ceil(radius.value()));
    std::vector<Point> pts;
    for (Coord x = -reach; x <= reach; ++x) {
        for (Coord y = -reach; y <= reach; ++y) {
            const Wide px = static_cast<Wide>(x) << 32;
            const Wide py = static_cast<Wide>(y) << 32;
            bool inside = true;
            for (int k = 0; k < sides && inside; ++k) {
                const auto& [ax, ay] = vertices[k];
                const auto& [bx, by] = vertices[(k + 1) % sides];
                inside = (bx - ax) * (py - ay) - (by - ay) * (px - ax) > 0;
            }
            if (inside) pts.push_back({x, y});
        }
    }
    if (pts.empty()) throw std::invalid_argument("polygon raster is empty");
    return Shape(2, std::move(pts));
}

Shape raster_circle(Rational radius) {
    if (radius.num <= 0 || radius.den <= 0) throw std::invalid_argument("radius must be positive");
    const Coord reach = radius.num / radius.den + 1;
    const Wide bound = static_cast<Wide>(radius.num) * radius.num;
    const Wide den2 = static_cast<Wide>(radius.den) * radius.den;
    std::vector<Point> pts;
    for (Coord x = -reach; x <= reach; ++x) {
        for (Coord y = -reach; y <= reach; ++y) {
            if (static_cast<Wide>(x * x + y * y) * den2 < bound) pts.push_back({x, y});
        }
    }
    return Shape(2, std::move(pts));
}

Shape compact_tile(const Lattice& lattice) {
    // Every class has a fundamental-box member of norm <= reach, so the
    // shortest member lies in the cube [-reach, reach]^D.
    Wide norm2 = 0;
    for (std::size_t i = 0; i < lattice.dim(); ++i) {
        const Wide h = lattice.hermite()[i][i] - 1;
        norm2 += h * h;
    }
    const auto reach = static_cast<Coord>(std::ceil(std::sqrt(static_cast<double>(norm2))));
    auto key = [](const Point& p) {
        Wide n = 0;
        for (Coord c : p) n += static_cast<Wide>(c) * c;
        return static_cast<std::int64_t>(n);
    };
    double window = 1;
    for (std::size_t i = 0; i < lattice.dim(); ++i) window *= 2.0 * static_cast<double>(reach) + 1;
    if (window > 1 << 26) throw std::invalid_argument("compact_tile: search window too large for this lattice");
    return best_representatives(lattice, Point(lattice.dim(), -reach), Point(lattice.dim(), reach), key);
}

}  // namespace mdfold
