#include "mdfold/pra.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace mdfold {

namespace {

std::uint64_t mulmod_gf2(std::uint64_t a, std::uint64_t b, std::uint64_t poly, std::uint32_t degree) {
    std::uint64_t r = 0;
    const std::uint64_t top = std::uint64_t{1} << degree;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & top) a ^= poly;
    }
    return r;
}

std::uint64_t powmod_gf2(std::uint64_t base, std::uint64_t e, std::uint64_t poly, std::uint32_t degree) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod_gf2(r, base, poly, degree);
        base = mulmod_gf2(base, base, poly, degree);
        e >>= 1;
    }
    return r;
}

}  // namespace

std::uint64_t least_primitive_polynomial(std::uint32_t degree) {
    if (degree == 0 || degree > 20) throw std::invalid_argument("m-sequence degree must be in [1, 20]");
    const std::uint64_t order = (std::uint64_t{1} << degree) - 1;
    std::vector<std::uint64_t> factors;
    std::uint64_t rest = order;
    for (std::uint64_t d = 2; d * d <= rest; ++d) {
        if (rest % d) continue;
        factors.push_back(d);
        while (rest % d == 0) rest /= d;
    }
    if (rest > 1) factors.push_back(rest);

    // x reduced modulo a candidate; for degree 1 the only candidate is x + 1.
    const std::uint64_t x = degree == 1 ? 1 : 2;
    for (std::uint64_t poly = (std::uint64_t{1} << degree) | 1; poly < (std::uint64_t{1} << (degree + 1)); poly += 2) {
        // x has multiplicative order 2^k - 1 exactly when poly is primitive.
        if (powmod_gf2(x, order, poly, degree) != 1) continue;
        bool primitive = true;
        for (auto r : factors) {
            if (powmod_gf2(x, order / r, poly, degree) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return poly;
    }
    throw std::logic_error("no primitive polynomial found");
}

MSequence m_sequence(std::uint32_t degree) {
    MSequence seq;
    seq.degree = degree;
    seq.feedback = least_primitive_polynomial(degree);
    const std::size_t period = (std::size_t{1} << degree) - 1;
    BitVector s(period + degree, 0);
    for (std::uint32_t i = 0; i < degree; ++i) s[i] = 1;
    for (std::size_t t = 0; t + degree < s.size(); ++t) {
        std::uint8_t next = 0;
        for (std::uint32_t i = 0; i < degree; ++i) {
            if ((seq.feedback >> i) & 1) next ^= s[t + i];
        }
        s[t + degree] = next;
    }
    s.resize(period);
    seq.bits = std::move(s);
    return seq;
}

bool has_sequence_window_property(const BitVector& bits, std::uint32_t k) {
    if (k == 0 || k > 24) throw std::invalid_argument("window length must be in [1, 24]");
    const std::size_t n = bits.size();
    if (n != (std::size_t{1} << k) - 1) return false;
    std::vector<bool> seen(n + 1, false);
    for (std::size_t t = 0; t < n; ++t) {
        std::size_t w = 0;
        for (std::uint32_t i = 0; i < k; ++i) w = (w << 1) | bits[(t + i) % n];
        if (w == 0 || seen[w]) return false;
        seen[w] = true;
    }
    return true;
}

BinaryPattern::BinaryPattern(Folding folding, BitVector bits) : folding_(std::move(folding)), bits_(std::move(bits)) {
    if (bits_.size() != folding_.size()) {
        throw std::invalid_argument("sequence length " + std::to_string(bits_.size()) + " does not match shape size " +
                                    std::to_string(folding_.size()));
    }
}

BinaryPattern fold_sequence(const Folding& folding, const BitVector& sequence) {
    return BinaryPattern(folding, sequence);
}

bool check_window_property(const BinaryPattern& pattern, std::uint32_t k1, std::uint32_t k2) {
    const Lattice& lattice = pattern.folding().lattice();
    if (lattice.dim() != 2) throw std::invalid_argument("window property needs a two-dimensional pattern");
    if (k1 == 0 || k2 == 0 || k1 * k2 > 24) throw std::invalid_argument("window must have 1 <= k1*k2 <= 24 cells");
    const std::uint64_t windows = (std::uint64_t{1} << (k1 * k2)) - 1;
    if (static_cast<std::uint64_t>(lattice.volume()) != windows) return false;

    std::vector<bool> seen(windows + 1, false);
    const Shape translates = fundamental_box(lattice);
    for (const auto& t : translates.points()) {
        std::uint64_t w = 0;
        for (Coord a = 0; a < static_cast<Coord>(k1); ++a) {
            for (Coord b = 0; b < static_cast<Coord>(k2); ++b) w = (w << 1) | pattern.bit({t[0] + a, t[1] + b});
        }
        if (w == 0 || seen[w]) return false;
        seen[w] = true;
    }
    return true;
}

WindowComparison window_equivalence_experiment(const Lattice& lattice, const Shape& shape, const Direction& direction,
                                               std::uint32_t k1, std::uint32_t k2) {
    if (k1 == 0 || k2 == 0 || k1 * k2 > 20) throw std::invalid_argument("window must have 1 <= k1*k2 <= 20 cells");
    const Coord n = (Coord{1} << (k1 * k2)) - 1;
    const Coord n1 = (Coord{1} << k1) - 1;
    const Coord n2 = n / n1;
    if (n1 <= 1 || n2 <= 1 || std::gcd(n1, n2) != 1) {
        throw std::invalid_argument("array sides n1 = " + std::to_string(n1) + ", n2 = " + std::to_string(n2) +
                                    " must be coprime and greater than 1");
    }
    const Shape array = box_shape({n1, n2});
    if (!is_tiling(lattice, array)) throw std::invalid_argument("lattice does not tile the n1 x n2 array");
    const Folding on_shape = require_folding(Tiling(lattice, shape), direction);
    const Folding on_array = require_folding(Tiling(lattice, array), direction);

    const MSequence seq = m_sequence(k1 * k2);
    WindowComparison out;
    out.shape_ok = check_window_property(fold_sequence(on_shape, seq.bits), k1, k2);
    out.array_ok = check_window_property(fold_sequence(on_array, seq.bits), k1, k2);
    return out;
}

void write_binary_pattern(std::ostream& out, const BinaryPattern& pattern) {
    const Shape& shape = pattern.folding().shape();
    if (shape.dim() != 2) {
        for (std::size_t i = 0; i < pattern.folding().size(); ++i) {
            out << format_point(pattern.folding().at(i)) << " " << int(pattern.sequence()[i]) << "\n";
        }
        return;
    }
    const auto [lo, hi] = shape.bounding_box();
    for (Coord x = lo[0]; x <= hi[0]; ++x) {
        std::string row;
        for (Coord y = lo[1]; y <= hi[1]; ++y) {
            const Point p{x, y};
            row += shape.contains(p) ? char('0' + pattern.bit(p)) : ' ';
        }
        while (!row.empty() && row.back() == ' ') row.pop_back();
        out << row << "\n";
    }
}

}  // namespace mdfold
