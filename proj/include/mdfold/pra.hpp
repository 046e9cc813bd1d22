#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "mdfold/ecc.hpp"
#include "mdfold/folding.hpp"

namespace mdfold {

/// One period of a maximal-length binary LFSR sequence.
struct MSequence {
    std::uint32_t degree = 0;
    /// Feedback polynomial bits: bit i is the coefficient of x^i (bit k set).
    std::uint64_t feedback = 0;
    BitVector bits;
};

/// Least primitive binary polynomial of the given degree, as a bit mask.
std::uint64_t least_primitive_polynomial(std::uint32_t degree);

/// Recurrence s_{t+k} = sum_{i<k} c_i s_{t+i} over the least primitive
/// polynomial, started from the all-ones state. Degree at most 20.
MSequence m_sequence(std::uint32_t degree);

/// Every nonzero k-tuple appears exactly once among the cyclic windows.
bool has_sequence_window_property(const BitVector& bits, std::uint32_t k);

/// Bits written along a folded-row; extended to the grid by periodicity.
class BinaryPattern {
public:
    BinaryPattern(Folding folding, BitVector bits);

    const Folding& folding() const { return folding_; }
    /// Bit of the i-th cell of the folded-row.
    const BitVector& sequence() const { return bits_; }
    std::uint8_t bit(const Point& p) const { return bits_[folding_.index(p)]; }

private:
    Folding folding_;
    BitVector bits_;
};

BinaryPattern fold_sequence(const Folding& folding, const BitVector& sequence);

/// Slides a k1 x k2 window over one lattice period of the periodic
/// extension; true iff every nonzero binary k1 x k2 matrix occurs exactly
/// once and the zero matrix never does.
bool check_window_property(const BinaryPattern& pattern, std::uint32_t k1, std::uint32_t k2);

struct WindowComparison {
    bool shape_ok = false;
    bool array_ok = false;
    bool agree() const { return shape_ok == array_ok; }
};

/// Folds the degree k1*k2 m-sequence both into the given shape and into the
/// n1 x n2 array (n1 = 2^k1 - 1) under the same lattice and direction, and
/// checks the k1 x k2 window property on each.
WindowComparison window_equivalence_experiment(const Lattice& lattice, const Shape& shape, const Direction& direction,
                                               std::uint32_t k1, std::uint32_t k2);

/// D = 2: one line per value of the first coordinate over the bounding box,
/// '0'/'1' per cell and ' ' outside the shape.
void write_binary_pattern(std::ostream& out, const BinaryPattern& pattern);

}  // namespace mdfold
