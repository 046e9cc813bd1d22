#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mdfold/finite_field.hpp"
#include "mdfold/folding.hpp"

namespace mdfold {

using BitVector = std::vector<std::uint8_t>;

struct ErrorReport {
    enum class Kind { None, Single, Burst2, Uncorrectable };

    Kind kind = Kind::None;
    Point position;        // single error, or first cell of the burst
    std::size_t axis = 0;  // burst: second cell is position + e_axis

    std::string str() const;
};

/// Parity-check code correcting one error or two axis-adjacent errors over
/// a box or over a folded shape. Column of position i (exponent k):
///   [1; A i^T mod 2; alpha^k]
/// with A's columns the binary expansions of 0..D-1 and k the row-major
/// index (box) or the folded-row position (shape).
class BurstCode {
public:
    static BurstCode for_box(const std::vector<Coord>& dims, std::uint32_t m);
    /// Requires |S| = 2^m - 1.
    static BurstCode for_folding(const Folding& folding, std::uint32_t m);

    bool is_box() const { return box_dims_.has_value(); }
    std::size_t dim() const { return dim_; }
    std::size_t length() const { return positions_.size(); }
    std::uint32_t field_degree() const { return field_.degree(); }
    std::size_t a_rows() const { return a_rows_; }
    std::size_t redundancy() const { return 1 + a_rows_ + field_.degree(); }
    const Field& field() const { return field_; }

    /// Position carrying exponent k.
    const Point& position(std::size_t k) const { return positions_[k]; }
    std::optional<std::size_t> index_of(const Point& p) const;
    /// Exponent step along axis j: index(p + e_j) - index(p) mod 2^m - 1.
    std::uint64_t stride(std::size_t axis) const { return strides_[axis]; }

    /// Bit 0 parity, bits 1..d the A rows, then field coefficients c_0..c_{m-1}.
    std::uint64_t column(std::size_t k) const { return columns_[k]; }
    /// Rows of H as 0/1 vectors, same bit layout as column().
    std::vector<BitVector> parity_check_matrix() const;

    std::uint64_t syndrome(const BitVector& word) const;
    std::size_t rank() const { return pivots_.size(); }
    std::size_t info_length() const { return length() - rank(); }

    /// Systematic encoding: info bits fill the non-pivot positions in index
    /// order; pivots are the leftmost independent columns of H.
    BitVector encode(const BitVector& info) const;
    ErrorReport decode(const BitVector& received) const;
    /// Flips the cells named by the report; Uncorrectable leaves the word.
    BitVector correct(const BitVector& received, const ErrorReport& report) const;

    /// All axis-adjacent pairs (p, p + e_j) inside the geometry, as
    /// (index, axis) of the first cell.
    std::vector<std::pair<std::size_t, std::size_t>> adjacent_pairs() const;

private:
    BurstCode(std::size_t dim, std::vector<Point> positions, std::vector<std::uint64_t> strides, std::uint32_t m,
              std::optional<std::vector<Coord>> box_dims);

    std::size_t dim_;
    std::vector<Point> positions_;
    std::map<Point, std::size_t> index_;
    std::vector<std::uint64_t> strides_;
    Field field_;
    std::optional<std::vector<Coord>> box_dims_;
    std::size_t a_rows_;
    std::vector<std::uint64_t> columns_;

    // XOR basis over the pivot columns, keyed by leading bit.
    struct BasisEntry {
        std::uint64_t vector = 0;
        std::uint64_t combination = 0;  // bit t set: pivots_[t] used
    };
    std::vector<std::optional<BasisEntry>> basis_;
    std::vector<std::size_t> pivots_;
};

struct RedundancyReport {
    std::size_t redundancy = 0;
    std::size_t patterns = 0;  // 1 + singles + adjacent pairs
    std::size_t trivial_bound = 0;
};

/// Throws std::logic_error if redundancy exceeds trivial_bound + 1.
RedundancyReport redundancy_report(const BurstCode& code);

struct VerifyReport {
    std::size_t patterns = 0;
    std::size_t distinct_syndromes = 0;
    std::size_t decoded_ok = 0;
    bool ok() const { return distinct_syndromes == patterns && decoded_ok == patterns; }
};

/// Exhaustive check over the no-error pattern, all singles and all adjacent
/// pairs: syndromes pairwise distinct, and each pattern added to a
/// pseudo-random codeword decodes back to itself.
VerifyReport verify_code(const BurstCode& code, std::uint64_t seed);

std::string format_bits(const BitVector& bits);
BitVector parse_bits(const std::string& text);

}  // namespace mdfold
