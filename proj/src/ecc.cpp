#include "mdfold/ecc.hpp"

#include <bit>
#include <random>
#include <set>
#include <stdexcept>

namespace mdfold {

namespace {

std::size_t ceil_log2(std::size_t n) {
    std::size_t d = 0;
    while ((std::size_t{1} << d) < n) ++d;
    return d;
}

std::uint32_t check_degree(std::uint32_t m, std::size_t positions) {
    if (m == 0 || m > 20) throw std::invalid_argument("field degree m must be in [1, 20]");
    if ((std::uint64_t{1} << m) - 1 < positions) {
        throw std::invalid_argument("2^m - 1 = " + std::to_string((std::uint64_t{1} << m) - 1) + " is smaller than " +
                                    std::to_string(positions) + " positions");
    }
    return m;
}

Point unit(std::size_t dim, std::size_t axis) {
    Point e(dim, 0);
    e[axis] = 1;
    return e;
}

}  // namespace

std::string ErrorReport::str() const {
    switch (kind) {
        case Kind::None: return "none";
        case Kind::Single: return "single " + format_point(position);
        case Kind::Burst2: {
            Point second = position;
            ++second[axis];
            return "burst2 " + format_point(position) + " " + format_point(second) + " axis " + std::to_string(axis);
        }
        case Kind::Uncorrectable: break;
    }
    return "uncorrectable";
}

BurstCode BurstCode::for_box(const std::vector<Coord>& dims, std::uint32_t m) {
    Shape box = box_shape(dims);
    check_degree(m, box.size());
    std::vector<std::uint64_t> strides(dims.size());
    std::uint64_t s = 1;
    for (std::size_t j = dims.size(); j-- > 0;) {
        strides[j] = s;
        s *= static_cast<std::uint64_t>(dims[j]);
    }
    return BurstCode(dims.size(), box.points(), std::move(strides), m, dims);
}

BurstCode BurstCode::for_folding(const Folding& folding, std::uint32_t m) {
    check_degree(m, folding.size());
    if ((std::uint64_t{1} << m) - 1 != folding.size()) {
        throw std::invalid_argument("folded geometry needs exactly 2^m - 1 = " +
                                    std::to_string((std::uint64_t{1} << m) - 1) + " cells, shape has " +
                                    std::to_string(folding.size()));
    }
    std::vector<std::uint64_t> strides;
    for (std::size_t j = 0; j < folding.shape().dim(); ++j) strides.push_back(folding.index(unit(folding.shape().dim(), j)));
    return BurstCode(folding.shape().dim(), folding.order(), std::move(strides), m, std::nullopt);
}

BurstCode::BurstCode(std::size_t dim, std::vector<Point> positions, std::vector<std::uint64_t> strides,
                     std::uint32_t m, std::optional<std::vector<Coord>> box_dims)
    : dim_(dim),
      positions_(std::move(positions)),
      strides_(std::move(strides)),
      field_(Field::make(2, m)),
      box_dims_(std::move(box_dims)),
      a_rows_(ceil_log2(dim)) {
    for (std::size_t k = 0; k < positions_.size(); ++k) index_[positions_[k]] = k;

    columns_.reserve(positions_.size());
    for (std::size_t k = 0; k < positions_.size(); ++k) {
        std::uint64_t col = 1;
        // Row r of A holds bit r of the column label j.
        for (std::size_t r = 0; r < a_rows_; ++r) {
            std::uint64_t parity = 0;
            for (std::size_t j = 0; j < dim_; ++j) {
                if ((j >> r) & 1) parity ^= static_cast<std::uint64_t>(positions_[k][j]) & 1;
            }
            col |= parity << (1 + r);
        }
        col |= std::uint64_t{field_.exp(k).code} << (1 + a_rows_);
        columns_.push_back(col);
    }

    basis_.assign(redundancy(), std::nullopt);
    for (std::size_t k = 0; k < columns_.size(); ++k) {
        std::uint64_t v = columns_[k];
        std::uint64_t combo = 0;
        while (v) {
            const auto lead = static_cast<std::size_t>(63 - std::countl_zero(v));
            if (!basis_[lead]) {
                basis_[lead] = BasisEntry{v, combo ^ (std::uint64_t{1} << pivots_.size())};
                pivots_.push_back(k);
                break;
            }
            v ^= basis_[lead]->vector;
            combo ^= basis_[lead]->combination;
        }
    }
}

std::optional<std::size_t> BurstCode::index_of(const Point& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<BitVector> BurstCode::parity_check_matrix() const {
    std::vector<BitVector> rows(redundancy(), BitVector(length(), 0));
    for (std::size_t k = 0; k < length(); ++k) {
        for (std::size_t r = 0; r < redundancy(); ++r) rows[r][k] = (columns_[k] >> r) & 1;
    }
    return rows;
}

std::uint64_t BurstCode::syndrome(const BitVector& word) const {
    if (word.size() != length()) throw std::invalid_argument("word length does not match the code length");
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (word[k]) s ^= columns_[k];
    }
    return s;
}

BitVector BurstCode::encode(const BitVector& info) const {
    if (info.size() != info_length()) {
        throw std::invalid_argument("info length " + std::to_string(info.size()) + " != " +
                                    std::to_string(info_length()));
    }
    BitVector word(length(), 0);
    std::vector<bool> is_pivot(length(), false);
    for (auto k : pivots_) is_pivot[k] = true;
    std::size_t next = 0;
    for (std::size_t k = 0; k < length(); ++k) {
        if (!is_pivot[k]) word[k] = info[next++] & 1;
    }
    // Pivot bits must cancel the syndrome of the information part.
    std::uint64_t v = syndrome(word);
    std::uint64_t combo = 0;
    while (v) {
        const auto lead = static_cast<std::size_t>(63 - std::countl_zero(v));
        if (!basis_[lead]) throw std::logic_error("encode: syndrome outside the column span");
        v ^= basis_[lead]->vector;
        combo ^= basis_[lead]->combination;
    }
    for (std::size_t t = 0; t < pivots_.size(); ++t) {
        if ((combo >> t) & 1) word[pivots_[t]] ^= 1;
    }
    return word;
}

ErrorReport BurstCode::decode(const BitVector& received) const {
    const std::uint64_t s = syndrome(received);
    if (s == 0) return {};
    const ErrorReport failure{ErrorReport::Kind::Uncorrectable, {}, 0};
    const std::uint64_t a_part = (s >> 1) & ((std::uint64_t{1} << a_rows_) - 1);
    const FieldElement f_part{static_cast<std::uint32_t>(s >> (1 + a_rows_))};
    if (f_part.code == 0) return failure;
    const std::uint64_t order = field_.size() - 1;

    if (s & 1) {
        const std::size_t k = field_.dlog(f_part);
        if (k >= length() || columns_[k] != s) return failure;
        return {ErrorReport::Kind::Single, positions_[k], 0};
    }

    // Column j of A is the binary expansion of j.
    const std::size_t axis = static_cast<std::size_t>(a_part);
    if (axis >= dim_ || strides_[axis] % order == 0) return failure;
    const FieldElement factor = field_.add(field_.one(), field_.exp(strides_[axis]));
    if (factor.code == 0) return failure;
    const std::size_t k = (field_.dlog(f_part) + order - field_.dlog(factor)) % order;
    if (k >= length()) return failure;
    Point second = positions_[k];
    ++second[axis];
    const auto k2 = index_of(second);
    if (!k2 || (columns_[k] ^ columns_[*k2]) != s) return failure;
    return {ErrorReport::Kind::Burst2, positions_[k], axis};
}

BitVector BurstCode::correct(const BitVector& received, const ErrorReport& report) const {
    BitVector word = received;
    if (report.kind == ErrorReport::Kind::Single || report.kind == ErrorReport::Kind::Burst2) {
        word[*index_of(report.position)] ^= 1;
    }
    if (report.kind == ErrorReport::Kind::Burst2) {
        Point second = report.position;
        ++second[report.axis];
        word[*index_of(second)] ^= 1;
    }
    return word;
}

std::vector<std::pair<std::size_t, std::size_t>> BurstCode::adjacent_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t k = 0; k < length(); ++k) {
        for (std::size_t j = 0; j < dim_; ++j) {
            Point q = positions_[k];
            ++q[j];
            if (index_of(q)) out.emplace_back(k, j);
        }
    }
    return out;
}

RedundancyReport redundancy_report(const BurstCode& code) {
    RedundancyReport report;
    report.redundancy = code.redundancy();
    report.patterns = 1 + code.length() + code.adjacent_pairs().size();
    report.trivial_bound = ceil_log2(report.patterns);
    if (report.redundancy > report.trivial_bound + 1) {
        throw std::logic_error("redundancy " + std::to_string(report.redundancy) + " exceeds trivial bound " +
                               std::to_string(report.trivial_bound) + " + 1");
    }
    return report;
}

VerifyReport verify_code(const BurstCode& code, std::uint64_t seed) {
    std::vector<ErrorReport> patterns{ErrorReport{}};
    for (std::size_t k = 0; k < code.length(); ++k) {
        patterns.push_back({ErrorReport::Kind::Single, code.position(k), 0});
    }
    for (const auto& [k, axis] : code.adjacent_pairs()) {
        patterns.push_back({ErrorReport::Kind::Burst2, code.position(k), axis});
    }

    std::mt19937_64 rng(seed);
    VerifyReport report;
    report.patterns = patterns.size();
    std::set<std::uint64_t> syndromes;
    const BitVector zero(code.length(), 0);
    for (const auto& e : patterns) {
        const BitVector error = code.correct(zero, e);
        syndromes.insert(code.syndrome(error));

        BitVector info(code.info_length());
        for (auto& b : info) b = rng() & 1;
        const BitVector sent = code.encode(info);
        BitVector received = sent;
        for (std::size_t k = 0; k < received.size(); ++k) received[k] ^= error[k];
        const ErrorReport got = code.decode(received);
        if (got.kind == e.kind && got.position == e.position && got.axis == e.axis &&
            code.correct(received, got) == sent) {
            ++report.decoded_ok;
        }
    }
    report.distinct_syndromes = syndromes.size();
    return report;
}

std::string format_bits(const BitVector& bits) {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) s += b ? '1' : '0';
    return s;
}

BitVector parse_bits(const std::string& text) {
    BitVector bits;
    for (char c : text) {
        if (c == '0' || c == '1') bits.push_back(static_cast<std::uint8_t>(c - '0'));
        else if (c != ' ' && c != '\n' && c != '\t') throw std::invalid_argument("bit strings may only contain 0 and 1");
    }
    return bits;
}

}  // namespace mdfold
