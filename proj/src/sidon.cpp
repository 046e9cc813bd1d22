#include "mdfold/sidon.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mdfold {

namespace {

void check_residues(std::uint64_t n, const std::vector<std::uint64_t>& elements) {
    if (n == 0) throw std::invalid_argument("modulus must be positive");
    std::vector<std::uint64_t> sorted = elements;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("B2 candidate contains duplicate residues");
    }
    if (!sorted.empty() && sorted.back() >= n) throw std::invalid_argument("B2 candidate residue outside [0, n)");
}

}  // namespace

bool verify_b2(std::uint64_t n, const std::vector<std::uint64_t>& elements) {
    check_residues(n, elements);
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (std::size_t j = 0; j < elements.size(); ++j) {
            if (i == j) continue;
            const std::uint64_t d = (elements[i] + n - elements[j]) % n;
            if (seen[d]) return false;
            seen[d] = true;
        }
    }
    return true;
}

bool verify_b2_sums(std::uint64_t n, const std::vector<std::uint64_t>& elements) {
    check_residues(n, elements);
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (std::size_t j = i; j < elements.size(); ++j) {
            const std::uint64_t s = (elements[i] + elements[j]) % n;
            if (seen[s]) return false;
            seen[s] = true;
        }
    }
    return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("prime power must be at least 2");
    std::uint64_t p = 2;
    while (q % p) ++p;
    std::uint32_t k = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    return {static_cast<std::uint32_t>(p), k};
}

B2Sequence bose(const Field& extension) {
    if (extension.degree() % 2) throw std::invalid_argument("bose needs an extension of even degree");
    const std::uint64_t big = extension.size();
    const auto q = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(big))));
    const FieldElement theta = extension.generator();

    B2Sequence out{big - 1, {}};
    for (std::uint32_t code = 0; code < big; ++code) {
        const FieldElement a{code};
        if (!(extension.pow(a, q) == a)) continue;
        const FieldElement shifted = extension.add(theta, a);
        // theta lies outside the subfield, so theta + a is never zero.
        if (shifted.code == 0) throw std::logic_error("bose: theta + a vanished");
        out.elements.push_back(extension.dlog(shifted));
    }
    if (out.elements.size() != q) throw std::logic_error("bose: subfield has wrong size");
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

B2Sequence bose(std::uint64_t q) {
    const auto [p, k] = prime_power(q);
    if (q * q > kMaxFieldSize) throw std::invalid_argument("bose: q^2 exceeds the field envelope 2^20");
    return bose(Field::make(p, 2 * k));
}

}  // namespace mdfold
