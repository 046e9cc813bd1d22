#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mdfold {

/// Polynomial coefficients over GF(p), lowest degree first.
using Poly = std::vector<std::uint32_t>;

/// Element of GF(p^k) packed as sum of c_i * p^i; the packing order is also
/// the lexicographic order used to pick moduli and generators.
struct FieldElement {
    std::uint32_t code = 0;
    friend bool operator==(FieldElement, FieldElement) = default;
    friend auto operator<=>(FieldElement, FieldElement) = default;
};

inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 20;

bool is_prime(std::uint64_t n);

/// GF(p^k) with exp/log tables over a designated primitive element.
class Field {
public:
    /// Least monic irreducible modulus, then least primitive element.
    static Field make(std::uint32_t p, std::uint32_t k);
    /// Explicit monic modulus (length k+1); generator defaults to the least
    /// primitive element.
    static Field with_modulus(std::uint32_t p, Poly modulus);
    static Field with_modulus(std::uint32_t p, Poly modulus, FieldElement generator);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return k_; }
    std::uint32_t size() const { return q_; }
    const Poly& modulus() const { return modulus_; }
    FieldElement generator() const { return exp_[1 % (q_ - 1)]; }

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }
    FieldElement from_coeffs(const Poly& coeffs) const;
    Poly coeffs(FieldElement x) const;

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;
    FieldElement pow(FieldElement a, std::uint64_t e) const;

    /// generator()^e, e taken modulo q - 1.
    FieldElement exp(std::uint64_t e) const { return exp_[e % (q_ - 1)]; }
    /// Exponent in [0, q-2]; throws std::domain_error for zero.
    std::uint32_t dlog(FieldElement x) const;

    /// "GF(p^k), modulus=[c0,...,ck], g=[...]"
    std::string describe() const;

private:
    Field(std::uint32_t p, Poly modulus, FieldElement generator);

    std::uint32_t p_, k_, q_;
    Poly modulus_;
    std::vector<FieldElement> exp_;
    std::vector<std::uint32_t> log_;
};

inline Field make_field(std::uint32_t p, std::uint32_t k) { return Field::make(p, k); }

/// Monic irreducibility by trial division by every monic polynomial of degree
/// at most deg/2.
bool is_irreducible(std::uint32_t p, const Poly& f);

}  // namespace mdfold
