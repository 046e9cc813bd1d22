#include "mdfold/finite_field.hpp"

#include <sstream>
#include <stdexcept>

namespace mdfold {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f over GF(p), f monic.
Poly poly_rem(Poly a, const Poly& f, std::uint32_t p) {
    trim(a);
    const std::size_t df = f.size() - 1;
    while (a.size() > df) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i) {
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - lead) * f[i]) % p);
        }
        trim(a);
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
        }
    }
    return r;
}

Poly unpack(std::uint32_t code, std::uint32_t p, std::uint32_t k) {
    Poly c(k, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
        c[i] = code % p;
        code /= p;
    }
    return c;
}

std::uint32_t pack(const Poly& c, std::uint32_t p) {
    std::uint32_t code = 0;
    for (std::size_t i = c.size(); i-- > 0;) code = code * p + c[i];
    return code;
}

struct SlowArith {
    std::uint32_t p, k;
    const Poly& modulus;

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        Poly r = poly_rem(poly_mul(unpack(a, p, k), unpack(b, p, k), p), modulus, p);
        r.resize(k, 0);
        return pack(r, p);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t result = 1;
        while (e) {
            if (e & 1) result = mul(result, a);
            a = mul(a, a);
            e >>= 1;
        }
        return result;
    }
    bool primitive(std::uint32_t g, std::uint64_t order, const std::vector<std::uint64_t>& factors) const {
        if (g == 0) return false;
        if (pow(g, order) != 1) return false;
        for (std::uint64_t r : factors) {
            if (pow(g, order / r) == 1) return false;
        }
        return true;
    }
};

std::uint64_t checked_size(std::uint32_t p, std::uint32_t k) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (k == 0) throw std::invalid_argument("field degree must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > kMaxFieldSize) throw std::invalid_argument("field size exceeds 2^20");
    }
    return q;
}

FieldElement least_primitive(std::uint32_t p, const Poly& modulus) {
    const auto k = static_cast<std::uint32_t>(modulus.size() - 1);
    const std::uint64_t q = checked_size(p, k);
    const SlowArith slow{p, k, modulus};
    const auto factors = prime_factors(q - 1);
    for (std::uint32_t g = 1; g < q; ++g) {
        if (slow.primitive(g, q - 1, factors)) return {g};
    }
    throw std::logic_error("no primitive element: modulus is not irreducible");
}

std::string format_poly(const Poly& c) {
    std::string s = "[";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + "]";
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_irreducible(std::uint32_t p, const Poly& f) {
    if (f.size() < 2 || f.back() != 1) throw std::invalid_argument("is_irreducible expects a monic polynomial");
    const auto deg = static_cast<std::uint32_t>(f.size() - 1);
    for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly g = unpack(static_cast<std::uint32_t>(code), p, d);
            g.push_back(1);
            if (poly_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

Field Field::make(std::uint32_t p, std::uint32_t k) {
    const std::uint64_t q = checked_size(p, k);
    for (std::uint64_t code = 0; code < q; ++code) {
        Poly f = unpack(static_cast<std::uint32_t>(code), p, k);
        f.push_back(1);
        if (is_irreducible(p, f)) return with_modulus(p, std::move(f));
    }
    throw std::logic_error("no irreducible polynomial found");
}

Field Field::with_modulus(std::uint32_t p, Poly modulus) {
    if (modulus.size() < 2 || modulus.back() != 1) throw std::invalid_argument("modulus must be monic of degree >= 1");
    checked_size(p, static_cast<std::uint32_t>(modulus.size() - 1));
    if (!is_irreducible(p, modulus)) throw std::invalid_argument("modulus " + format_poly(modulus) + " is reducible");
    const FieldElement g = least_primitive(p, modulus);
    return Field(p, std::move(modulus), g);
}

Field Field::with_modulus(std::uint32_t p, Poly modulus, FieldElement generator) {
    if (modulus.size() < 2 || modulus.back() != 1) throw std::invalid_argument("modulus must be monic of degree >= 1");
    checked_size(p, static_cast<std::uint32_t>(modulus.size() - 1));
    if (!is_irreducible(p, modulus)) throw std::invalid_argument("modulus " + format_poly(modulus) + " is reducible");
    return Field(p, std::move(modulus), generator);
}

Field::Field(std::uint32_t p, Poly modulus, FieldElement generator)
    : p_(p), k_(static_cast<std::uint32_t>(modulus.size() - 1)), modulus_(std::move(modulus)) {
    q_ = static_cast<std::uint32_t>(checked_size(p_, k_));
    if (generator.code == 0 || generator.code >= q_) throw std::invalid_argument("generator out of range");
    const SlowArith slow{p_, k_, modulus_};
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i + 1 < q_; ++i) {
        if (i > 0 && x == 1) throw std::invalid_argument("generator is not primitive");
        exp_[i] = {x};
        log_[x] = i;
        x = slow.mul(x, generator.code);
    }
    if (x != 1) throw std::logic_error("multiplicative group order mismatch");
}

FieldElement Field::from_coeffs(const Poly& coeffs) const {
    if (coeffs.size() > k_) throw std::invalid_argument("too many coefficients for GF(" + std::to_string(q_) + ")");
    Poly c(k_, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i] % p_;
    return {pack(c, p_)};
}

Poly Field::coeffs(FieldElement x) const { return unpack(x.code, p_, k_); }

FieldElement Field::add(FieldElement a, FieldElement b) const {
    if (p_ == 2) return {a.code ^ b.code};
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        out += ((a.code % p_ + b.code % p_) % p_) * scale;
        a.code /= p_;
        b.code /= p_;
        scale *= p_;
    }
    return {out};
}

FieldElement Field::neg(FieldElement a) const {
    if (p_ == 2) return a;
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        out += ((p_ - a.code % p_) % p_) * scale;
        a.code /= p_;
        scale *= p_;
    }
    return {out};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
    if (a.code == 0 || b.code == 0) return zero();
    return exp_[(std::uint64_t{log_[a.code]} + log_[b.code]) % (q_ - 1)];
}

FieldElement Field::inv(FieldElement a) const {
    if (a.code == 0) throw std::domain_error("inverse of zero");
    return exp_[(q_ - 1 - log_[a.code]) % (q_ - 1)];
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
    if (e == 0) return one();
    if (a.code == 0) return zero();
    return exp_[(log_[a.code] * (e % (q_ - 1))) % (q_ - 1)];
}

std::uint32_t Field::dlog(FieldElement x) const {
    if (x.code == 0) throw std::domain_error("discrete log of zero");
    if (x.code >= q_) throw std::invalid_argument("element out of range");
    return log_[x.code];
}

std::string Field::describe() const {
    std::ostringstream ss;
    ss << "GF(" << p_ << "^" << k_ << "), modulus=" << format_poly(modulus_) << ", g=" << format_poly(coeffs(generator()));
    return ss.str();
}

}  // namespace mdfold
