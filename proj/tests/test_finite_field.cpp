#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "mdfold/finite_field.hpp"
#include "oracles.hpp"

using namespace mdfold;

TEST_CASE("field construction examples") {
    const Field f16 = Field::make(2, 4);
    CHECK(f16.size() == 16);
    CHECK(f16.modulus() == Poly{1, 1, 0, 0, 1});

    const Field f9 = Field::make(3, 2);
    CHECK(f9.size() == 9);
    CHECK(is_irreducible(3, f9.modulus()));
    // x^2 + x + 2 has no root in GF(3).
    for (std::uint32_t r = 0; r < 3; ++r) CHECK((r * r + r + 2) % 3 != 0);
    CHECK(is_irreducible(3, {2, 1, 1}));
    CHECK_FALSE(is_irreducible(3, {2, 0, 1}));  // x^2 + 2 = (x + 1)(x + 2)

    const Field f2 = Field::make(2, 1);
    CHECK(f2.size() == 2);
    CHECK(f2.generator() == f2.one());

    CHECK_THROWS_AS(Field::make(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 21), std::invalid_argument);
    CHECK_THROWS_AS(Field::with_modulus(3, {2, 0, 1}), std::invalid_argument);
}

TEST_CASE("dlog examples") {
    const Field f = Field::make(2, 4);
    CHECK(f.dlog(f.one()) == 0);
    CHECK(f.dlog(f.generator()) == 1);
    CHECK_THROWS_AS(f.dlog(f.zero()), std::domain_error);

    const Field f9 = Field::with_modulus(3, {2, 1, 1}, FieldElement{3});
    const FieldElement x{3}, x_plus_1{4};
    CHECK(f9.generator() == x);
    CHECK(f9.dlog(x_plus_1) == 7);
    const oracle::PolyField ref{3, {2, 1, 1}};
    CHECK(ref.log_of({0, 1}, {1, 1}) == 7);
    CHECK(ref.log_of({0, 1}, {2, 1}) == 6);
    CHECK(f9.dlog(f9.from_coeffs({2, 1})) == 6);
    CHECK_THROWS_AS(Field::with_modulus(3, {2, 1, 1}, FieldElement{1}), std::invalid_argument);
}

TEST_CASE("multiplication matches schoolbook polynomials") {
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 4}, {3, 2}, {5, 2}, {2, 6}, {7, 2}, {3, 3}}) {
        const Field f = Field::make(p, k);
        const oracle::PolyField ref{p, f.modulus()};
        std::mt19937_64 rng(p * 100 + k);
        for (int t = 0; t < 200; ++t) {
            const FieldElement a{static_cast<std::uint32_t>(rng() % f.size())};
            const FieldElement b{static_cast<std::uint32_t>(rng() % f.size())};
            auto ca = f.coeffs(a), cb = f.coeffs(b);
            ca.resize(k), cb.resize(k);
            CHECK(f.mul(a, b).code == oracle::PolyField::code(ref.mul(ca, cb), p));
        }
        // Generator powers through the oracle.
        std::vector<std::uint32_t> acc(k, 0);
        acc[0] = 1;
        auto g = f.coeffs(f.generator());
        g.resize(k);
        for (std::uint32_t e = 0; e < f.size() - 1; ++e) {
            CHECK(f.exp(e).code == oracle::PolyField::code(acc, p));
            acc = ref.mul(acc, g);
        }
    }
}

TEST_CASE("field invariants") {
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {2, 8}, {3, 4}, {13, 1}, {7, 2}}) {
        const Field f = Field::make(p, k);
        std::set<std::uint32_t> powers;
        for (std::uint32_t e = 0; e + 1 < f.size(); ++e) {
            const FieldElement x = f.exp(e);
            CHECK(f.dlog(x) == e);
            powers.insert(x.code);
        }
        CHECK(powers.size() == f.size() - 1);
        CHECK_FALSE(powers.count(0));

        std::mt19937_64 rng(k);
        auto pick = [&] { return FieldElement{static_cast<std::uint32_t>(rng() % f.size())}; };
        for (int t = 0; t < 100; ++t) {
            const auto a = pick(), b = pick(), c = pick();
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.pow(f.add(a, b), p) == f.add(f.pow(a, p), f.pow(b, p)));
            CHECK(f.sub(f.add(a, b), b) == a);
            CHECK(f.add(a, f.neg(a)) == f.zero());
            if (a != f.zero()) CHECK(f.mul(a, f.inv(a)) == f.one());
        }
    }
}

TEST_CASE("describe names the field") {
    CHECK(Field::make(2, 4).describe().rfind("GF(2^4)", 0) == 0);
}
