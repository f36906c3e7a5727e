#include "hhbv/coeff.hpp"

#include <doctest.h>

#include <random>

using namespace hhbv;

namespace {

PolyF2 bits(const char* s) { return PolyF2::from_bits(s); }

}  // namespace

TEST_CASE("poly addition")
{
    const PolyF2 d1 = PolyF2::d() + PolyF2::one();
    CHECK((d1 + d1).is_zero());
    CHECK(PolyF2::d() + PolyF2::monomial(2) == bits("011"));
    CHECK(PolyF2{} + PolyF2::monomial(3) == PolyF2::monomial(3));
}

TEST_CASE("poly multiplication")
{
    CHECK(PolyF2::d() * PolyF2::d() == PolyF2::monomial(2));
    const PolyF2 d1 = PolyF2::d() + PolyF2::one();
    CHECK(d1 * d1 == bits("101"));
    CHECK((PolyF2::d() * PolyF2{}).is_zero());
}

TEST_CASE("poly bit strings round trip")
{
    CHECK(bits("1101").to_string() == "d^3+d+1");
    CHECK(bits("1101").to_bits() == "1101");
    CHECK(bits("0").is_zero());
    CHECK(PolyF2{}.to_bits() == "0");
    CHECK_THROWS_AS(bits("12"), std::invalid_argument);
    const PolyF2 wide = PolyF2::monomial(70) + PolyF2::one();
    CHECK(PolyF2::from_bits(wide.to_bits()) == wide);
}

TEST_CASE("poly ring axioms on random operands")
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        PolyF2 a = PolyF2::from_limb(rng()), b = PolyF2::from_limb(rng() >> 20), c = PolyF2::from_limb(rng() >> 40);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        if (!b.is_zero()) {
            auto [q, r] = PolyF2::divmod(a, b);
            CHECK(q * b + r == a);
            CHECK(r.degree() < b.degree());
        }
    }
}

TEST_CASE("gcd")
{
    const PolyF2 d1 = PolyF2::d() + PolyF2::one();
    CHECK(PolyF2::gcd(d1 * PolyF2::d(), d1 * d1) == d1);
    CHECK_THROWS_AS(PolyF2::divmod(PolyF2::one(), PolyF2{}), std::domain_error);
}

TEST_CASE("specialization")
{
    BinaryField f4(2);
    CHECK(f4.modulus() == 0b111);
    const PolyF2 d3 = PolyF2::monomial(3);
    CHECK(specialize(d3, f4.one(), f4) == f4.one());
    const PolyF2 p = bits("1011");
    CHECK(specialize(p, f4.zero(), f4) == f4.one());
    // w^2 = w + 1
    const F2kElem w = f4.elem(2);
    CHECK(f4.mul(w, w) == f4.add(w, f4.one()));
    CHECK(specialize(PolyF2::monomial(2) + PolyF2::d(), w, f4) == f4.one());
}

TEST_CASE("binary field inverses")
{
    BinaryField f(8, 0x11B);
    for (std::uint64_t v = 1; v < 256; ++v) CHECK(f.mul(f.elem(v), f.inv(f.elem(v))) == f.one());
    CHECK_FALSE(BinaryField::is_irreducible(0b101, 2));
    CHECK_THROWS(BinaryField(2, 0b101));
}

TEST_CASE("rational functions")
{
    const PolyF2 d1 = PolyF2::d() + PolyF2::one();
    RationalF2 r(d1 * PolyF2::d(), d1);
    CHECK(r.is_polynomial());
    CHECK(r.num() == PolyF2::d());
    RationalF2 inv = RationalF2(PolyF2::d()).inverse();
    CHECK((inv * RationalF2(PolyF2::d())).is_one());
    CHECK((inv + inv).is_zero());
}
