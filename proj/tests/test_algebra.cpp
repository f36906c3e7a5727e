#include "hhbv/algebra.hpp"

#include <doctest.h>

using namespace hhbv;

namespace {

AlgElem w(Word x) { return AlgElem(x); }

}  // namespace

TEST_CASE("normal forms of the relations")
{
    CHECK(normal_form("xx") == w(Word::yxy));
    CHECK(normal_form("yy") == w(Word::xyx) + PolyF2::d() * w(Word::xyxy));
    CHECK(normal_form("xyxyx").is_zero());
    CHECK(normal_form("yxyxy").is_zero());
    CHECK(normal_form("yxyx") == w(Word::xyxy));
    CHECK(normal_form("") == AlgElem::one());
    CHECK_THROWS_AS(normal_form("xz"), std::invalid_argument);
}

TEST_CASE("products")
{
    CHECK(w(Word::x) * w(Word::yxy) == w(Word::xyxy));
    CHECK(w(Word::y) * w(Word::y) == w(Word::xyx) + PolyF2::d() * w(Word::xyxy));
    CHECK((w(Word::xyxy) * w(Word::x)).is_zero());
}

TEST_CASE("multiplication is associative with unit 1")
{
    for (Word a : kBasis)
        for (Word b : kBasis) {
            CHECK(basis_product(Word::one, a) == w(a));
            for (Word c : kBasis) CHECK(mul(mul(w(a), w(b)), w(c)) == mul(w(a), mul(w(b), w(c))));
        }
}

TEST_CASE("words longer than four vanish")
{
    for (const char* s : {"xxxxx", "xyxyy", "yyyyy", "xxyxy"}) CHECK(normal_form(s).is_zero());
}

TEST_CASE("bilinear form")
{
    CHECK(bilinear_form(w(Word::x), w(Word::yxy)).is_one());
    CHECK(bilinear_form(AlgElem::one(), w(Word::x)).is_zero());
    CHECK(bilinear_form(w(Word::y), w(Word::xyx)).is_one());
    for (Word a : kBasis)
        for (Word b : kBasis) CHECK(gram_entry(a, b) == gram_entry(b, a));
}

TEST_CASE("dual basis inverts the Gram matrix")
{
    const auto& dual = dual_basis();
    for (Word b : kBasis)
        for (Word c : kBasis) {
            const PolyF2 v = bilinear_form(dual[index(b)], w(c));
            CHECK(v == (b == c ? PolyF2::one() : PolyF2{}));
        }
    CHECK(dual[index(Word::xyxy)] == AlgElem::one());
    CHECK(dual[index(Word::xyx)] == w(Word::y) + PolyF2::d() * w(Word::xyx));
}

TEST_CASE("complementary words")
{
    for (Word b : kBasis) {
        CHECK(basis_product(b, complement_word(b))[kSocle].is_one());
        CHECK(complement_word(complement_word(b)) == b);
    }
}

TEST_CASE("the derivation C")
{
    TensorKQ1 cx = derivation_C(Word::x);
    CHECK(cx.terms().size() == 1);
    CHECK(cx.terms().begin()->first == TensorKQ1::Key{Word::one, Arrow::x, Word::one});

    TensorKQ1 expect;
    expect.add_term(Word::one, Arrow::x, Word::y, PolyF2::one());
    expect.add_term(Word::x, Arrow::y, Word::one, PolyF2::one());
    CHECK(derivation_C(Word::xy) == expect);
    CHECK(derivation_C(Word::one).is_zero());
    CHECK(derivation_C(w(Word::xy) + w(Word::xy)).is_zero());
}

TEST_CASE("printing")
{
    CHECK(AlgElem{}.to_string() == "0");
    CHECK((w(Word::x) + PolyF2::d() * w(Word::xy)).to_string() == "x + d*xy");
    CHECK(((PolyF2::monomial(2) + PolyF2::one()) * w(Word::yxy)).to_string() == "(d^2+1)*yxy");
    CHECK(parse_word("xyx") == Word::xyx);
    CHECK_FALSE(parse_word("xx").has_value());
}
