#include "hhbv/resolution.hpp"

#include <doctest.h>

using namespace hhbv;

namespace {

FreeBimodElem t(Word l, Gen g, Word r, const PolyF2& c = PolyF2::one()) { return FreeBimodElem::term(l, g, r, c); }

}  // namespace

TEST_CASE("bimodule action")
{
    const FreeBimodElem rx = FreeBimodElem::generator(Gen::rx);
    CHECK(act(Word::one, rx, Word::one) == rx);
    CHECK(act(Word::x, rx, Word::one) == t(Word::x, Gen::rx, Word::one));
    CHECK(act(Word::x, t(Word::xyxy, Gen::rx, Word::one), Word::one).is_zero());
    // x * x = yxy on both sides
    CHECK(act(Word::x, t(Word::x, Gen::y, Word::x), Word::x) == t(Word::yxy, Gen::y, Word::yxy));
}

TEST_CASE("action is associative")
{
    const FreeBimodElem e = t(Word::y, Gen::x, Word::xy) + t(Word::one, Gen::y, Word::y, PolyF2::d());
    for (Word a : kBasis)
        for (Word b : kBasis) {
            CHECK(act(a, act(b, e, Word::one), Word::one) == act(mul(AlgElem(a), AlgElem(b)), e, AlgElem::one()));
            CHECK(act(Word::one, act(Word::one, e, a), b) == act(AlgElem::one(), e, mul(AlgElem(a), AlgElem(b))));
        }
}

TEST_CASE("maps")
{
    const BimodMap& d0 = minimal_diff(0);
    CHECK(d0.apply(FreeBimodElem::generator(Gen::x)) ==
          t(Word::x, Gen::unit, Word::one) + t(Word::one, Gen::unit, Word::x));
    CHECK(d0.apply(FreeBimodElem{}).is_zero());
    const FreeBimodElem expect = t(Word::one, Gen::x, Word::x) + t(Word::x, Gen::x, Word::one) +
                                 t(Word::y, Gen::x, Word::y) + t(Word::one, Gen::y, Word::xy) +
                                 t(Word::yx, Gen::y, Word::one);
    CHECK(minimal_diff(1).apply(FreeBimodElem::generator(Gen::rx)) == expect);
}

TEST_CASE("composition")
{
    CHECK(compose(minimal_diff(0), minimal_diff(1)).is_zero());
    CHECK(compose(minimal_diff(2), minimal_diff(3)).is_zero());
    const BimodMap& m = minimal_diff(1);
    CHECK(compose(BimodMap::identity(m.target()), m) == m);
    CHECK_THROWS_AS(compose(minimal_diff(0), minimal_diff(2)), std::invalid_argument);
    CHECK_THROWS_AS(m.image(Gen::x), std::invalid_argument);
}

TEST_CASE("printing and parsing generator names")
{
    CHECK(t(Word::x, Gen::rx, Word::one).to_string() == "x|rx|1");
    CHECK(t(Word::one, Gen::unit, Word::xy).to_string() == "1|xy");
    CHECK(parse_gen("ry") == Gen::ry);
    CHECK_FALSE(parse_gen("z").has_value());
}
