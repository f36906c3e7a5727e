#include "hhbv/kernels.hpp"

#include <doctest.h>

using namespace hhbv;

namespace {

FreeBimodElem t(Word l, Gen g, Word r, const PolyF2& c = PolyF2::one()) { return FreeBimodElem::term(l, g, r, c); }

BarChain chain(std::initializer_list<Word> slots)
{
    std::vector<Word> s(slots);
    return BarChain::term(s);
}

}  // namespace

TEST_CASE("generators are four-periodic")
{
    CHECK(generators(0) == std::vector<Gen>{Gen::unit});
    CHECK(generators(1) == std::vector<Gen>{Gen::x, Gen::y});
    CHECK(generators(2) == std::vector<Gen>{Gen::rx, Gen::ry});
    CHECK(generators(3) == std::vector<Gen>{Gen::unit});
    CHECK(generators(9) == generators(1));
    CHECK(generators(-1).empty());
}

TEST_CASE("differentials")
{
    CHECK(apply_diff(0, FreeBimodElem::generator(Gen::y)) ==
          t(Word::y, Gen::unit, Word::one) + t(Word::one, Gen::unit, Word::y));
    const PolyF2 d = PolyF2::d();
    const FreeBimodElem expect = t(Word::x, Gen::rx, Word::one) + t(Word::one, Gen::rx, Word::x) +
                                 t(Word::y, Gen::ry, Word::one) + t(Word::one, Gen::ry, Word::y) +
                                 t(Word::y, Gen::ry, Word::y, d) + t(Word::one, Gen::ry, Word::xyx, d) +
                                 t(Word::y, Gen::ry, Word::xyx, d * d);
    CHECK(apply_diff(2, FreeBimodElem::generator(Gen::unit)) == expect);
    CHECK(minimal_diff(3).image(Gen::unit) == lambda_listed());
    CHECK(minimal_diff(6) == minimal_diff(2));
}

TEST_CASE("minimal complex squares to zero")
{
    auto r = check_minimal_complex(7);
    CHECK(r.ok());
    CHECK(r.checked > 0);
}

TEST_CASE("homotopy values")
{
    CHECK(homotopy_t(1, t(Word::x, Gen::x, Word::one)) == FreeBimodElem::generator(Gen::rx));
    CHECK(homotopy_t(2, t(Word::x, Gen::rx, Word::one)) == FreeBimodElem::generator(Gen::unit));
    CHECK(homotopy_t(3, t(Word::y, Gen::unit, Word::one)).is_zero());
    for (Word b : kBasis) CHECK(homotopy_t(0, t(b, Gen::unit, Word::one)) == to_free(derivation_C(b)));
    CHECK(homotopy_t(5, t(Word::x, Gen::x, Word::one)) == homotopy_t(1, t(Word::x, Gen::x, Word::one)));
}

TEST_CASE("augmentation and t_{-1}")
{
    for (Word b : kBasis) CHECK(augmentation(homotopy_t_minus1(AlgElem(b))) == AlgElem(b));
    CHECK(augmentation(t(Word::x, Gen::unit, Word::y)) == AlgElem(Word::xy));
}

TEST_CASE("homotopy identity")
{
    CHECK(check_homotopy(8, Exec::serial).ok());
}

TEST_CASE("bar differential")
{
    CHECK(bar_diff(chain({Word::one, Word::x, Word::one})) ==
          chain({Word::x, Word::one}) + chain({Word::one, Word::x}));
    CHECK(bar_diff(chain({Word::one, Word::x, Word::x, Word::one})) ==
          chain({Word::x, Word::x, Word::one}) + chain({Word::one, Word::yxy, Word::one}) +
              chain({Word::one, Word::x, Word::x}));
    const BarChain c = chain({Word::xy, Word::x, Word::y, Word::yxy, Word::one});
    CHECK(bar_diff(bar_diff(c)).is_zero());
}

TEST_CASE("bar chains reject identity middles")
{
    std::vector<Word> bad{Word::one, Word::one, Word::one};
    CHECK_THROWS_AS(BarChain::term(bad), std::invalid_argument);
    BarChain c(1);
    std::vector<Word> short_slots{Word::x};
    CHECK_THROWS_AS(c.add_term(short_slots, PolyF2::one()), std::invalid_argument);
}

TEST_CASE("contracting homotopy s")
{
    CHECK(homotopy_s(chain({Word::x, Word::one})) == chain({Word::one, Word::x, Word::one}));
    CHECK(homotopy_s(chain({Word::one, Word::x})).is_zero());
    CHECK(homotopy_s(chain({Word::x, Word::y, Word::one})) == chain({Word::one, Word::x, Word::y, Word::one}));
}

TEST_CASE("bar packing round trip")
{
    std::vector<Word> s{Word::xy, Word::x, Word::xyxy, Word::y, Word::one};
    std::vector<Word> back(s.size());
    BarChain::unpack(BarChain::pack(s), back);
    CHECK(back == s);
}
