#include "hhbv/suites.hpp"

#include <doctest.h>

using namespace hhbv;

namespace {

AlgElem w(Word x, const PolyF2& c = PolyF2::one()) { return AlgElem(x, c); }
const Cochain& rep(Generator g) { return representative(g); }
const PolyF2 d = PolyF2::d();

std::vector<Word> mid(std::initializer_list<Word> ws) { return ws; }

}  // namespace

TEST_CASE("generator catalog")
{
    CHECK(rep(Generator::p1).to_string() == "xy + yx");
    CHECK(rep(Generator::p4).values()[0] == w(Word::xyxy));
    CHECK(rep(Generator::q1).to_string() == "(y, 1 + d*y + xy)");
    CHECK(rep(Generator::q2).values()[1] == w(Word::x) + w(Word::xy, d));
    CHECK(rep(Generator::w3).to_string() == "(y, x + d*xy)");
    CHECK(rep(Generator::e).values()[0] == AlgElem::one());
    for (Generator g : kGenerators) {
        CHECK(rep(g).degree() == generator_degree(g));
        CHECK(parse_generator(generator_name(g)) == g);
    }
    CHECK(check_cocycles().ok());
    CHECK_FALSE(parse_generator("q3").has_value());
}

TEST_CASE("cochains")
{
    Cochain f(1);
    f.set(Gen::x, w(Word::y));
    CHECK(f.evaluate(FreeBimodElem::term(Word::x, Gen::x, Word::one)) == w(Word::xy));
    CHECK(f.evaluate(FreeBimodElem::generator(Gen::y)).is_zero());
    CHECK((f + f).is_zero());
    CHECK_THROWS_AS(f.set(Gen::rx, AlgElem::one()), std::invalid_argument);
    CHECK(Cochain(-1).is_zero());
    CHECK(Cochain(2).to_string() == "(0, 0)");
}

TEST_CASE("composite with psi")
{
    BarCochain q1 = cochain_to_bar(rep(Generator::q1));
    BarCochain q2 = cochain_to_bar(rep(Generator::q2));
    CHECK(q1(mid({Word::x})) == w(Word::y));
    CHECK(q2(mid({Word::y})) == w(Word::xy, d) + w(Word::x));
    BarCochain e = cochain_to_bar(rep(Generator::e));
    CHECK(e.evaluate(shared_comparison().phi(4, FreeBimodElem::generator(Gen::unit))) == AlgElem::one());
}

TEST_CASE("pullback inverts the composite on generators")
{
    for (Generator g : kGenerators) CHECK(pullback(cochain_to_bar(rep(g))) == rep(g));
}

TEST_CASE("circle products")
{
    BarCochain p1 = cochain_to_bar(rep(Generator::p1));
    BarCochain q1 = cochain_to_bar(rep(Generator::q1));
    BarCochain c0 = circle(p1, q1);
    CHECK(c0.degree() == 0);
    CHECK(c0(mid({})).is_zero());

    BarCochain qq = circle_i(q1, q1, 1);
    CHECK(qq(mid({Word::x})) == q1(mid({Word::y})));
    // q1(y) = 1 + dy + xy loses its identity component before insertion
    CHECK(qq(mid({Word::y})) == d * q1(mid({Word::y})) + q1(mid({Word::xy})));

    BarCochain w1 = cochain_to_bar(rep(Generator::w1));
    BarCochain id = identity_bar_cochain();
    for (int i = 1; i <= 2; ++i) {
        BarCochain c = circle_i(w1, id, i);
        for (Word a : kBasis)
            for (Word b : kBasis) {
                if (a == Word::one || b == Word::one) continue;
                CHECK(c(mid({a, b})) == w1(mid({a, b})));
            }
    }
}

TEST_CASE("cup products as classes")
{
    Cochain q1q1(2, {w(Word::x), AlgElem::one()});
    CHECK(same_class(cup(rep(Generator::q1), rep(Generator::q1)), q1q1));
    CHECK(is_coboundary(cup(rep(Generator::q1), rep(Generator::q2))).coboundary);
    Cochain p4q1q1(2, {AlgElem{}, w(Word::xyxy)});
    CHECK(same_class(cup(rep(Generator::p4), cup(rep(Generator::q1), rep(Generator::q1))), p4q1q1));
    CHECK(cup(unit_cochain(), rep(Generator::w2)) == rep(Generator::w2));
}

TEST_CASE("brackets")
{
    const Cochain e = rep(Generator::e);
    Cochain q1e = gerstenhaber_bracket(rep(Generator::q1), e);
    CHECK(q1e.degree() == 4);
    CHECK(q1e.values()[0] == w(Word::xy, d) + w(Word::yx, d));
    Cochain q2e = gerstenhaber_bracket(rep(Generator::q2), e);
    CHECK(q2e.values()[0] == w(Word::xyx, d));
    CHECK(same_class(q2e, d * cup(rep(Generator::p2), e)));
    for (Generator v : {Generator::w1, Generator::w2, Generator::w3})
        CHECK(is_coboundary(gerstenhaber_bracket(rep(v), e)).coboundary);
    CHECK(gerstenhaber_bracket(rep(Generator::p1), rep(Generator::p2)).is_zero());
}

TEST_CASE("raw [q1,e] is d*p1*e, a nonzero class")
{
    const Cochain e = rep(Generator::e);
    Cochain q1e = gerstenhaber_bracket(rep(Generator::q1), e);
    CHECK(q1e == d * cup(rep(Generator::p1), e));
    CHECK_FALSE(is_coboundary(q1e).coboundary);
}

TEST_CASE("delta in low degrees")
{
    CHECK(delta(rep(Generator::q1)) == d * rep(Generator::p1));
    CHECK(delta(rep(Generator::q2)).is_zero());
    Cochain dp = delta(rep(Generator::p1));
    CHECK(dp.degree() == -1);
    CHECK(dp.is_zero());
    Cochain bad(1);
    bad.set(Gen::x, w(Word::x));
    CHECK_THROWS_AS(delta(bad), NotCocycle);
}

TEST_CASE("delta vanishes on degree-two products")
{
    ProductCache cache;
    for (const char* m : {"w1", "w2", "w3", "q1^2", "q2^2", "q1*q2", "p1*w1", "p2*w3", "p4*q1^2", "p3*q1*q2"})
        CHECK_MESSAGE(is_coboundary(delta(cache.get(parse_monomial(m)))).coboundary, m);
}

TEST_CASE("coboundary solving")
{
    auto z = is_coboundary(Cochain(3));
    CHECK(z.coboundary);
    REQUIRE(z.witness.has_value());
    CHECK(z.witness->is_zero());
    CHECK_FALSE(is_coboundary(rep(Generator::q1)).coboundary);
    CHECK_FALSE(is_coboundary(rep(Generator::e)).coboundary);
    Cochain h(1, {w(Word::x), w(Word::yx, d)});
    Cochain f = coboundary_of(h);
    auto r = is_coboundary(f);
    CHECK(r.coboundary);
    REQUIRE(r.witness.has_value());
    CHECK(coboundary_of(*r.witness) == f);
    CHECK(r.mode == SolveMode::symbolic);
    CHECK_THROWS_AS(is_coboundary(Cochain(1, {w(Word::x), AlgElem{}})), NotCocycle);
}

TEST_CASE("coboundaries survive specialization")
{
    BinaryField f(8, 0x11B);
    Cochain h(2, {w(Word::y), w(Word::x, d)});
    Cochain c = coboundary_of(h);
    for (std::uint64_t v : {0, 1, 2, 77}) CHECK(is_coboundary_at(c, f.elem(v), f));
    CHECK_FALSE(is_coboundary_at(rep(Generator::w1), f.elem(1), f));
}

TEST_CASE("connes operator")
{
    HomologyChain a(0);
    std::vector<Word> x{Word::x};
    a.add_term(x, PolyF2::one());
    HomologyChain expect(1);
    std::vector<Word> s1{Word::one, Word::x}, s2{Word::x, Word::one};
    expect.add_term(s1, PolyF2::one());
    expect.add_term(s2, PolyF2::one());
    CHECK(connes_B(a) == expect);

    HomologyChain xy(1);
    std::vector<Word> t{Word::x, Word::y};
    xy.add_term(t, PolyF2::one());
    HomologyChain e2(2);
    for (auto s : {mid({Word::one, Word::x, Word::y}), mid({Word::one, Word::y, Word::x}),
                   mid({Word::x, Word::one, Word::y}), mid({Word::y, Word::one, Word::x})})
        e2.add_term(s, PolyF2::one());
    CHECK(connes_B(xy) == e2);
    CHECK(connes_B(connes_B(xy)).is_zero());
    CHECK(check_connes(3, Exec::parallel).ok());
}

TEST_CASE("relations")
{
    ProductCache cache;
    auto r = check_ideal_relations({"p3*q1 + p2*q2", "q1*q2", "w1*w2", "p1*p2"}, cache);
    REQUIRE(r.size() == 4);
    for (const auto& c : r) CHECK_MESSAGE(c.coboundary, c.relation);
    CHECK(r[3].raw_zero);
}

TEST_CASE("property suites")
{
    ProductCache cache;
    CHECK(check_graded_commutativity(cache).ok());
    CHECK(check_bv_identity(cache).ok());
    CHECK(check_poisson(cache, 16, 3).ok());
}

TEST_CASE("complementary-word dual: reproduces printed values, breaks the BV identity")
{
    ProductCache cache;
    Comparison& cmp = cache.comparison();
    const Cochain& q1w1 = cache.get(parse_monomial("q1*w1"));
    CHECK(same_class(delta(q1w1, DualChoice::word_complement, cmp), rep(Generator::w3)));
    CHECK_FALSE(same_class(delta(q1w1, DualChoice::form_dual, cmp), rep(Generator::w3)));
    CHECK(is_coboundary(delta(rep(Generator::e), DualChoice::form_dual, cmp)).coboundary);
    CHECK_FALSE(check_bv_identity(cache, DualChoice::word_complement).ok());
}
