#include "hhbv/fixtures.hpp"
#include "hhbv/suites.hpp"

#include <doctest.h>

using namespace hhbv;

namespace {

FreeBimodElem t(Word l, Gen g, Word r, const PolyF2& c = PolyF2::one()) { return FreeBimodElem::term(l, g, r, c); }

}  // namespace

TEST_CASE("phi in degree one")
{
    Comparison cmp;
    std::vector<Word> s{Word::one, Word::x, Word::one};
    CHECK(cmp.phi_generator(1, Gen::x) == BarChain::term(s));
}

TEST_CASE("phi is a chain map on generators")
{
    Comparison cmp;
    for (int n = 1; n <= 6; ++n)
        for (Gen g : generators(n)) {
            const BarChain lhs = bar_diff(cmp.phi_generator(n, g));
            const BarChain rhs = cmp.phi(n - 1, apply_diff(n - 1, FreeBimodElem::generator(g)));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("psi in degree two")
{
    Comparison cmp;
    BarChain c(2);
    std::vector<Word> a{Word::one, Word::yxy, Word::x, Word::one}, b{Word::one, Word::x, Word::yxy, Word::one};
    c.add_term(a, PolyF2::one());
    c.add_term(b, PolyF2::one());
    const PolyF2 d = PolyF2::d();
    const FreeBimodElem expect = t(Word::y, Gen::ry, Word::one) + t(Word::one, Gen::ry, Word::y) +
                                 t(Word::y, Gen::ry, Word::y, d) + t(Word::one, Gen::ry, Word::xyx, d) +
                                 t(Word::y, Gen::ry, Word::xyx, d * d);
    CHECK(cmp.psi(c) == expect);
}

TEST_CASE("psi is bimodule linear")
{
    Comparison cmp;
    std::vector<Word> s{Word::y, Word::x, Word::xy, Word::yx};
    std::vector<Word> core{Word::one, Word::x, Word::xy, Word::one};
    CHECK(cmp.psi(BarChain::term(s)) == act(Word::y, cmp.psi(BarChain::term(core)), Word::yx));
}

TEST_CASE("chain map squares")
{
    Comparison cmp;
    CHECK(cmp.verify_chain_maps(4).empty());
    CHECK(cmp.verify_chain_maps(0).empty());
    CHECK(psi3_phi3_is_identity(cmp));
}

TEST_CASE("phi in degree four has thirteen families")
{
    auto fixtures = select_fixtures(load_fixtures(HHBV_DATA_DIR "/fixtures.json"), {"phi4"});
    REQUIRE(!fixtures.empty());
    ProductCache cache;
    for (const auto& f : fixtures) {
        FixtureResult r = run_fixture(f, cache);
        CHECK_MESSAGE(r.match, f.id);
    }
}
