#include "hhbv/suites.hpp"

#include <doctest.h>

using namespace hhbv;

TEST_CASE("bar complex sweep: serial and parallel agree")
{
    auto s = check_bar_complex(4, Exec::serial);
    auto p = check_bar_complex(4, Exec::parallel);
    CHECK(s.ok());
    CHECK(p.ok());
    CHECK(s.checked == p.checked);
    CHECK(s.checked > 0);
}

TEST_CASE("homotopy sweeps: serial and parallel agree")
{
    auto s = check_homotopy(5, Exec::serial);
    auto p = check_homotopy(5, Exec::parallel);
    CHECK(s.ok());
    CHECK(s.checked == p.checked);
    auto bs = check_bar_homotopy(3, Exec::serial);
    auto bp = check_bar_homotopy(3, Exec::parallel);
    CHECK(bs.ok());
    CHECK(bp.ok());
    CHECK(bs.checked == bp.checked);
}

TEST_CASE("dense psi tables: serial and parallel agree")
{
    PsiTable s(4, Exec::serial), p(4, Exec::parallel);
    REQUIRE(s.max_degree() == 4);
    for (int n = 0; n <= 4; ++n) CHECK(s.level(n) == p.level(n));
    CHECK(check_psi_squares(p, Exec::parallel).ok());
    CHECK(check_psi_squares(s, Exec::serial).checked == check_psi_squares(p, Exec::parallel).checked);
}

TEST_CASE("dense psi table agrees with the memoized comparison")
{
    PsiTable table(3, Exec::parallel);
    Comparison cmp;
    for (int n = 1; n <= 3; ++n)
        for_each_middle(n, [&](std::span<const Word> m) { CHECK(table.at(m) == cmp.psi_middle(m)); });
}

TEST_CASE("middle indices round trip")
{
    std::vector<Word> m{Word::xyx, Word::x, Word::xyxy};
    std::vector<Word> back(m.size());
    PsiTable::middle_from_index(PsiTable::middle_index(m), back);
    CHECK(back == m);
}

TEST_CASE("connes operator sweep: serial and parallel agree")
{
    auto s = check_connes(2, Exec::serial);
    auto p = check_connes(2, Exec::parallel);
    CHECK(s.ok());
    CHECK(s.checked == p.checked);
}
