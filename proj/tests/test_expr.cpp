#include "hhbv/classes.hpp"

#include <doctest.h>

using namespace hhbv;

namespace {

Monomial m(const char* s) { return parse_monomial(s); }

}  // namespace

TEST_CASE("monomials")
{
    CHECK(monomial_name({}) == "1");
    CHECK(monomial_name(m("w1*q1*p1*q1")) == "p1*q1^2*w1");
    CHECK(monomial_degree(m("q1*w1*e")) == 7);
    CHECK(monomial_product(m("q2"), m("p1")) == m("p1*q2"));
    CHECK(monomial_less(m("w3"), m("p1*q1")));
    CHECK(monomial_less(m("p1*q1"), m("p1*q2")));
    CHECK_THROWS_AS(parse_monomial("d*q1"), ParseError);
}

TEST_CASE("class expressions")
{
    ClassExpr a = parse_class_expr("q1^2 + w1 + d(p1+1)w2");
    CHECK(a.to_string() == "w1 + d*w2 + d*p1*w2 + q1^2");
    CHECK(a.degree() == 2);
    CHECK(parse_class_expr("d^3p1q1w1").to_string() == "d^3*p1*q1*w1");
    CHECK(parse_class_expr("q1 + q1").is_zero());
    CHECK(parse_class_expr("0").to_string() == "0");
    CHECK(parse_class_expr("(d+1)*p2 - p2").to_string() == "d*p2");
    CHECK((parse_class_expr("p1") * parse_class_expr("q1 + q2")).to_string() == "p1*q1 + p1*q2");
    CHECK_THROWS_AS(parse_class_expr("q1 +"), ParseError);
    CHECK_THROWS_AS(parse_class_expr("x1"), ParseError);
    CHECK_THROWS_AS(parse_class_expr("q1 + w1").degree(), std::invalid_argument);
}

TEST_CASE("product cache")
{
    ProductCache cache;
    CHECK(cache.get({}) == unit_cochain());
    CHECK(cache.get(m("q1")) == representative(Generator::q1));
    CHECK(cache.get(m("q1*w1")) == cup(representative(Generator::q1), representative(Generator::w1)));
    CHECK(cache.evaluate(parse_class_expr("d*p1"), 0) == PolyF2::d() * representative(Generator::p1));
    CHECK(cache.evaluate(ClassExpr{}, 3).degree() == 3);
    CHECK_THROWS_AS(cache.evaluate(parse_class_expr("q1"), 2), std::invalid_argument);
}

TEST_CASE("candidate monomials")
{
    auto c2 = candidate_monomials(2);
    CHECK(std::find(c2.begin(), c2.end(), m("w1")) != c2.end());
    CHECK(std::find(c2.begin(), c2.end(), m("p3*q2^2")) != c2.end());
    for (const auto& x : c2) CHECK(monomial_degree(x) == 2);
    CHECK(candidate_monomials(-1).empty());
    CHECK(candidate_monomials(0).size() == 5);
}

TEST_CASE("class bases")
{
    ProductCache cache;
    ClassReducer red(cache);
    CHECK(red.basis(0).size() == 5);
    CHECK(red.basis(1).size() == 7);
    CHECK(red.basis(2).size() == 7);
    CHECK(red.basis(3).size() == 5);
    CHECK(red.basis(4).size() == 5);
    for (int n = 0; n <= 4; ++n)
        for (const auto& b : red.basis(n)) CHECK(red.reduce(cache.get(b)) == ClassExpr::monomial(b));
    CHECK(red.reduce(cache.get(m("q1*q2"))).is_zero());
    CHECK(red.reduce(cache.get(m("q2*w3"))) == ClassExpr::monomial(m("q1*w2")));
}

TEST_CASE("table inputs")
{
    auto in = delta_table_inputs();
    CHECK(in.size() == 66);
    CHECK(in.front().empty());
    CHECK(monomial_name(in.back()) == "e^2");
    for (std::size_t i = 1; i < in.size(); ++i) CHECK(monomial_degree(in[i - 1]) <= monomial_degree(in[i]));
}

TEST_CASE("specialized printing")
{
    BinaryField f(8, 0x11B);
    ClassExpr e = parse_class_expr("(d^2+1)*p1 + d*q1^2");
    CHECK(specialized_string(e, f.zero(), f) == "p1");
    CHECK(specialized_string(e, f.one(), f) == "q1^2");
    CHECK(specialized_string(e, f.elem(2), f) == "(z^2+1)*p1 + (z)*q1^2");
}
