#pragma once

#include "hhbv/bv.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hhbv {

// Commutative monomial in the generators, factors sorted; empty is the unit.
using Monomial = std::vector<Generator>;

int monomial_degree(const Monomial& m);
// "1", "q1", "p1*q1^2*w1"
std::string monomial_name(const Monomial& m);
Monomial monomial_product(const Monomial& a, const Monomial& b);
// Display order: fewer factors first, then lexicographic.
bool monomial_less(const Monomial& a, const Monomial& b);

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Polynomial in the generators with coefficients in GF(2)[d].
class ClassExpr {
public:
    ClassExpr() = default;
    static ClassExpr monomial(Monomial m, const PolyF2& c = PolyF2::one());

    void add(const Monomial& m, const PolyF2& c);
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, PolyF2>& terms() const { return terms_; }
    // nullopt for zero; throws std::invalid_argument when the terms have different degrees.
    std::optional<int> degree() const;

    ClassExpr& operator+=(const ClassExpr& o);
    friend ClassExpr operator+(ClassExpr a, const ClassExpr& b) { return a += b; }
    friend ClassExpr operator*(const ClassExpr& a, const ClassExpr& b);
    friend bool operator==(const ClassExpr&, const ClassExpr&) = default;

    // "0", "d*p1", "w1 + d*w2 + q1^2 + d*p1*w2"
    std::string to_string() const;

private:
    std::map<Monomial, PolyF2> terms_;
};

// Sums, products (juxtaposition or '*'), '^', parentheses, d, 0, 1 and generator names.
ClassExpr parse_class_expr(std::string_view text);
// A single product of generators with coefficient 1, e.g. "q1*w1" or "1".
Monomial parse_monomial(std::string_view text);

// Cochain representatives of monomials (left-associated cups), memoized.
class ProductCache {
public:
    explicit ProductCache(Comparison& cmp = shared_comparison()) : cmp_(&cmp) {}
    const Cochain& get(const Monomial& m);
    // Throws std::invalid_argument when expr is not homogeneous of the given degree.
    Cochain evaluate(const ClassExpr& expr, int degree);
    Comparison& comparison() { return *cmp_; }

private:
    Comparison* cmp_;
    std::map<Monomial, Cochain> memo_;
};

struct RelationCheck {
    std::string relation;
    int degree = 0;
    bool raw_zero = false;
    bool coboundary = false;
    SolveMode mode = SolveMode::trivial;
};

std::vector<RelationCheck> check_ideal_relations(const std::vector<std::string>& relations, ProductCache& cache);

}  // namespace hhbv
