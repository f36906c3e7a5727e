#pragma once

#include "hhbv/expr.hpp"

#include <map>
#include <string>
#include <vector>

namespace hhbv {

// Monomials of degree n with at most one p, one w and a single kind of q; these span HH^n.
std::vector<Monomial> candidate_monomials(int n);

// Normal forms of classes in a greedy monomial basis, independent modulo coboundaries over GF(2)(d).
class ClassReducer {
public:
    explicit ClassReducer(ProductCache& cache) : cache_(&cache) {}

    const std::vector<Monomial>& basis(int n);
    // Throws std::runtime_error when f lies outside the span or has non-polynomial coordinates.
    ClassExpr reduce(const Cochain& f);
    ProductCache& cache() { return *cache_; }

private:
    ProductCache* cache_;
    std::map<int, std::vector<Monomial>> basis_;
};

struct SpecializedEntry {
    std::string engine;  // engine normal form with coefficients evaluated
    std::string reference;
    bool consistent = false;  // raw value and engine normal form agree as classes after d -> v
    bool match = false;       // raw value and reference value agree as classes after d -> v
};

struct DeltaEntry {
    Monomial input;
    int degree = 0;
    Cochain raw;
    ClassExpr delta;
    bool reduced_by_coboundary = false;
    ClassExpr reference;
    bool match = false;
    SolveMode mode = SolveMode::trivial;
    bool word_complement_match = false;  // the complementary-word dual reproduces the reference value
    std::optional<SpecializedEntry> specialized;
};

// Generators and all products ab with a, b in the generators or 1, ordered by degree.
std::vector<Monomial> delta_table_inputs();

// Missing inputs map to zero.
using ReferenceTable = std::map<Monomial, ClassExpr>;

DeltaEntry delta_entry(const Monomial& input, const ReferenceTable& reference, ClassReducer& reducer);
std::vector<DeltaEntry> delta_table(const std::vector<Monomial>& inputs, const ReferenceTable& reference, ClassReducer& reducer);

// Fills entry.specialized for d -> v.
void specialize_entry(DeltaEntry& entry, F2kElem v, const BinaryField& field, ProductCache& cache);

// "0", "p1 + w2", "(z^2+1)*p1" with coefficients printed as residues in z.
std::string specialized_string(const ClassExpr& e, F2kElem v, const BinaryField& field);

}  // namespace hhbv
