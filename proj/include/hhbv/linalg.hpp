#pragma once

#include "hhbv/coeff.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace hhbv {

// Field adaptors used by the elimination routines below.
struct RationalField {
    using value_type = RationalF2;
    value_type zero() const { return {}; }
    bool is_zero(const value_type& v) const { return v.is_zero(); }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type inv(const value_type& a) const { return a.inverse(); }
    // Units of GF(2)[d] first, so that witnesses stay polynomial where possible.
    int pivot_cost(const value_type& v) const { return v.num().degree() + v.den().degree(); }
};

struct SpecializedField {
    const BinaryField* field;
    using value_type = F2kElem;
    value_type zero() const { return {}; }
    bool is_zero(const value_type& v) const { return v.value == 0; }
    value_type add(const value_type& a, const value_type& b) const { return field->add(a, b); }
    value_type mul(const value_type& a, const value_type& b) const { return field->mul(a, b); }
    value_type inv(const value_type& a) const { return field->inv(a); }
    int pivot_cost(const value_type& v) const { return v.value == 1 ? 0 : 1; }
};

template <class Field>
using Matrix = std::vector<std::vector<typename Field::value_type>>;  // row-major

// Reduced row echelon form in place; returns the pivot column of each nonzero row.
template <class Field>
std::vector<std::size_t> row_reduce(const Field& f, Matrix<Field>& m, std::size_t ncols)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
        std::size_t best = m.size();
        int best_cost = 0;
        for (std::size_t i = r; i < m.size(); ++i) {
            if (f.is_zero(m[i][c])) continue;
            int cost = f.pivot_cost(m[i][c]);
            if (best == m.size() || cost < best_cost) {
                best = i;
                best_cost = cost;
            }
        }
        if (best == m.size()) continue;
        std::swap(m[r], m[best]);
        auto pinv = f.inv(m[r][c]);
        for (auto& v : m[r]) v = f.mul(v, pinv);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || f.is_zero(m[i][c])) continue;
            auto factor = m[i][c];
            for (std::size_t k = 0; k < m[i].size(); ++k)
                if (!f.is_zero(m[r][k])) m[i][k] = f.add(m[i][k], f.mul(factor, m[r][k]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class Field>
std::size_t rank(const Field& f, Matrix<Field> m)
{
    const std::size_t ncols = m.empty() ? 0 : m[0].size();
    return row_reduce(f, m, ncols).size();
}

// Some x with A x = b (free variables set to zero), or nullopt when inconsistent.
template <class Field>
std::optional<std::vector<typename Field::value_type>> solve(const Field& f, const Matrix<Field>& a,
                                                             const std::vector<typename Field::value_type>& b,
                                                             std::size_t ncols)
{
    Matrix<Field> m = a;
    for (std::size_t i = 0; i < m.size(); ++i) {
        m[i].resize(ncols, f.zero());
        m[i].push_back(b[i]);
    }
    auto pivots = row_reduce(f, m, ncols);
    for (std::size_t i = pivots.size(); i < m.size(); ++i)
        if (!f.is_zero(m[i][ncols])) return std::nullopt;
    std::vector<typename Field::value_type> x(ncols, f.zero());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][ncols];
    return x;
}

}  // namespace hhbv
