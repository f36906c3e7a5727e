#include "hhbv/classes.hpp"

#include "hhbv/linalg.hpp"

#include <algorithm>
#include <set>

namespace hhbv {

std::vector<Monomial> candidate_monomials(int n)
{
    std::vector<Monomial> out;
    if (n < 0) return out;
    const std::vector<std::optional<Generator>> ps{std::nullopt, Generator::p1, Generator::p2, Generator::p3, Generator::p4};
    const std::vector<std::optional<Generator>> ws{std::nullopt, Generator::w1, Generator::w2, Generator::w3};
    for (int c = 0; 4 * c <= n; ++c) {
        for (const auto& w : ws) {
            const int a = n - 4 * c - (w ? 2 : 0);
            if (a < 0) continue;
            for (Generator q : {Generator::q1, Generator::q2}) {
                if (a == 0 && q == Generator::q2) continue;
                for (const auto& p : ps) {
                    Monomial m;
                    if (p) m.push_back(*p);
                    for (int i = 0; i < a; ++i) m.push_back(q);
                    if (w) m.push_back(*w);
                    for (int i = 0; i < c; ++i) m.push_back(Generator::e);
                    out.push_back(m);
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), monomial_less);
    return out;
}

namespace {

Matrix<RationalField> columns_to_matrix(const std::vector<std::vector<PolyF2>>& cols, std::size_t rows)
{
    Matrix<RationalField> m(rows, std::vector<RationalF2>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < rows; ++r) m[r][c] = RationalF2(cols[c][r]);
    return m;
}

std::vector<std::vector<PolyF2>> coboundary_columns(int n)
{
    std::vector<std::vector<PolyF2>> cols;
    if (n < 1) return cols;
    const auto& m = coboundary_matrix(n);
    for (std::size_t c = 0; c < m[0].size(); ++c) {
        std::vector<PolyF2> col;
        for (const auto& row : m) col.push_back(row[c]);
        cols.push_back(std::move(col));
    }
    return cols;
}

}  // namespace

const std::vector<Monomial>& ClassReducer::basis(int n)
{
    if (auto it = basis_.find(n); it != basis_.end()) return it->second;
    const std::size_t rows = generators(n).size() * kBasisSize;
    auto cols = coboundary_columns(n);
    RationalField rf;
    std::size_t r = rank(rf, columns_to_matrix(cols, rows));
    std::vector<Monomial> chosen;
    for (const auto& m : candidate_monomials(n)) {
        if (r == rows) break;
        cols.push_back(flatten(cache_->get(m)));
        std::size_t r2 = rank(rf, columns_to_matrix(cols, rows));
        if (r2 > r) {
            chosen.push_back(m);
            r = r2;
        }
        else {
            cols.pop_back();
        }
    }
    return basis_.emplace(n, std::move(chosen)).first->second;
}

ClassExpr ClassReducer::reduce(const Cochain& f)
{
    const int n = f.degree();
    if (n < 0 || f.is_zero()) return {};
    const auto& b = basis(n);
    const std::size_t rows = generators(n).size() * kBasisSize;
    auto cols = coboundary_columns(n);
    const std::size_t offset = cols.size();
    for (const auto& m : b) cols.push_back(flatten(cache_->get(m)));
    RationalField rf;
    std::vector<RationalF2> rhs;
    for (const auto& p : flatten(f)) rhs.emplace_back(p);
    auto x = solve(rf, columns_to_matrix(cols, rows), rhs, cols.size());
    if (!x) throw std::runtime_error("class outside the monomial span in degree " + std::to_string(n));
    ClassExpr out;
    for (std::size_t i = 0; i < b.size(); ++i) {
        const RationalF2& c = (*x)[offset + i];
        if (!c.is_polynomial()) throw std::runtime_error("non-polynomial class coordinate " + c.to_string());
        out.add(b[i], c.num());
    }
    return out;
}

std::vector<Monomial> delta_table_inputs()
{
    std::vector<Monomial> units{{}};
    for (Generator g : kGenerators) units.push_back({g});
    std::set<Monomial> seen;
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < units.size(); ++i)
        for (std::size_t j = i; j < units.size(); ++j) {
            Monomial m = monomial_product(units[i], units[j]);
            if (seen.insert(m).second) out.push_back(m);
        }
    std::stable_sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        int da = monomial_degree(a), db = monomial_degree(b);
        if (da != db) return da < db;
        return monomial_less(a, b);
    });
    return out;
}

DeltaEntry delta_entry(const Monomial& input, const ReferenceTable& reference, ClassReducer& reducer)
{
    ProductCache& cache = reducer.cache();
    DeltaEntry e;
    e.input = input;
    e.degree = monomial_degree(input);
    const int out_deg = std::max(e.degree - 1, -1);
    const Cochain& f = cache.get(input);
    e.raw = delta(f, DualChoice::form_dual, cache.comparison());
    e.delta = reducer.reduce(e.raw);
    e.reduced_by_coboundary = !(e.raw == cache.evaluate(e.delta, out_deg));
    if (auto it = reference.find(input); it != reference.end()) e.reference = it->second;
    const Cochain reference_value = cache.evaluate(e.reference, out_deg);
    CoboundaryResult cb = is_coboundary(e.raw + reference_value);
    e.match = cb.coboundary;
    e.mode = cb.mode;
    try {
        e.word_complement_match =
            is_coboundary(delta(f, DualChoice::word_complement, cache.comparison()) + reference_value).coboundary;
    }
    catch (const NotCocycle&) {
        e.word_complement_match = false;
    }
    return e;
}

std::vector<DeltaEntry> delta_table(const std::vector<Monomial>& inputs, const ReferenceTable& reference, ClassReducer& reducer)
{
    std::vector<DeltaEntry> out;
    out.reserve(inputs.size());
    for (const auto& m : inputs) out.push_back(delta_entry(m, reference, reducer));
    return out;
}

std::string specialized_string(const ClassExpr& e, F2kElem v, const BinaryField& field)
{
    std::vector<std::pair<Monomial, F2kElem>> terms;
    for (const auto& [m, c] : e.terms()) {
        F2kElem s = specialize(c, v, field);
        if (s.value != 0) terms.emplace_back(m, s);
    }
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return monomial_less(a.first, b.first); });
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms) {
        if (!out.empty()) out += " + ";
        std::string cs;
        if (c.value != 1) {
            for (int k = 63; k >= 0; --k) {
                if (!((c.value >> k) & 1u)) continue;
                if (!cs.empty()) cs += "+";
                cs += k == 0 ? "1" : k == 1 ? "z" : "z^" + std::to_string(k);
            }
            cs = "(" + cs + ")";
        }
        if (m.empty()) out += cs.empty() ? "1" : cs;
        else out += (cs.empty() ? "" : cs + "*") + monomial_name(m);
    }
    return out;
}

void specialize_entry(DeltaEntry& entry, F2kElem v, const BinaryField& field, ProductCache& cache)
{
    const int out_deg = std::max(entry.degree - 1, -1);
    SpecializedEntry s;
    s.engine = specialized_string(entry.delta, v, field);
    s.reference = specialized_string(entry.reference, v, field);
    s.consistent = is_coboundary_at(entry.raw + cache.evaluate(entry.delta, out_deg), v, field);
    s.match = is_coboundary_at(entry.raw + cache.evaluate(entry.reference, out_deg), v, field);
    entry.specialized = std::move(s);
}

}  // namespace hhbv
