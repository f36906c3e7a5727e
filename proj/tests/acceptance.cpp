#include "hhbv/classes.hpp"
#include "hhbv/data.hpp"
#include "hhbv/json_io.hpp"
#include "hhbv/suites.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include <functional>
#include <iostream>

using namespace hhbv;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string first_violation(const SweepResult& r)
{
    if (r.ok()) return "";
    const auto& v = r.violations.front();
    return fmt::format("; first: {} deg {} {} -> {}", v.check, v.degree, v.input, v.detail);
}

Outcome from_sweeps(const std::vector<std::pair<std::string, SweepResult>>& sweeps)
{
    Outcome o{true, ""};
    for (const auto& [name, r] : sweeps) {
        o.pass = o.pass && r.ok();
        o.detail += fmt::format("{}{}: {} checked, {} violations{}", o.detail.empty() ? "" : "; ", name, r.checked,
                                r.violations.size(), first_violation(r));
    }
    return o;
}

// Entries of the table restricted to inputs; mismatches listed with engine value.
Outcome table_rows(const std::vector<Monomial>& inputs)
{
    ReferenceTable reference = load_reference_table(data_file("delta_table.json"));
    ProductCache cache;
    ClassReducer reducer(cache);
    std::vector<std::string> bad;
    for (const auto& m : inputs) {
        DeltaEntry e = delta_entry(m, reference, reducer);
        if (!e.match)
            bad.push_back(fmt::format("{}: engine {} vs {}", monomial_name(m), e.delta.to_string(), e.reference.to_string()));
    }
    if (bad.empty()) return {true, fmt::format("{} entries match", inputs.size())};
    return {false, fmt::format("{} of {} differ: {}", bad.size(), inputs.size(), fmt::join(bad, "; "))};
}

std::vector<Monomial> monomials(std::initializer_list<const char*> names)
{
    std::vector<Monomial> out;
    for (const char* n : names) out.push_back(parse_monomial(n));
    return out;
}

Outcome criterion1()
{
    return from_sweeps({{"minimal complex n<=7", check_minimal_complex(7)},
                        {"bar complex deg<=6", check_bar_complex(6, Exec::parallel)}});
}

Outcome criterion2() { return from_sweeps({{"homotopy n<=8", check_homotopy(8, Exec::parallel)}}); }

Outcome criterion3()
{
    Comparison cmp;
    SweepResult r;
    r.violations = cmp.verify_chain_maps(6);
    r.checked = 6;
    const bool id = psi3_phi3_is_identity(cmp);
    Outcome o = from_sweeps({{"squares deg 1..6", r}});
    o.pass = o.pass && id;
    o.detail += fmt::format("; psi3 phi3 (1|1) = 1|1: {}", id ? "yes" : "no");
    return o;
}

Outcome criterion4()
{
    Outcome o = table_rows(monomials({"q1", "q2", "p1*q1", "p1*q2", "p2*q1", "p2*q2", "p3*q1", "p3*q2", "p4*q1", "p4*q2"}));
    const Cochain dq1 = delta(representative(Generator::q1));
    const bool exact = dq1 == PolyF2::d() * representative(Generator::p1) && delta(representative(Generator::q2)).is_zero();
    o.pass = o.pass && exact;
    o.detail += fmt::format("; raw delta(q1) = {}", dq1.to_string());
    return o;
}

Outcome criterion5()
{
    ProductCache cache;
    std::vector<Monomial> inputs;
    for (const auto& m : candidate_monomials(2)) inputs.push_back(m);
    for (const auto& m : monomials({"q1*q2", "p1*q1*q2", "p2*q1*q2", "p3*q1*q2", "p4*q1*q2", "p1*w3", "p2*w1", "p4*w3"}))
        if (std::find(inputs.begin(), inputs.end(), m) == inputs.end()) inputs.push_back(m);
    std::vector<std::string> bad;
    for (const auto& m : inputs)
        if (!is_coboundary(delta(cache.get(m))).coboundary) bad.push_back(monomial_name(m));
    if (bad.empty()) return {true, fmt::format("delta is a coboundary on all {} degree-2 products", inputs.size())};
    return {false, fmt::format("nonzero on {}", fmt::join(bad, ", "))};
}

Outcome criterion6() { return table_rows(monomials({"q1*w1", "q2*w2", "q2*w1", "q1*w2", "q2*w3", "q1*w3"})); }

Outcome criterion7()
{
    return table_rows(
        monomials({"e", "p4*e", "p1*e", "p2*e", "p3*e", "q1*e", "q2*e", "w1*e", "w2*e", "w3*e"}));
}

Outcome criterion8()
{
    ProductCache cache;
    std::vector<std::string> notes;
    bool pass = true;
    for (const auto& c : load_bracket_claims(data_file("brackets.json"))) {
        const Cochain raw = gerstenhaber_bracket(cache.get(c.a), cache.get(c.b));
        const CoboundaryResult cb = is_coboundary(raw + cache.evaluate(c.value, raw.degree()));
        const bool ok = cb.coboundary && cb.witness.has_value();
        pass = pass && ok;
        notes.push_back(fmt::format("[{},{}] = {} ({}, {})", monomial_name(c.a), monomial_name(c.b), c.value.to_string(),
                                    ok ? "holds" : "fails", solve_mode_name(cb.mode)));
    }
    return {pass, fmt::format("{}", fmt::join(notes, "; "))};
}

Outcome criterion9() { return table_rows(delta_table_inputs()); }

Outcome criterion10()
{
    ProductCache cache;
    return from_sweeps({{"delta o delta", check_delta_squared(cache)},
                        {"bv identity", check_bv_identity(cache)},
                        {"ideal relations", check_relations(cache, load_relations(data_file("ideal.json")))},
                        {"B o B deg<=3", check_connes(3, Exec::parallel)}});
}

Outcome criterion11()
{
    ReferenceTable reference = load_reference_table(data_file("delta_table.json"));
    ProductCache cache;
    ClassReducer reducer(cache);
    BinaryField field(8, 0x11B);
    std::vector<std::string> bad;
    std::size_t nonzero = 0;
    for (auto& e : delta_table(delta_table_inputs(), reference, reducer)) {
        specialize_entry(e, field.zero(), field, cache);
        const auto& s = *e.specialized;
        nonzero += s.engine != "0";
        if (!s.consistent || !s.match || s.engine != s.reference)
            bad.push_back(fmt::format("{}: {} vs {}", monomial_name(e.input), s.engine, s.reference));
    }
    if (bad.empty()) return {true, fmt::format("66 entries agree at d = 0, {} nonzero", nonzero)};
    return {false, fmt::format("{}", fmt::join(bad, "; "))};
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria()
{
    static const std::vector<std::pair<std::string, std::function<Outcome()>>> c{
        {"resolution and bar complex square to zero", criterion1},
        {"weak self-homotopy", criterion2},
        {"comparison maps are chain maps", criterion3},
        {"delta on degree-1 classes", criterion4},
        {"delta vanishes on degree-2 products", criterion5},
        {"delta on q_i w_j", criterion6},
        {"delta on e and its products", criterion7},
        {"brackets with e", criterion8},
        {"full delta table", criterion9},
        {"structural identities", criterion10},
        {"d = 0 consistency", criterion11},
    };
    return c;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"acceptance criteria"};
    int only = 0;
    app.add_option("--criterion", only, "run a single criterion")->check(CLI::Range(1, 11));
    CLI11_PARSE(app, argc, argv);

    bool all = true;
    for (std::size_t i = 0; i < criteria().size(); ++i) {
        const int n = static_cast<int>(i) + 1;
        if (only && only != n) continue;
        Outcome o;
        try {
            o = criteria()[i].second();
        }
        catch (const std::exception& e) {
            o = {false, fmt::format("exception: {}", e.what())};
        }
        all = all && o.pass;
        std::cout << fmt::format("[{}] criterion {}: {} ({})\n", o.pass ? "PASS" : "FAIL", n, criteria()[i].first,
                                 o.detail);
    }
    return all ? 0 : 1;
}
