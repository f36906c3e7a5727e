#include "commands.hpp"

#include "hhbv/classes.hpp"
#include "hhbv/data.hpp"
#include "hhbv/json_io.hpp"
#include "hhbv/suites.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <optional>
#include <tuple>
#include <utility>

namespace hhbv::cli {

namespace {

constexpr std::uint64_t kSpecModulus = 0x11B;
constexpr int kMinTableDegree = 5;

struct Suite {
    std::string name;
    SweepResult result;
};

std::optional<F2kElem> parse_d(const std::string& text, const BinaryField& field)
{
    if (text == "symbolic") return std::nullopt;
    PolyF2 p;
    try {
        p = PolyF2::from_bits(text);
    }
    catch (const std::invalid_argument&) {
        throw UsageError("--d expects 'symbolic' or a bit string, got '" + text + "'");
    }
    if (p.degree() >= static_cast<int>(field.degree())) throw UsageError("--d value does not fit GF(2^8): " + text);
    return field.elem(p.low_limb());
}

void sort_violations(std::vector<Violation>& v)
{
    std::sort(v.begin(), v.end(), [](const Violation& a, const Violation& b) {
        return std::tie(a.check, a.degree, a.input, a.detail) < std::tie(b.check, b.degree, b.input, b.detail);
    });
}

SweepResult from_violations(std::vector<Violation> v, std::size_t checked)
{
    SweepResult r;
    r.checked = checked;
    r.violations = std::move(v);
    return r;
}

std::vector<Suite> structural_suites(int maxdeg)
{
    std::vector<Suite> out;
    out.push_back({"minimal complex", check_minimal_complex(7)});
    out.push_back({"homotopy", check_homotopy(8, Exec::parallel)});
    auto cmp_v = shared_comparison().verify_chain_maps(maxdeg);
    out.push_back({"chain maps", from_violations(std::move(cmp_v), static_cast<std::size_t>(maxdeg))});
    SweepResult id;
    id.checked = 1;
    if (!psi3_phi3_is_identity(shared_comparison())) id.violations.push_back({"psi3 phi3", 3, "1|1", "not the identity"});
    out.push_back({"psi3 phi3", id});
    out.push_back({"cocycles", check_cocycles()});
    return out;
}

Report render_suites(std::vector<Suite> suites, const RunConfig& cfg, const std::string& title)
{
    bool ok = true;
    for (auto& s : suites) {
        sort_violations(s.result.violations);
        ok = ok && s.result.ok();
    }
    Report r;
    r.status = ok ? 0 : 1;
    if (cfg.format == "json") {
        json j{{"command", title}, {"max_degree", cfg.max_degree}, {"seed", cfg.seed}, {"samples", cfg.samples}};
        json arr = json::array();
        for (const auto& s : suites) {
            json v = json::array();
            for (const auto& x : s.result.violations) v.push_back(to_json(x));
            arr.push_back({{"name", s.name}, {"checked", s.result.checked}, {"ok", s.result.ok()}, {"violations", v}});
        }
        j["suites"] = arr;
        j["ok"] = ok;
        r.text = j.dump(2) + "\n";
        return r;
    }
    r.text = fmt::format("# {}\n\n| suite | checked | violations |\n|---|---|---|\n", title);
    for (const auto& s : suites) r.text += fmt::format("| {} | {} | {} |\n", s.name, s.result.checked, s.result.violations.size());
    for (const auto& s : suites)
        for (const auto& v : s.result.violations)
            r.text += fmt::format("\n- {} (degree {}): {} -> {}", v.check, v.degree, v.input, v.detail);
    r.text += fmt::format("\n\nresult: {}\n", ok ? "pass" : "fail");
    return r;
}

std::string md_cell(std::string s)
{
    std::replace(s.begin(), s.end(), '|', '/');
    return s;
}

int required_bar_degree(const std::string& op, int da, int db)
{
    if (op == "delta") return da;
    if (op == "cup") return da + db;
    return std::max({da, db, da + db - 1});
}

}  // namespace

Report cmd_verify(const RunConfig& cfg)
{
    BinaryField field(8, kSpecModulus);
    parse_d(cfg.d, field);
    std::vector<Suite> suites = structural_suites(cfg.max_degree);
    suites.insert(suites.begin() + 1, {"bar complex", check_bar_complex(cfg.max_degree, Exec::parallel)});
    suites.insert(suites.begin() + 3,
                  {"bar homotopy", check_bar_homotopy(std::max(cfg.max_degree - 1, 0), Exec::parallel)});
    ProductCache cache;
    suites.push_back({"delta o delta", check_delta_squared(cache)});
    suites.push_back({"bv identity", check_bv_identity(cache)});
    suites.push_back({"graded commutativity", check_graded_commutativity(cache)});
    suites.push_back({"poisson", check_poisson(cache, cfg.samples, cfg.seed)});
    suites.push_back({"ideal relations", check_relations(cache, load_relations(data_file("ideal.json")))});
    suites.push_back({"connes B o B", check_connes(3, Exec::parallel)});
    return render_suites(std::move(suites), cfg, "verify");
}

Report cmd_delta_table(const RunConfig& cfg)
{
    if (cfg.max_degree < kMinTableDegree)
        throw UsageError(fmt::format("delta-table needs --max-degree >= {}", kMinTableDegree));
    BinaryField field(8, kSpecModulus);
    const std::optional<F2kElem> v = parse_d(cfg.d, field);
    if (!cfg.force) {
        auto pre = structural_suites(cfg.max_degree);
        for (const auto& s : pre)
            if (!s.result.ok()) return render_suites(std::move(pre), cfg, "delta-table prerequisites");
    }

    ReferenceTable reference = load_reference_table(data_file("delta_table.json"));
    ProductCache cache;
    ClassReducer reducer(cache);
    std::vector<DeltaEntry> entries = delta_table(delta_table_inputs(), reference, reducer);
    std::vector<std::string> mismatches;
    for (auto& e : entries) {
        if (v) specialize_entry(e, *v, field, cache);
        const bool ok = v ? e.specialized->match : e.match;
        if (!ok) mismatches.push_back(monomial_name(e.input));
    }

    Report r;
    r.status = mismatches.empty() ? 0 : 1;
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& e : entries) arr.push_back(to_json(e));
        json j{{"command", "delta-table"}, {"d", cfg.d}, {"entries", arr}, {"mismatches", mismatches},
               {"ok", mismatches.empty()}};
        r.text = j.dump(2) + "\n";
        return r;
    }
    r.text = fmt::format("# delta table (d = {})\n\n", cfg.d);
    if (v) {
        r.text += "| input | degree | engine | reference | consistent | match |\n|---|---|---|---|---|---|\n";
        for (const auto& e : entries)
            r.text += fmt::format("| {} | {} | {} | {} | {} | {} |\n", monomial_name(e.input), e.degree,
                                  e.specialized->engine, e.specialized->reference, e.specialized->consistent ? "yes" : "no",
                                  e.specialized->match ? "yes" : "no");
    }
    else {
        r.text += "| input | degree | delta | reference | match | mode | reduced |\n|---|---|---|---|---|---|---|\n";
        for (const auto& e : entries)
            r.text += fmt::format("| {} | {} | {} | {} | {} | {} | {} |\n", monomial_name(e.input), e.degree,
                                  e.delta.to_string(), e.reference.to_string(), e.match ? "yes" : "no",
                                  solve_mode_name(e.mode), e.reduced_by_coboundary ? "yes" : "no");
    }
    r.text += fmt::format("\nmismatches: {}\n", mismatches.empty() ? "none" : fmt::format("{}", fmt::join(mismatches, ", ")));
    return r;
}

Report cmd_fixtures(const RunConfig& cfg)
{
    BinaryField field(8, kSpecModulus);
    parse_d(cfg.d, field);
    auto selected = select_fixtures(load_fixtures(data_file("fixtures.json")), cfg.select);
    ProductCache cache;
    std::vector<FixtureResult> results;
    results.reserve(selected.size());
    std::size_t matched = 0;
    for (const auto& f : selected) {
        results.push_back(run_fixture(f, cache));
        matched += results.back().match;
    }
    Report r;
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& x : results) arr.push_back(to_json(x));
        json j{{"command", "fixtures"},
               {"fixtures", arr},
               {"summary", {{"total", results.size()}, {"matched", matched}, {"errata", results.size() - matched}}}};
        r.text = j.dump(2) + "\n";
        return r;
    }
    r.text = "# fixtures\n\n| id | reference | computed | match | class |\n|---|---|---|---|---|\n";
    for (const auto& x : results)
        r.text += fmt::format("| {} | {} | {} | {} | {} |\n", md_cell(x.id), md_cell(x.reference),
                              md_cell(x.error.empty() ? x.computed : "error: " + x.error), x.match ? "yes" : "no",
                              x.class_match ? (*x.class_match ? "yes" : "no") : "");
    r.text += fmt::format("\nmatched {} of {}\n", matched, results.size());
    return r;
}

Report cmd_eval(const RunConfig& cfg, const std::string& op, const std::vector<std::string>& args)
{
    BinaryField field(8, kSpecModulus);
    const std::optional<F2kElem> v = parse_d(cfg.d, field);
    const std::size_t arity = op == "delta" ? 1 : 2;
    if (args.size() != arity) throw UsageError(fmt::format("{} takes {} argument(s)", op, arity));
    if (op == "bracket" && cfg.max_degree < kMinTableDegree)
        throw UsageError(fmt::format("bracket needs --max-degree >= {}", kMinTableDegree));

    std::vector<ClassExpr> exprs;
    std::vector<int> degrees;
    for (const auto& a : args) {
        ClassExpr e;
        std::optional<int> deg;
        try {
            e = parse_class_expr(a);
            deg = e.degree();
        }
        catch (const std::invalid_argument& ex) {
            throw UsageError(ex.what());
        }
        if (!deg) throw UsageError("argument '" + a + "' is zero");
        exprs.push_back(std::move(e));
        degrees.push_back(*deg);
    }
    const int need = required_bar_degree(op, degrees[0], arity == 2 ? degrees[1] : 0);
    if (need > cfg.max_degree)
        throw UsageError(fmt::format("{} needs bar degree {} beyond --max-degree {}", op, need, cfg.max_degree));

    ProductCache cache;
    ClassReducer reducer(cache);
    Comparison& cmp = cache.comparison();
    const Cochain a = cache.evaluate(exprs[0], degrees[0]);
    Cochain raw;
    if (op == "delta") raw = delta(a, DualChoice::form_dual, cmp);
    else {
        const Cochain b = cache.evaluate(exprs[1], degrees[1]);
        raw = op == "cup" ? cup(a, b, cmp) : gerstenhaber_bracket(a, b, cmp);
    }

    Report r;
    if (raw.degree() < 0) {
        json j{{"op", op}, {"args", args}, {"degree", raw.degree()}, {"value", "0"}};
        r.text = cfg.format == "json" ? j.dump(2) + "\n" : fmt::format("{}({}) = 0\n", op, fmt::join(args, ", "));
        return r;
    }
    const ClassExpr value = reducer.reduce(raw);
    const Cochain normal = cache.evaluate(value, raw.degree());
    const CoboundaryResult cb = is_coboundary(raw + normal);
    const std::string shown = v ? specialized_string(value, *v, field) : value.to_string();
    json j{{"op", op},
           {"args", args},
           {"d", cfg.d},
           {"degree", raw.degree()},
           {"value", shown},
           {"cochain", normal.to_string()},
           {"raw", to_json(raw)},
           {"reduced_by_coboundary", !(raw == normal)},
           {"mode", solve_mode_name(cb.mode)}};
    if (cfg.format == "json") r.text = j.dump(2) + "\n";
    else
        r.text = fmt::format("{}({}) = {}\n\nrepresentative: {}\nraw: {}\nreduced by coboundary: {}\n", op,
                             fmt::join(args, ", "), shown, normal.to_string(), raw.to_string(),
                             raw == normal ? "no" : "yes");
    return r;
}

}  // namespace hhbv::cli
