#include "hhbv/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace hhbv {

namespace {

json read_file(const std::filesystem::path& file)
{
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file.string());
    return json::parse(in);
}

}  // namespace

json to_json(const PolyF2& p) { return p.to_bits(); }

json to_json(const AlgElem& a)
{
    json out = json::array();
    a.for_each([&](Word w, const PolyF2& c) { out.push_back({{"word", word_name(w)}, {"coeff", c.to_bits()}}); });
    return out;
}

json to_json(const FreeBimodElem& e)
{
    json out = json::array();
    e.for_each([&](Word l, Gen g, Word r, const PolyF2& c) {
        out.push_back({{"gen", gen_name(g)}, {"left", word_name(l)}, {"right", word_name(r)}, {"coeff", c.to_bits()}});
    });
    return out;
}

json to_json(const Cochain& f)
{
    json vals = json::array();
    for (std::size_t i = 0; i < f.gens().size(); ++i)
        vals.push_back({{"gen", gen_name(f.gens()[i])}, {"value", to_json(f.values()[i])}});
    return {{"degree", f.degree()}, {"values", vals}, {"text", f.to_string()}};
}

json to_json(const Violation& v)
{
    return {{"check", v.check}, {"degree", v.degree}, {"input", v.input}, {"detail", v.detail}};
}

json to_json(const DeltaEntry& e)
{
    json j{{"input", monomial_name(e.input)},
           {"degree", e.degree},
           {"delta", e.delta.to_string()},
           {"raw", to_json(e.raw)},
           {"reduced_by_coboundary", e.reduced_by_coboundary},
           {"reference", e.reference.to_string()},
           {"match", e.match},
           {"mode", solve_mode_name(e.mode)},
           {"word_complement_match", e.word_complement_match}};
    if (e.specialized) {
        j["specialized"] = {{"engine", e.specialized->engine},
                            {"reference", e.specialized->reference},
                            {"consistent", e.specialized->consistent},
                            {"match", e.specialized->match}};
    }
    return j;
}

json to_json(const FixtureResult& r)
{
    json j{{"fixture-id", r.id},
           {"group", r.group},
           {"reference-value", r.reference},
           {"computed-value", r.computed},
           {"match", r.match}};
    if (r.class_match) j["class-match"] = *r.class_match;
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

json to_json(const RelationCheck& r)
{
    return {{"relation", r.relation},
            {"degree", r.degree},
            {"raw_zero", r.raw_zero},
            {"coboundary", r.coboundary},
            {"mode", solve_mode_name(r.mode)}};
}

AlgElem alg_from_json(const json& j)
{
    AlgElem a;
    for (const auto& t : j) {
        auto w = parse_word(t.at("word").get<std::string>());
        if (!w) throw std::invalid_argument("unknown word " + t.at("word").get<std::string>());
        a.add_term(*w, PolyF2::from_bits(t.at("coeff").get<std::string>()));
    }
    return a;
}

ReferenceTable load_reference_table(const std::filesystem::path& file)
{
    ReferenceTable t;
    const json doc = read_file(file);
    for (const auto& e : doc.at("entries")) {
        Monomial m = parse_monomial(e.at("input").get<std::string>());
        ClassExpr v = parse_class_expr(e.at("delta").get<std::string>());
        if (!t.emplace(m, v).second) throw std::runtime_error("duplicate table input " + monomial_name(m));
    }
    return t;
}

std::vector<BracketClaim> load_bracket_claims(const std::filesystem::path& file)
{
    std::vector<BracketClaim> out;
    const json doc = read_file(file);
    for (const auto& e : doc.at("entries"))
        out.push_back({parse_monomial(e.at("a").get<std::string>()), parse_monomial(e.at("b").get<std::string>()),
                       parse_class_expr(e.at("bracket").get<std::string>())});
    return out;
}

std::vector<std::string> load_relations(const std::filesystem::path& file)
{
    return read_file(file).at("relations").get<std::vector<std::string>>();
}

}  // namespace hhbv
