#pragma once

#include "hhbv/classes.hpp"
#include "hhbv/fixtures.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace hhbv {

using json = nlohmann::ordered_json;

json to_json(const PolyF2& p);
json to_json(const AlgElem& a);
json to_json(const FreeBimodElem& e);
// {"degree": n, "values": [{"gen": name, "value": AlgElem}]}
json to_json(const Cochain& f);
json to_json(const Violation& v);
json to_json(const DeltaEntry& e);
json to_json(const FixtureResult& r);
json to_json(const RelationCheck& r);

AlgElem alg_from_json(const json& j);

// {"entries": [{"input": "q1", "delta": "d*p1"}, ...]}; unlisted inputs are zero.
ReferenceTable load_reference_table(const std::filesystem::path& file);

struct BracketClaim {
    Monomial a, b;
    ClassExpr value;
};
// {"entries": [{"a": "q2", "b": "e", "bracket": "d*p2*e"}, ...]}
std::vector<BracketClaim> load_bracket_claims(const std::filesystem::path& file);

// {"relations": ["p3*q1 + p2*q2", ...]}
std::vector<std::string> load_relations(const std::filesystem::path& file);

}  // namespace hhbv
