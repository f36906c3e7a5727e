#pragma once

#include "hhbv/expr.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hhbv {

// Element notation used by the fixture tables.
//   algebra:  sums of products of x, y, d, 1, 0, parentheses and ^n; "b" and "b*" when a b is bound
//             (b* is the complementary word)
//   P_n:      "[l|gen|r]" with gen in x, y, rx, ry, or "[l|r]" for the unit generator
//   bar:      "[a_0|...|a_{n+1}]", "circ[a_1|...|a_n]" (cyclic rotations between outer 1s),
//             an optional "sum_b" prefix and a scalar prefix "c*"
// Identity components in middle bar slots are dropped.
AlgElem parse_alg(std::string_view text, std::optional<Word> b = std::nullopt);
FreeBimodElem parse_bimod(std::string_view text);
// degree nullopt: inferred from the first term.
BarChain parse_bar(std::string_view text, std::optional<int> degree = std::nullopt);
// "(f, g)" or a single value.
Cochain parse_cochain(std::string_view text, int degree);

struct Fixture {
    std::string id;
    std::string group;
    nlohmann::json spec;
};

struct FixtureResult {
    std::string id;
    std::string group;
    std::string reference;
    std::string computed;
    bool match = false;
    std::optional<bool> class_match;
    std::string error;
};

std::vector<Fixture> load_fixtures(const std::filesystem::path& file);
// Keeps fixtures whose id or group starts with one of the prefixes; all when prefixes is empty.
std::vector<Fixture> select_fixtures(const std::vector<Fixture>& all, const std::vector<std::string>& prefixes);
FixtureResult run_fixture(const Fixture& f, ProductCache& cache);

}  // namespace hhbv
