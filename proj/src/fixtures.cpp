#include "hhbv/fixtures.hpp"

#include <fstream>

namespace hhbv {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::string_view trim(std::string_view s)
{
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

// Splits on sep at parenthesis/bracket depth 0.
std::vector<std::string_view> split_top(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(' || c == '[') ++depth;
        else if (c == ')' || c == ']') --depth;
        else if (c == sep && depth == 0) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    if (depth != 0) throw ParseError("unbalanced brackets in \"" + std::string(s) + "\"");
    out.push_back(s.substr(start));
    return out;
}

class AlgParser {
public:
    AlgParser(std::string_view t, std::optional<Word> b) : text_(t), b_(b) {}

    AlgElem parse()
    {
        AlgElem a = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected character");
        return a;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    void skip()
    {
        while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
    }

    char peek()
    {
        skip();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    AlgElem expr()
    {
        AlgElem a = term();
        while (peek() == '+') {
            ++pos_;
            a += term();
        }
        return a;
    }

    bool starts_atom()
    {
        char c = peek();
        return c == '(' || c == 'x' || c == 'y' || c == 'd' || c == 'b' || (c >= '0' && c <= '9');
    }

    AlgElem term()
    {
        if (!starts_atom()) fail("expected a term");
        AlgElem a = factor();
        while (starts_atom()) a = a * factor();
        return a;
    }

    unsigned number()
    {
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
        if (start == pos_) fail("expected a number");
        return static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
    }

    AlgElem factor()
    {
        AlgElem a = atom();
        if (peek() == '^') {
            ++pos_;
            unsigned k = number();
            AlgElem r = AlgElem::one();
            for (unsigned i = 0; i < k; ++i) r = r * a;
            return r;
        }
        return a;
    }

    AlgElem atom()
    {
        char c = peek();
        if (c == '(') {
            ++pos_;
            AlgElem a = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return a;
        }
        if (c >= '0' && c <= '9') return number() % 2 ? AlgElem::one() : AlgElem();
        ++pos_;
        switch (c) {
        case 'x': return AlgElem(Word::x);
        case 'y': return AlgElem(Word::y);
        case 'd': return AlgElem(Word::one, PolyF2::d());
        case 'b':
            if (!b_) fail("b outside a sum over the basis");
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                return AlgElem(complement_word(*b_));
            }
            return AlgElem(*b_);
        default: --pos_; fail("unexpected character");
        }
    }

    std::string_view text_;
    std::optional<Word> b_;
    std::size_t pos_ = 0;
};

PolyF2 scalar_of(const AlgElem& a, std::string_view text)
{
    for (Word w : kBasis)
        if (w != Word::one && !a[w].is_zero()) throw ParseError("coefficient is not a scalar: \"" + std::string(text) + "\"");
    return a[Word::one];
}

struct TermHead {
    PolyF2 coeff = PolyF2::one();
    bool sum_b = false;
    bool circ = false;
    std::string_view body;  // between the brackets
};

TermHead split_term(std::string_view term)
{
    TermHead h;
    term = trim(term);
    const std::size_t open = term.find('[');
    if (open == std::string_view::npos || term.back() != ']') throw ParseError("expected a bracketed term: \"" + std::string(term) + "\"");
    h.body = term.substr(open + 1, term.size() - open - 2);
    std::string_view head = trim(term.substr(0, open));
    if (head.size() >= 4 && head.substr(head.size() - 4) == "circ") {
        h.circ = true;
        head = trim(head.substr(0, head.size() - 4));
    }
    if (head.size() >= 5 && head.substr(head.size() - 5) == "sum_b") {
        h.sum_b = true;
        head = trim(head.substr(0, head.size() - 5));
    }
    if (!head.empty()) {
        if (head.back() != '*') throw ParseError("expected '*' after the coefficient: \"" + std::string(term) + "\"");
        head.remove_suffix(1);
        h.coeff = scalar_of(AlgParser(head, std::nullopt).parse(), head);
    }
    return h;
}

std::vector<std::optional<Word>> b_range(bool sum_b)
{
    if (!sum_b) return {std::nullopt};
    std::vector<std::optional<Word>> r;
    for (Word w : kBasis) r.push_back(w);
    return r;
}

// Expands slot values multilinearly, dropping identity components in the middle slots.
void add_expanded(BarChain& out, const std::vector<AlgElem>& slots, const PolyF2& c)
{
    std::vector<Word> t(slots.size());
    auto rec = [&](auto&& self, std::size_t i, const PolyF2& acc) -> void {
        if (i == slots.size()) {
            out.add_term(t, acc);
            return;
        }
        slots[i].for_each([&](Word w, const PolyF2& cw) {
            if (w == Word::one && i != 0 && i + 1 != slots.size()) return;
            t[i] = w;
            self(self, i + 1, acc * cw);
        });
    };
    rec(rec, 0, c);
}

bool is_zero_text(std::string_view s)
{
    s = trim(s);
    return s == "0";
}

}  // namespace

AlgElem parse_alg(std::string_view text, std::optional<Word> b) { return AlgParser(text, b).parse(); }

FreeBimodElem parse_bimod(std::string_view text)
{
    FreeBimodElem r;
    if (is_zero_text(text)) return r;
    for (auto term : split_top(text, '+')) {
        TermHead h = split_term(term);
        if (h.circ) throw ParseError("circ is not allowed in a resolution element");
        for (auto b : b_range(h.sum_b)) {
            auto slots = split_top(h.body, '|');
            Gen g = Gen::unit;
            if (slots.size() == 3) {
                auto pg = parse_gen(trim(slots[1]));
                if (!pg || *pg == Gen::unit) throw ParseError("unknown generator \"" + std::string(slots[1]) + "\"");
                g = *pg;
            }
            else if (slots.size() != 2) {
                throw ParseError("resolution term needs 2 or 3 slots: \"" + std::string(term) + "\"");
            }
            AlgElem l = parse_alg(slots.front(), b), rr = parse_alg(slots.back(), b);
            r += h.coeff * act(l, FreeBimodElem::generator(g), rr);
        }
    }
    return r;
}

BarChain parse_bar(std::string_view text, std::optional<int> degree)
{
    if (is_zero_text(text)) {
        if (!degree) throw ParseError("cannot infer the degree of 0");
        return BarChain(*degree);
    }
    std::optional<BarChain> r;
    for (auto term : split_top(text, '+')) {
        TermHead h = split_term(term);
        auto raw = split_top(h.body, '|');
        const int n = static_cast<int>(raw.size()) - (h.circ ? 0 : 2);
        if (n < 0) throw ParseError("bar term needs at least two slots: \"" + std::string(term) + "\"");
        if (!degree) degree = n;
        if (n != *degree) throw ParseError("bar terms of different degrees in \"" + std::string(text) + "\"");
        if (!r) r.emplace(*degree);
        for (auto b : b_range(h.sum_b)) {
            std::vector<AlgElem> vals;
            for (auto s : raw) vals.push_back(parse_alg(s, b));
            if (!h.circ) {
                add_expanded(*r, vals, h.coeff);
                continue;
            }
            std::vector<AlgElem> slots(static_cast<std::size_t>(n) + 2, AlgElem::one());
            for (std::size_t k = 0; k < vals.size(); ++k) {
                for (std::size_t j = 0; j < vals.size(); ++j) slots[j + 1] = vals[(k + j) % vals.size()];
                add_expanded(*r, slots, h.coeff);
            }
        }
    }
    return *r;
}

Cochain parse_cochain(std::string_view text, int degree)
{
    text = trim(text);
    const std::size_t count = generators(degree).size();
    if (is_zero_text(text)) return Cochain(degree);
    std::vector<AlgElem> vals;
    if (count == 2) {
        if (text.size() < 2 || text.front() != '(' || text.back() != ')')
            throw ParseError("expected a pair \"(f, g)\": \"" + std::string(text) + "\"");
        auto parts = split_top(text.substr(1, text.size() - 2), ',');
        if (parts.size() != 2) throw ParseError("expected a pair \"(f, g)\": \"" + std::string(text) + "\"");
        for (auto p : parts) vals.push_back(parse_alg(p));
    }
    else if (count == 1) {
        vals.push_back(parse_alg(text));
    }
    return Cochain(degree, std::move(vals));
}

// ---- loading and running

std::vector<Fixture> load_fixtures(const std::filesystem::path& file)
{
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file.string());
    nlohmann::json j = nlohmann::json::parse(in);
    std::vector<Fixture> out;
    for (const auto& g : j.at("groups")) {
        const std::string group = g.at("name").get<std::string>();
        for (const auto& item : g.at("items")) out.push_back({item.at("id").get<std::string>(), group, item});
    }
    return out;
}

std::vector<Fixture> select_fixtures(const std::vector<Fixture>& all, const std::vector<std::string>& prefixes)
{
    if (prefixes.empty()) return all;
    std::vector<Fixture> out;
    for (const auto& f : all)
        for (const auto& p : prefixes)
            if (f.id.starts_with(p) || f.group.starts_with(p)) {
                out.push_back(f);
                break;
            }
    return out;
}

namespace {

Gen gen_field(const nlohmann::json& spec)
{
    auto g = parse_gen(spec.value("gen", std::string("1")));
    if (!g) throw ParseError("unknown generator in fixture");
    return *g;
}

const Cochain& cochain_field(const nlohmann::json& spec, const char* key, ProductCache& cache)
{
    return cache.get(parse_monomial(spec.at(key).get<std::string>()));
}

BarChain filter_pattern(const BarChain& c, std::string_view pattern)
{
    std::vector<Word> want;
    for (auto s : split_top(pattern, '|')) {
        auto w = parse_word(trim(s));
        if (!w) throw ParseError("unknown word in pattern \"" + std::string(pattern) + "\"");
        want.push_back(*w);
    }
    BarChain r(c.degree());
    c.for_each([&](std::span<const Word> t, const PolyF2& cf) {
        // slots 2 .. 2+|want|-1
        for (std::size_t k = 0; k < want.size(); ++k)
            if (t[k + 2] != want[k]) return;
        r.add_term(t, cf);
    });
    return r;
}

}  // namespace

FixtureResult run_fixture(const Fixture& f, ProductCache& cache)
{
    FixtureResult r;
    r.id = f.id;
    r.group = f.group;
    const auto& spec = f.spec;
    r.reference = spec.at("expected").get<std::string>();
    Comparison& cmp = cache.comparison();
    try {
        const std::string op = spec.at("op").get<std::string>();
        if (op == "t") {
            FreeBimodElem v = homotopy_t(spec.at("degree").get<int>(), parse_bimod(spec.at("input").get<std::string>()));
            r.computed = v.to_string();
            r.match = v == parse_bimod(r.reference);
        }
        else if (op == "psi") {
            FreeBimodElem v = cmp.psi(parse_bar(spec.at("input").get<std::string>()));
            r.computed = v.to_string();
            r.match = v == parse_bimod(r.reference);
        }
        else if (op == "psi_phi") {
            FreeBimodElem v = cmp.psi(cmp.phi_generator(spec.at("degree").get<int>(), gen_field(spec)));
            r.computed = v.to_string();
            r.match = v == parse_bimod(r.reference);
        }
        else if (op == "phi") {
            const int n = spec.at("degree").get<int>();
            BarChain v = cmp.phi_generator(n, gen_field(spec));
            if (spec.contains("pattern")) v = filter_pattern(v, spec.at("pattern").get<std::string>());
            r.computed = v.to_string();
            r.match = v == parse_bar(r.reference, n);
        }
        else if (op == "bar_value") {
            const Cochain& c = cochain_field(spec, "cochain", cache);
            BarChain in = parse_bar(spec.at("input").get<std::string>(), c.degree());
            AlgElem v = cochain_to_bar(c, cmp).evaluate(in);
            r.computed = v.to_string();
            r.match = v == parse_alg(r.reference);
        }
        else if (op == "cochain_phi") {
            const Cochain& c = cochain_field(spec, "cochain", cache);
            AlgElem v = cochain_to_bar(c, cmp).evaluate(cmp.phi_generator(c.degree(), gen_field(spec)));
            r.computed = v.to_string();
            r.match = v == parse_alg(r.reference);
        }
        else if (op == "C") {
            FreeBimodElem v = to_free(derivation_C(parse_alg(spec.at("input").get<std::string>())));
            r.computed = v.to_string();
            r.match = v == parse_bimod(r.reference);
        }
        else if (op == "cup" || op == "bracket") {
            Cochain v;
            if (op == "cup") {
                const Monomial m = parse_monomial(spec.at("expr").get<std::string>());
                v = cache.get(m);
            }
            else {
                v = gerstenhaber_bracket(cochain_field(spec, "a", cache), cochain_field(spec, "b", cache), cmp);
            }
            r.computed = v.to_string();
            r.match = v == parse_cochain(r.reference, v.degree());
            Cochain cls = r.match ? v : parse_cochain(r.reference, v.degree());
            if (spec.contains("expected_class")) {
                ClassExpr e = parse_class_expr(spec.at("expected_class").get<std::string>());
                cls = cache.evaluate(e, v.degree());
            }
            r.class_match = same_class(v, cls);
        }
        else if (op == "circ") {
            const Cochain& outer = cochain_field(spec, "outer", cache);
            const Cochain& inner = cochain_field(spec, "inner", cache);
            BarCochain ob = cochain_to_bar(outer, cmp), ib = cochain_to_bar(inner, cmp);
            BarCochain comp = spec.contains("i") ? circle_i(ob, ib, spec.at("i").get<int>()) : circle(ob, ib);
            AlgElem v = comp.evaluate(cmp.phi_generator(comp.degree(), gen_field(spec)));
            r.computed = v.to_string();
            r.match = v == parse_alg(r.reference);
        }
        else {
            throw std::invalid_argument("unknown fixture op \"" + op + "\"");
        }
    }
    catch (const std::exception& ex) {
        r.error = ex.what();
        r.match = false;
    }
    return r;
}

}  // namespace hhbv
