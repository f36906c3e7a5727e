#include "hhbv/expr.hpp"

#include <algorithm>
#include <cctype>

namespace hhbv {

int monomial_degree(const Monomial& m)
{
    int n = 0;
    for (Generator g : m) n += generator_degree(g);
    return n;
}

std::string monomial_name(const Monomial& m)
{
    if (m.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < m.size();) {
        std::size_t j = i;
        while (j < m.size() && m[j] == m[i]) ++j;
        if (!s.empty()) s += "*";
        s += generator_name(m[i]);
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

Monomial monomial_product(const Monomial& a, const Monomial& b)
{
    Monomial r;
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

bool monomial_less(const Monomial& a, const Monomial& b)
{
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

// ---- ClassExpr

ClassExpr ClassExpr::monomial(Monomial m, const PolyF2& c)
{
    ClassExpr e;
    std::sort(m.begin(), m.end());
    e.add(m, c);
    return e;
}

void ClassExpr::add(const Monomial& m, const PolyF2& c)
{
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::optional<int> ClassExpr::degree() const
{
    std::optional<int> deg;
    for (const auto& [m, c] : terms_) {
        int n = monomial_degree(m);
        if (deg && *deg != n) throw std::invalid_argument("expression is not homogeneous");
        deg = n;
    }
    return deg;
}

ClassExpr& ClassExpr::operator+=(const ClassExpr& o)
{
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

ClassExpr operator*(const ClassExpr& a, const ClassExpr& b)
{
    ClassExpr r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add(monomial_product(ma, mb), ca * cb);
    return r;
}

std::string ClassExpr::to_string() const
{
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial, PolyF2>> v(terms_.begin(), terms_.end());
    std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return monomial_less(a.first, b.first); });
    std::string s;
    for (const auto& [m, c] : v) {
        if (!s.empty()) s += " + ";
        if (m.empty()) {
            s += c.to_string();
            continue;
        }
        if (!c.is_one()) {
            std::string cs = c.to_string();
            s += (cs.find('+') == std::string::npos ? cs : "(" + cs + ")") + "*";
        }
        s += monomial_name(m);
    }
    return s;
}

// ---- parser

namespace {

class Parser {
public:
    explicit Parser(std::string_view t) : text_(t) {}

    ClassExpr parse()
    {
        ClassExpr e = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected character");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek()
    {
        skip();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    ClassExpr expr()
    {
        ClassExpr e = term();
        while (peek() == '+' || peek() == '-') {
            ++pos_;
            e += term();
        }
        return e;
    }

    bool starts_factor()
    {
        char c = peek();
        return c == '(' || std::isalnum(static_cast<unsigned char>(c));
    }

    ClassExpr term()
    {
        ClassExpr e = factor();
        while (true) {
            if (peek() == '*') {
                ++pos_;
                e = e * factor();
            }
            else if (starts_factor()) {
                e = e * factor();
            }
            else {
                return e;
            }
        }
    }

    ClassExpr factor()
    {
        ClassExpr a = atom();
        if (peek() == '^') {
            ++pos_;
            skip();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            int k = std::stoi(std::string(text_.substr(start, pos_ - start)));
            ClassExpr r = ClassExpr::monomial({});
            for (int i = 0; i < k; ++i) r = r * a;
            return r;
        }
        return a;
    }

    ClassExpr atom()
    {
        char c = peek();
        if (c == '(') {
            ++pos_;
            ClassExpr e = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return e;
        }
        if (c == '0' || c == '1') {
            ++pos_;
            return c == '0' ? ClassExpr() : ClassExpr::monomial({});
        }
        if (c == 'd') {
            ++pos_;
            return ClassExpr::monomial({}, PolyF2::d());
        }
        if (c == 'e') {
            ++pos_;
            return ClassExpr::monomial({Generator::e});
        }
        if (c == 'p' || c == 'q' || c == 'w') {
            if (pos_ + 1 < text_.size()) {
                if (auto g = parse_generator(text_.substr(pos_, 2))) {
                    pos_ += 2;
                    return ClassExpr::monomial({*g});
                }
            }
            fail("unknown generator");
        }
        fail(c == '\0' ? "unexpected end of input" : "unexpected character");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

ClassExpr parse_class_expr(std::string_view text) { return Parser(text).parse(); }

Monomial parse_monomial(std::string_view text)
{
    ClassExpr e = parse_class_expr(text);
    if (e.terms().size() != 1 || !e.terms().begin()->second.is_one())
        throw ParseError("expected a single product of generators: \"" + std::string(text) + "\"");
    return e.terms().begin()->first;
}

// ---- representatives

const Cochain& ProductCache::get(const Monomial& m)
{
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    Cochain value;
    if (m.empty()) {
        value = unit_cochain();
    }
    else if (m.size() == 1) {
        value = representative(m[0]);
    }
    else {
        Monomial head(m.begin(), m.end() - 1);
        Cochain left = get(head);
        value = cup(left, representative(m.back()), *cmp_);
    }
    return memo_.emplace(m, std::move(value)).first->second;
}

Cochain ProductCache::evaluate(const ClassExpr& expr, int degree)
{
    auto deg = expr.degree();
    if (deg && *deg != degree)
        throw std::invalid_argument("expression has degree " + std::to_string(*deg) + ", expected " + std::to_string(degree));
    Cochain r(degree);
    for (const auto& [m, c] : expr.terms()) r += c * get(m);
    return r;
}

std::vector<RelationCheck> check_ideal_relations(const std::vector<std::string>& relations, ProductCache& cache)
{
    std::vector<RelationCheck> out;
    for (const auto& text : relations) {
        ClassExpr e = parse_class_expr(text);
        RelationCheck rc;
        rc.relation = text;
        rc.degree = e.degree().value_or(0);
        Cochain v = cache.evaluate(e, rc.degree);
        rc.raw_zero = v.is_zero();
        CoboundaryResult cb = is_coboundary(v);
        rc.coboundary = cb.coboundary;
        rc.mode = cb.mode;
        out.push_back(std::move(rc));
    }
    return out;
}

}  // namespace hhbv
