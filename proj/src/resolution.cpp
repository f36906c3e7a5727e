#include "hhbv/resolution.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace hhbv {

namespace {

struct TermDef {
    PolyF2 c;
    const char* left;
    Gen g;
    const char* right;
};

const PolyF2 k1 = PolyF2::one();
const PolyF2 kd = PolyF2::d();
const PolyF2 kd2 = PolyF2::monomial(2);

FreeBimodElem build(std::initializer_list<TermDef> terms)
{
    FreeBimodElem r;
    for (const auto& s : terms) r += act(s.c * normal_form(s.left), FreeBimodElem::generator(s.g), normal_form(s.right));
    return r;
}

FreeBimodElem shift_left(const char* w, const FreeBimodElem& e) { return act(normal_form(w), e, AlgElem::one()); }

const BimodMap& diff_table(int k)
{
    static const std::array<BimodMap, 4> maps = [] {
        const std::vector<Gen> u{Gen::unit}, a{Gen::x, Gen::y}, r{Gen::rx, Gen::ry};
        BimodMap d0(a, u,
                    {{Gen::x, build({{k1, "x", Gen::unit, ""}, {k1, "", Gen::unit, "x"}})},
                     {Gen::y, build({{k1, "y", Gen::unit, ""}, {k1, "", Gen::unit, "y"}})}});
        BimodMap d1(r, a,
                    {{Gen::rx, build({{k1, "", Gen::x, "x"},
                                      {k1, "x", Gen::x, ""},
                                      {k1, "y", Gen::x, "y"},
                                      {k1, "", Gen::y, "xy"},
                                      {k1, "yx", Gen::y, ""}})},
                     {Gen::ry, build({{k1, "", Gen::y, "y"},
                                      {k1, "y", Gen::y, ""},
                                      {k1, "x", Gen::y, "x"},
                                      {kd, "x", Gen::y, "xy"},
                                      {kd, "xyx", Gen::y, ""},
                                      {k1, "", Gen::x, "yx"},
                                      {k1, "xy", Gen::x, ""},
                                      {kd, "xy", Gen::x, "y"},
                                      {kd, "", Gen::x, "yxy"}})}});
        BimodMap d2(u, r,
                    {{Gen::unit, build({{k1, "x", Gen::rx, ""},
                                        {k1, "", Gen::rx, "x"},
                                        {k1, "y", Gen::ry, ""},
                                        {k1, "", Gen::ry, "y"},
                                        {kd, "y", Gen::ry, "y"},
                                        {kd, "", Gen::ry, "xyx"},
                                        {kd2, "y", Gen::ry, "xyx"}})}});
        FreeBimodElem rho;
        for (Word b : kBasis) rho += act(dual_basis()[index(b)], FreeBimodElem::generator(Gen::unit), AlgElem(b));
        BimodMap d3(u, u, {{Gen::unit, rho}});
        return std::array<BimodMap, 4>{d0, d1, d2, d3};
    }();
    return maps[static_cast<std::size_t>(k)];
}

int period(int n) { return ((n % 4) + 4) % 4; }

// t_1 on b (x) x (x) 1 and b (x) y (x) 1, t_2 on b (x) rx (x) 1 and b (x) ry (x) 1.
struct HomotopyTables {
    std::array<FreeBimodElem, kBasisSize> t1x, t1y, t2x, t2y;
};

const HomotopyTables& homotopy_tables()
{
    static const HomotopyTables tables = [] {
        HomotopyTables t;
        t.t1x[index(Word::x)] = build({{k1, "", Gen::rx, ""}});
        t.t1x[index(Word::xyxy)] = build(
            {{k1, "", Gen::rx, "xx"}, {k1, "x", Gen::rx, "x"}, {k1, "xx", Gen::rx, ""}, {k1, "yx", Gen::ry, "xy"}});
        t.t1x[index(Word::yxy)] = build({{k1, "y", Gen::ry, ""},
                                         {k1, "", Gen::ry, "y"},
                                         {kd, "y", Gen::ry, "y"},
                                         {kd, "", Gen::ry, "xyx"},
                                         {kd2, "y", Gen::ry, "xyx"}});
        FreeBimodElem t1x_yx = build({{k1, "y", Gen::rx, ""},
                                      {k1, "xy", Gen::rx, "y"},
                                      {k1, "", Gen::ry, "xy"},
                                      {kd, "x", Gen::rx, "xy"},
                                      {kd, "yxy", Gen::rx, "y"}});
        t.t1x[index(Word::yx)] = t1x_yx;
        t.t1x[index(Word::xyx)] = shift_left("x", t1x_yx);

        t.t1y[index(Word::y)] = build({{k1, "", Gen::ry, ""}});
        FreeBimodElem t1y_xy = build({{k1, "x", Gen::ry, ""},
                                      {k1, "yx", Gen::ry, "x"},
                                      {k1, "", Gen::rx, "yx"},
                                      {kd, "", Gen::rx, "yxy"},
                                      {kd, "yx", Gen::ry, "xy"},
                                      {kd, "y", Gen::rx, "xyxy"}});
        t.t1y[index(Word::xy)] = t1y_xy;
        t.t1y[index(Word::yxy)] = shift_left("y", t1y_xy);
        t.t1y[index(Word::xyxy)] = shift_left("xy", t1y_xy);

        const Gen u = Gen::unit;
        t.t2x[index(Word::x)] = build({{k1, "", u, ""}});
        t.t2x[index(Word::y)] = build({{kd, "yxy", u, "yy"}, {kd, "yx", u, "xyxy"}});
        t.t2x[index(Word::xy)] = build({{kd, "yxy", u, "y"}, {kd, "yx", u, "yy"}});
        t.t2x[index(Word::yx)] = build({{k1, "y", u, ""}, {kd, "xyx", u, ""}, {kd, "xy", u, "x"}, {kd, "x", u, "yx"}});
        t.t2x[index(Word::yxy)] = build({{k1, "", u, "x"}});
        t.t2x[index(Word::xyx)] = build({{k1, "xy", u, ""}, {k1, "x", u, "y"}, {kd, "yxy", u, "yx"}});
        t.t2x[index(Word::xyxy)] = build(
            {{k1, "", u, "yxy"}, {k1, "yx", u, "y"}, {k1, "y", u, "xy"}, {k1, "yxy", u, ""}, {kd, "xyx", u, "xy"}});

        t.t2y[index(Word::xy)] = build({{k1, "x", u, ""}, {kd, "x", u, "y"}});
        t.t2y[index(Word::yx)] = build({{kd, "yy", u, "yxy"}, {kd, "xyxy", u, "xy"}});
        t.t2y[index(Word::yxy)] = build({{k1, "yx", u, ""},
                                         {k1, "y", u, "x"},
                                         {kd, "yx", u, "y"},
                                         {kd, "y", u, "xy"},
                                         {kd2, "xyx", u, "xy"},
                                         {kd, "xyx", u, "x"},
                                         {kd, "xy", u, "yxy"}});
        t.t2y[index(Word::xyxy)] = build({{k1, "xy", u, "x"},
                                          {k1, "x", u, "yx"},
                                          {k1, "xyx", u, ""},
                                          {kd, "x", u, "yxy"},
                                          {kd, "xyx", u, "y"},
                                          {kd, "xy", u, "xy"}});
        return t;
    }();
    return tables;
}

FreeBimodElem t_on_basis(int k, Word left, Gen g)
{
    const auto& tb = homotopy_tables();
    switch (k) {
    case 0: return to_free(derivation_C(left));
    case 1: return g == Gen::x ? tb.t1x[index(left)] : tb.t1y[index(left)];
    case 2: return g == Gen::rx ? tb.t2x[index(left)] : tb.t2y[index(left)];
    default: return left == Word::xyxy ? FreeBimodElem::generator(Gen::unit) : FreeBimodElem{};
    }
}

}  // namespace

const std::vector<Gen>& generators(int n)
{
    static const std::vector<Gen> none, u{Gen::unit}, a{Gen::x, Gen::y}, r{Gen::rx, Gen::ry};
    if (n < 0) return none;
    switch (n % 4) {
    case 1: return a;
    case 2: return r;
    default: return u;
    }
}

const BimodMap& minimal_diff(int n)
{
    if (n < 0) throw std::invalid_argument("minimal_diff: negative degree");
    return diff_table(n % 4);
}

FreeBimodElem apply_diff(int n, const FreeBimodElem& e) { return minimal_diff(n).apply(e); }

FreeBimodElem lambda_listed()
{
    const Gen u = Gen::unit;
    return build({{k1, "", u, "xyxy"},
                  {k1, "xy", u, "xy"},
                  {k1, "xyxy", u, ""},
                  {k1, "yx", u, "yx"},
                  {k1, "y", u, "xyx"},
                  {k1, "yxy", u, "x"},
                  {k1, "x", u, "yxy"},
                  {k1, "xyx", u, "y"},
                  {kd, "xyx", u, "xyx"}});
}

AlgElem augmentation(const FreeBimodElem& e)
{
    AlgElem r;
    e.for_each([&](Word l, Gen g, Word rr, const PolyF2& c) {
        if (g != Gen::unit) throw std::invalid_argument("augmentation: element not in P_0");
        r += c * basis_product(l, rr);
    });
    return r;
}

FreeBimodElem homotopy_t(int n, const FreeBimodElem& e)
{
    if (n < 0) throw std::invalid_argument("homotopy_t: degree must be >= 0");
    const int k = period(n);
    FreeBimodElem r;
    e.for_each([&](Word l, Gen g, Word rr, const PolyF2& c) {
        r += c * act(Word::one, t_on_basis(k, l, g), rr);
    });
    return r;
}

FreeBimodElem homotopy_t_minus1(const AlgElem& a)
{
    FreeBimodElem r;
    a.for_each([&](Word w, const PolyF2& c) { r.add_term(Word::one, Gen::unit, w, c); });
    return r;
}

// ---- bar chains

BarChain::BarChain(int degree) : degree_(degree)
{
    if (degree < 0 || degree > kMaxDegree) throw std::invalid_argument("bar degree out of range");
}

BarChain BarChain::term(std::span<const Word> slots, const PolyF2& c)
{
    BarChain b(static_cast<int>(slots.size()) - 2);
    b.add_term(slots, c);
    return b;
}

std::uint64_t BarChain::pack(std::span<const Word> slots)
{
    std::uint64_t k = 0;
    for (Word w : slots) k = (k << 3) | index(w);
    return k;
}

void BarChain::unpack(std::uint64_t key, std::span<Word> out)
{
    for (std::size_t i = out.size(); i-- > 0;) {
        out[i] = word_at(key & 7u);
        key >>= 3;
    }
}

void BarChain::add_term(std::span<const Word> slots, const PolyF2& c)
{
    if (slots.size() != slot_count()) throw std::invalid_argument("bar term has the wrong number of slots");
    for (std::size_t i = 1; i + 1 < slots.size(); ++i)
        if (slots[i] == Word::one) throw std::invalid_argument("normalized bar term with identity middle slot");
    add_packed(pack(slots), c);
}

void BarChain::add_packed(std::uint64_t key, const PolyF2& c)
{
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BarChain& BarChain::operator+=(const BarChain& o)
{
    if (o.degree_ != degree_) throw std::invalid_argument("adding bar chains of different degrees");
    for (const auto& [k, c] : o.terms_) add_packed(k, c);
    return *this;
}

BarChain operator*(const PolyF2& s, const BarChain& c)
{
    BarChain r(c.degree_);
    if (s.is_zero()) return r;
    for (const auto& [k, v] : c.terms_) r.terms_.emplace_hint(r.terms_.end(), k, s * v);
    return r;
}

std::string BarChain::to_string() const
{
    std::string s;
    for_each([&](std::span<const Word> t, const PolyF2& c) {
        if (!s.empty()) s += " + ";
        if (!c.is_one()) {
            std::string cs = c.to_string();
            s += (cs.find('+') == std::string::npos ? cs : "(" + cs + ")") + "*";
        }
        s += "[";
        for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "|" : "") + std::string(word_name(t[i]));
        s += "]";
    });
    return s.empty() ? "0" : s;
}

BarChain act(Word left, const BarChain& c, Word right)
{
    BarChain r(c.degree());
    c.for_each([&](std::span<const Word> t, const PolyF2& cf) {
        std::vector<Word> u(t.begin(), t.end());
        basis_product(left, t.front()).for_each([&](Word a, const PolyF2& ca) {
            basis_product(t.back(), right).for_each([&](Word b, const PolyF2& cb) {
                u.front() = a;
                u.back() = b;
                r.add_term(u, cf * ca * cb);
            });
        });
    });
    return r;
}

BarChain act(const AlgElem& left, const BarChain& c, const AlgElem& right)
{
    BarChain r(c.degree());
    left.for_each([&](Word a, const PolyF2& ca) {
        right.for_each([&](Word b, const PolyF2& cb) { r += (ca * cb) * act(a, c, b); });
    });
    return r;
}

BarChain bar_diff(const BarChain& c)
{
    const int n = c.degree();
    if (n < 1) throw std::invalid_argument("bar_diff needs degree >= 1");
    BarChain r(n - 1);
    std::vector<Word> u(static_cast<std::size_t>(n) + 1);
    c.for_each([&](std::span<const Word> t, const PolyF2& cf) {
        for (int i = 0; i <= n; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            std::copy(t.begin(), t.begin() + i, u.begin());
            std::copy(t.begin() + i + 2, t.end(), u.begin() + i + 1);
            const bool interior = i > 0 && i < n;
            basis_product(t[ui], t[ui + 1]).for_each([&](Word w, const PolyF2& cw) {
                if (interior && w == Word::one)
                    throw std::logic_error("product of radical words has an identity component");
                u[ui] = w;
                r.add_term(u, cf * cw);
            });
        }
    });
    return r;
}

BarChain homotopy_s(const BarChain& c)
{
    BarChain r(c.degree() + 1);
    std::vector<Word> u(c.slot_count() + 1);
    c.for_each([&](std::span<const Word> t, const PolyF2& cf) {
        if (t.front() == Word::one) return;
        u[0] = Word::one;
        std::copy(t.begin(), t.end(), u.begin() + 1);
        r.add_term(u, cf);
    });
    return r;
}

}  // namespace hhbv
