#include "hhbv/bv.hpp"

#include "hhbv/linalg.hpp"

#include <array>
#include <mutex>
#include <unordered_map>

namespace hhbv {

// ---- Cochain

Cochain::Cochain(int degree) : degree_(degree), values_(generators(degree).size()) {}

Cochain::Cochain(int degree, std::vector<AlgElem> values) : degree_(degree), values_(std::move(values))
{
    if (values_.size() != generators(degree).size()) throw std::invalid_argument("cochain: wrong number of values");
}

std::size_t Cochain::slot(Gen g) const
{
    const auto& gs = gens();
    for (std::size_t i = 0; i < gs.size(); ++i)
        if (gs[i] == g) return i;
    throw std::invalid_argument("cochain: generator not in P_" + std::to_string(degree_));
}

const AlgElem& Cochain::value(Gen g) const { return values_[slot(g)]; }
void Cochain::set(Gen g, AlgElem v) { values_[slot(g)] = std::move(v); }

AlgElem Cochain::evaluate(const FreeBimodElem& e) const
{
    AlgElem r;
    e.for_each([&](Word l, Gen g, Word rr, const PolyF2& c) {
        const AlgElem& v = value(g);
        if (v.is_zero()) return;
        r += c * (AlgElem(l) * v * AlgElem(rr));
    });
    return r;
}

bool Cochain::is_zero() const
{
    for (const auto& v : values_)
        if (!v.is_zero()) return false;
    return true;
}

Cochain& Cochain::operator+=(const Cochain& o)
{
    if (o.degree_ != degree_) throw std::invalid_argument("cochain: degree mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
}

Cochain operator*(const PolyF2& s, Cochain f)
{
    for (auto& v : f.values_) v = s * v;
    return f;
}

std::string Cochain::to_string() const
{
    if (values_.empty()) return "0";
    if (values_.size() == 1) return values_[0].to_string();
    std::string s = "(";
    for (std::size_t i = 0; i < values_.size(); ++i) s += (i ? ", " : "") + values_[i].to_string();
    return s + ")";
}

Cochain coboundary_of(const Cochain& f)
{
    const int n = f.degree();
    Cochain r(n + 1);
    if (n < 0) return r;
    const BimodMap& d = minimal_diff(n);
    for (Gen g : r.gens()) r.set(g, f.evaluate(d.image(g)));
    return r;
}

bool is_cocycle(const Cochain& f) { return f.degree() < 0 || coboundary_of(f).is_zero(); }

// ---- bar cochains

AlgElem BarCochain::evaluate(const BarChain& c) const
{
    if (c.degree() != degree_) throw std::invalid_argument("bar cochain: degree mismatch");
    AlgElem r;
    c.for_each([&](std::span<const Word> t, const PolyF2& cf) {
        AlgElem v = (*this)(t.subspan(1, t.size() - 2));
        if (v.is_zero()) return;
        r += cf * (AlgElem(t.front()) * v * AlgElem(t.back()));
    });
    return r;
}

BarCochain cochain_to_bar(const Cochain& f, Comparison& cmp)
{
    auto memo = std::make_shared<std::unordered_map<std::uint64_t, AlgElem>>();
    Comparison* c = &cmp;
    return BarCochain(f.degree(), [f, memo, c](std::span<const Word> mid) {
        if (static_cast<int>(mid.size()) != f.degree()) throw std::invalid_argument("bar cochain: wrong tuple length");
        const std::uint64_t key = Comparison::middle_key(mid);
        if (auto it = memo->find(key); it != memo->end()) return it->second;
        AlgElem v = f.evaluate(c->psi_middle(mid));
        memo->emplace(key, v);
        return v;
    });
}

BarCochain identity_bar_cochain()
{
    return BarCochain(1, [](std::span<const Word> mid) { return AlgElem(mid[0]); });
}

BarCochain circle_i(const BarCochain& f, const BarCochain& g, int i)
{
    const int n = f.degree(), m = g.degree();
    if (n == 0) return BarCochain(m - 1, [](std::span<const Word>) { return AlgElem(); });
    if (i < 1 || i > n) throw std::invalid_argument("circle_i: slot index out of range");
    return BarCochain(n + m - 1, [f, g, i, m](std::span<const Word> mid) {
        const std::size_t at = static_cast<std::size_t>(i - 1);
        const AlgElem inner = g(mid.subspan(at, static_cast<std::size_t>(m)));
        std::vector<Word> t(mid.begin(), mid.begin() + static_cast<std::ptrdiff_t>(at));
        t.push_back(Word::one);
        t.insert(t.end(), mid.begin() + static_cast<std::ptrdiff_t>(at) + m, mid.end());
        AlgElem r;
        inner.for_each([&](Word w, const PolyF2& c) {
            if (w == Word::one) return;
            t[at] = w;
            r += c * f(t);
        });
        return r;
    });
}

BarCochain circle(const BarCochain& f, const BarCochain& g)
{
    const int n = f.degree();
    if (n == 0) return circle_i(f, g, 1);
    std::vector<BarCochain> parts;
    for (int i = 1; i <= n; ++i) parts.push_back(circle_i(f, g, i));
    return BarCochain(n + g.degree() - 1, [parts](std::span<const Word> mid) {
        AlgElem r;
        for (const auto& p : parts) r += p(mid);
        return r;
    });
}

Cochain pullback(const BarCochain& f, Comparison& cmp)
{
    Cochain r(f.degree());
    if (f.degree() < 0) return r;
    for (Gen g : r.gens()) r.set(g, f.evaluate(cmp.phi_generator(f.degree(), g)));
    return r;
}

Cochain cup(const Cochain& f, const Cochain& g, Comparison& cmp)
{
    const int n = f.degree(), m = g.degree();
    if (n < 0 || m < 0) return Cochain(-1);
    BarCochain fb = cochain_to_bar(f, cmp), gb = cochain_to_bar(g, cmp);
    BarCochain prod(n + m, [fb, gb, n](std::span<const Word> mid) {
        AlgElem a = fb(mid.first(static_cast<std::size_t>(n)));
        if (a.is_zero()) return a;
        return a * gb(mid.subspan(static_cast<std::size_t>(n)));
    });
    return pullback(prod, cmp);
}

Cochain gerstenhaber_bracket(const Cochain& f, const Cochain& g, Comparison& cmp)
{
    const int deg = f.degree() + g.degree() - 1;
    if (deg < 0 || f.degree() < 0 || g.degree() < 0) return Cochain(std::max(deg, -1));
    BarCochain fb = cochain_to_bar(f, cmp), gb = cochain_to_bar(g, cmp);
    BarCochain fg = circle(fb, gb), gf = circle(gb, fb);
    BarCochain sum(deg, [fg, gf](std::span<const Word> mid) { return fg(mid) + gf(mid); });
    return pullback(sum, cmp);
}

Cochain delta(const Cochain& f, DualChoice dual, Comparison& cmp)
{
    const int n = f.degree();
    if (!is_cocycle(f)) throw NotCocycle("delta: input is not a cocycle");
    if (n <= 0) return Cochain(n - 1 < -1 ? -1 : n - 1);
    std::array<AlgElem, kBasisSize> star;
    for (Word b : kBasis)
        star[index(b)] = dual == DualChoice::form_dual ? dual_basis()[index(b)] : AlgElem(complement_word(b));
    BarCochain fb = cochain_to_bar(f, cmp);
    BarCochain d(n - 1, [fb, star, n](std::span<const Word> mid) {
        AlgElem r;
        std::vector<Word> t(static_cast<std::size_t>(n));
        for (Word b : kBasis) {
            if (b == Word::one) continue;
            PolyF2 s;
            for (int i = 0; i < n; ++i) {
                // mid[i..] b mid[..i)
                std::size_t k = 0;
                for (std::size_t j = static_cast<std::size_t>(i); j < mid.size(); ++j) t[k++] = mid[j];
                t[k++] = b;
                for (std::size_t j = 0; j < static_cast<std::size_t>(i); ++j) t[k++] = mid[j];
                s += fb(t)[kSocle];
            }
            if (!s.is_zero()) r += s * star[index(b)];
        }
        return r;
    });
    return pullback(d, cmp);
}

// ---- coboundaries

std::string_view solve_mode_name(SolveMode m)
{
    switch (m) {
    case SolveMode::trivial: return "trivial";
    case SolveMode::symbolic: return "symbolic";
    case SolveMode::specialized: return "specialized";
    }
    return "?";
}

std::vector<PolyF2> flatten(const Cochain& f)
{
    std::vector<PolyF2> out;
    out.reserve(f.values().size() * kBasisSize);
    for (const auto& v : f.values())
        for (Word w : kBasis) out.push_back(v[w]);
    return out;
}

const std::vector<std::vector<PolyF2>>& coboundary_matrix(int n)
{
    if (n < 1) throw std::invalid_argument("coboundary_matrix: degree must be positive");
    static std::array<std::vector<std::vector<PolyF2>>, 4> cache;
    static std::array<std::once_flag, 4> once;
    const int k = n % 4;
    std::call_once(once[static_cast<std::size_t>(k)], [&] {
        const auto& src = generators(n - 1);
        const std::size_t rows = generators(n).size() * kBasisSize;
        std::vector<std::vector<PolyF2>> m(rows, std::vector<PolyF2>(src.size() * kBasisSize));
        for (std::size_t gi = 0; gi < src.size(); ++gi) {
            for (Word w : kBasis) {
                Cochain h(n - 1);
                h.set(src[gi], AlgElem(w));
                auto col = flatten(coboundary_of(h));
                for (std::size_t r = 0; r < rows; ++r) m[r][gi * kBasisSize + index(w)] = col[r];
            }
        }
        cache[static_cast<std::size_t>(k)] = std::move(m);
    });
    return cache[static_cast<std::size_t>(k)];
}

bool is_coboundary_at(const Cochain& f, F2kElem v, const BinaryField& field)
{
    if (f.degree() < 0) return true;
    auto b = flatten(f);
    if (f.degree() == 0) {
        for (const auto& p : b)
            if (specialize(p, v, field).value != 0) return false;
        return true;
    }
    const auto& m = coboundary_matrix(f.degree());
    SpecializedField sf{&field};
    Matrix<SpecializedField> a(m.size());
    for (std::size_t r = 0; r < m.size(); ++r)
        for (const auto& p : m[r]) a[r].push_back(specialize(p, v, field));
    std::vector<F2kElem> rhs;
    for (const auto& p : b) rhs.push_back(specialize(p, v, field));
    const std::size_t ncols = m.empty() ? 0 : m[0].size();
    return solve(sf, a, rhs, ncols).has_value();
}

CoboundaryResult is_coboundary(const Cochain& f)
{
    const int n = f.degree();
    if (n < 0) return {true, std::nullopt, SolveMode::trivial};
    if (f.is_zero()) return {true, n >= 1 ? std::optional<Cochain>(Cochain(n - 1)) : std::nullopt, SolveMode::trivial};
    if (!is_cocycle(f)) throw NotCocycle("is_coboundary: input is not a cocycle");
    if (n == 0) return {false, std::nullopt, SolveMode::trivial};

    const auto& m = coboundary_matrix(n);
    const std::size_t ncols = m[0].size();
    RationalField rf;
    Matrix<RationalField> a(m.size());
    for (std::size_t r = 0; r < m.size(); ++r)
        for (const auto& p : m[r]) a[r].emplace_back(p);
    std::vector<RationalF2> rhs;
    for (const auto& p : flatten(f)) rhs.emplace_back(p);
    auto x = solve(rf, a, rhs, ncols);
    if (!x) return {false, std::nullopt, SolveMode::symbolic};

    bool polynomial = true;
    for (const auto& v : *x) polynomial = polynomial && v.is_polynomial();
    if (polynomial) {
        Cochain h(n - 1);
        const auto& src = h.gens();
        for (std::size_t gi = 0; gi < src.size(); ++gi) {
            AlgElem v;
            for (Word w : kBasis) v.add_term(w, (*x)[gi * kBasisSize + index(w)].num());
            h.set(src[gi], v);
        }
        if (coboundary_of(h) == f) return {true, h, SolveMode::symbolic};
    }
    static const BinaryField field(16);
    for (std::uint64_t r = 2; r < 10; ++r)
        if (!is_coboundary_at(f, field.elem(r), field)) return {false, std::nullopt, SolveMode::specialized};
    return {true, std::nullopt, SolveMode::specialized};
}

bool same_class(const Cochain& a, const Cochain& b) { return is_coboundary(a + b).coboundary; }

// ---- Hochschild chains

HomologyChain::HomologyChain(int degree) : degree_(degree)
{
    if (degree < 0 || degree > BarChain::kMaxDegree + 1) throw std::invalid_argument("homology chain: degree out of range");
}

void HomologyChain::add_term(std::span<const Word> slots, const PolyF2& c)
{
    if (slots.size() != static_cast<std::size_t>(degree_) + 1) throw std::invalid_argument("homology chain: wrong slot count");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(BarChain::pack(slots), c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::string HomologyChain::to_string() const
{
    std::string s;
    for_each([&](std::span<const Word> t, const PolyF2& c) {
        if (!s.empty()) s += " + ";
        if (!c.is_one()) {
            std::string cs = c.to_string();
            s += (cs.find('+') == std::string::npos ? cs : "(" + cs + ")") + "*";
        }
        for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "|" : "") + std::string(word_name(t[i]));
    });
    return s.empty() ? "0" : s;
}

HomologyChain connes_B(const HomologyChain& c)
{
    const int n = c.degree();
    HomologyChain r(n + 1);
    std::vector<Word> u(static_cast<std::size_t>(n) + 2);
    c.for_each([&](std::span<const Word> a, const PolyF2& cf) {
        const std::size_t len = a.size();
        for (std::size_t i = 0; i < len; ++i) {
            u[0] = Word::one;
            for (std::size_t k = 0; k < len; ++k) u[k + 1] = a[(i + k) % len];
            r.add_term(u, cf);
            u[0] = a[i];
            u[1] = Word::one;
            for (std::size_t k = 1; k < len; ++k) u[k + 1] = a[(i + k) % len];
            r.add_term(u, cf);
        }
    });
    return r;
}

// ---- catalog

namespace {

AlgElem alg(std::initializer_list<std::pair<Word, PolyF2>> terms)
{
    AlgElem a;
    for (const auto& [w, c] : terms) a.add_term(w, c);
    return a;
}

}  // namespace

std::string_view generator_name(Generator g)
{
    static constexpr std::array<std::string_view, 10> names{"p1", "p2", "p3", "p4", "q1", "q2", "w1", "w2", "w3", "e"};
    return names[static_cast<std::size_t>(g)];
}

std::optional<Generator> parse_generator(std::string_view name)
{
    for (Generator g : kGenerators)
        if (generator_name(g) == name) return g;
    return std::nullopt;
}

int generator_degree(Generator g)
{
    switch (g) {
    case Generator::p1:
    case Generator::p2:
    case Generator::p3:
    case Generator::p4: return 0;
    case Generator::q1:
    case Generator::q2: return 1;
    case Generator::w1:
    case Generator::w2:
    case Generator::w3: return 2;
    case Generator::e: return 4;
    }
    return 0;
}

const Cochain& representative(Generator g)
{
    static const std::array<Cochain, 10> reps = [] {
        const PolyF2 one = PolyF2::one(), d = PolyF2::d();
        using W = Word;
        return std::array<Cochain, 10>{
            Cochain(0, {alg({{W::xy, one}, {W::yx, one}})}),
            Cochain(0, {AlgElem(W::xyx)}),
            Cochain(0, {AlgElem(W::yxy)}),
            Cochain(0, {AlgElem(W::xyxy)}),
            Cochain(1, {AlgElem(W::y), alg({{W::one, one}, {W::y, d}, {W::xy, one}})}),
            Cochain(1, {alg({{W::one, one}, {W::yx, one}}), alg({{W::xy, d}, {W::x, one}})}),
            Cochain(2, {AlgElem(W::x), AlgElem()}),
            Cochain(2, {AlgElem(), AlgElem(W::y)}),
            Cochain(2, {AlgElem(W::y), alg({{W::x, one}, {W::xy, d}})}),
            Cochain(4, {AlgElem::one()}),
        };
    }();
    return reps[static_cast<std::size_t>(g)];
}

Cochain unit_cochain() { return Cochain(0, {AlgElem::one()}); }

}  // namespace hhbv
