#include "hhbv/algebra.hpp"

#include "hhbv/linalg.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace hhbv {

namespace {

constexpr std::array<std::string_view, kBasisSize> kNames{"1", "x", "y", "xy", "yx", "xyx", "yxy", "xyxy"};

struct Rule {
    std::string_view lhs;
    std::vector<std::pair<std::string_view, PolyF2>> rhs;
};

const std::vector<Rule>& rules()
{
    static const std::vector<Rule> r{
        {"xyxyx", {}},
        {"yxyxy", {}},
        {"yxyx", {{"xyxy", PolyF2::one()}}},
        {"xx", {{"yxy", PolyF2::one()}}},
        {"yy", {{"xyx", PolyF2::one()}, {"xyxy", PolyF2::d()}}},
    };
    return r;
}

}  // namespace

std::string_view word_name(Word w) { return kNames[index(w)]; }

std::optional<Word> parse_word(std::string_view name)
{
    for (std::size_t i = 0; i < kBasisSize; ++i)
        if (kNames[i] == name) return word_at(i);
    if (name.empty()) return Word::one;
    return std::nullopt;
}

bool AlgElem::is_zero() const
{
    for (const auto& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

std::size_t AlgElem::term_count() const
{
    std::size_t n = 0;
    for (const auto& c : c_) n += !c.is_zero();
    return n;
}

AlgElem& AlgElem::operator+=(const AlgElem& o)
{
    for (std::size_t i = 0; i < kBasisSize; ++i)
        if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
    return *this;
}

AlgElem operator*(const PolyF2& s, AlgElem a)
{
    for (auto& c : a.c_)
        if (!c.is_zero()) c = s * c;
    return a;
}

AlgElem operator*(const AlgElem& a, const AlgElem& b) { return mul(a, b); }

std::string AlgElem::to_string() const
{
    std::string s;
    for_each([&](Word w, const PolyF2& c) {
        if (!s.empty()) s += " + ";
        std::string cs = c.to_string();
        if (c.is_one()) {
            s += word_name(w);
            return;
        }
        bool mono = cs.find('+') == std::string::npos;
        s += mono ? cs : "(" + cs + ")";
        if (w != Word::one) s += "*" + std::string(word_name(w));
    });
    return s.empty() ? "0" : s;
}

AlgElem normal_form(std::string_view word)
{
    for (char ch : word)
        if (ch != 'x' && ch != 'y') throw std::invalid_argument("word must be over {x,y}: " + std::string(word));
    AlgElem out;
    std::unordered_map<std::string, PolyF2> todo{{std::string(word), PolyF2::one()}};
    while (!todo.empty()) {
        auto node = todo.extract(todo.begin());
        const std::string& w = node.key();
        const PolyF2& c = node.mapped();
        if (c.is_zero() || w.size() >= 5) continue;
        const Rule* hit = nullptr;
        std::size_t pos = 0;
        for (; pos < w.size() && !hit; ++pos)
            for (const auto& r : rules())
                if (w.compare(pos, r.lhs.size(), r.lhs) == 0) {
                    hit = &r;
                    break;
                }
        if (!hit) {
            out.add_term(*parse_word(w), c);
            continue;
        }
        --pos;
        for (const auto& [rw, rc] : hit->rhs) {
            std::string nw = w.substr(0, pos) + std::string(rw) + w.substr(pos + hit->lhs.size());
            todo[nw] += c * rc;
        }
    }
    return out;
}

const AlgElem& basis_product(Word a, Word b)
{
    static const auto table = [] {
        std::array<std::array<AlgElem, kBasisSize>, kBasisSize> t;
        for (Word u : kBasis)
            for (Word v : kBasis) {
                std::string w;
                if (u != Word::one) w += word_name(u);
                if (v != Word::one) w += word_name(v);
                t[index(u)][index(v)] = normal_form(w);
            }
        return t;
    }();
    return table[index(a)][index(b)];
}

AlgElem mul(const AlgElem& a, const AlgElem& b)
{
    AlgElem r;
    a.for_each([&](Word u, const PolyF2& cu) {
        b.for_each([&](Word v, const PolyF2& cv) {
            PolyF2 c = cu * cv;
            basis_product(u, v).for_each([&](Word w, const PolyF2& cw) { r.add_term(w, c * cw); });
        });
    });
    return r;
}

PolyF2 bilinear_form(const AlgElem& a, const AlgElem& b) { return mul(a, b)[kSocle]; }

PolyF2 gram_entry(Word a, Word b) { return basis_product(a, b)[kSocle]; }

const std::array<AlgElem, kBasisSize>& dual_basis()
{
    static const auto dual = [] {
        RationalField f;
        Matrix<RationalField> g(kBasisSize);
        for (std::size_t i = 0; i < kBasisSize; ++i)
            for (std::size_t j = 0; j < kBasisSize; ++j) g[i].push_back(RationalF2(gram_entry(word_at(i), word_at(j))));
        std::array<AlgElem, kBasisSize> out;
        for (std::size_t b = 0; b < kBasisSize; ++b) {
            // row b of G^{-1}: solve G^T a = e_b, G symmetric
            std::vector<RationalF2> rhs(kBasisSize);
            rhs[b] = RationalF2(PolyF2::one());
            auto sol = solve(f, g, rhs, kBasisSize);
            if (!sol) throw std::logic_error("Gram matrix is singular");
            for (std::size_t j = 0; j < kBasisSize; ++j) {
                if (!(*sol)[j].is_polynomial()) throw std::logic_error("Gram inverse is not polynomial");
                out[b].add_term(word_at(j), (*sol)[j].num());
            }
        }
        return out;
    }();
    return dual;
}

Word complement_word(Word b)
{
    static constexpr std::array<Word, kBasisSize> comp{Word::xyxy, Word::yxy, Word::xyx, Word::xy,
                                                       Word::yx,   Word::y,   Word::x,   Word::one};
    return comp[index(b)];
}

void TensorKQ1::add_term(Word left, Arrow a, Word right, const PolyF2& c)
{
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace({left, a, right}, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorKQ1 derivation_C(Word b)
{
    TensorKQ1 r;
    const std::string_view w = word_name(b);
    if (b == Word::one) return r;
    for (std::size_t i = 0; i < w.size(); ++i) {
        AlgElem left = normal_form(w.substr(0, i));
        AlgElem right = normal_form(w.substr(i + 1));
        Arrow a = w[i] == 'x' ? Arrow::x : Arrow::y;
        left.for_each([&](Word l, const PolyF2& cl) {
            right.for_each([&](Word rr, const PolyF2& cr) { r.add_term(l, a, rr, cl * cr); });
        });
    }
    return r;
}

TensorKQ1 derivation_C(const AlgElem& a)
{
    TensorKQ1 r;
    a.for_each([&](Word w, const PolyF2& c) {
        const TensorKQ1 cw = derivation_C(w);
        for (const auto& [k, v] : cw.terms()) r.add_term(std::get<0>(k), std::get<1>(k), std::get<2>(k), c * v);
    });
    return r;
}

}  // namespace hhbv
