#include "hhbv/bimodule.hpp"

#include <algorithm>
#include <stdexcept>

namespace hhbv {

namespace {
constexpr std::array<std::string_view, 5> kGenNames{"1", "x", "y", "rx", "ry"};
}

std::string_view gen_name(Gen g) { return kGenNames[static_cast<std::size_t>(g)]; }

std::optional<Gen> parse_gen(std::string_view name)
{
    for (std::size_t i = 0; i < kGenNames.size(); ++i)
        if (kGenNames[i] == name) return static_cast<Gen>(i);
    return std::nullopt;
}

FreeBimodElem FreeBimodElem::term(Word left, Gen g, Word right, const PolyF2& c)
{
    FreeBimodElem e;
    e.add_term(left, g, right, c);
    return e;
}

void FreeBimodElem::add_term(Word left, Gen g, Word right, const PolyF2& c)
{
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(key(left, g, right), c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FreeBimodElem& FreeBimodElem::operator+=(const FreeBimodElem& o)
{
    for (const auto& [k, c] : o.terms_) add_term(key_left(k), key_gen(k), key_right(k), c);
    return *this;
}

FreeBimodElem operator*(const PolyF2& s, const FreeBimodElem& e)
{
    FreeBimodElem r;
    if (s.is_zero()) return r;
    for (const auto& [k, c] : e.terms_) r.terms_.emplace_hint(r.terms_.end(), k, s * c);
    return r;
}

std::string FreeBimodElem::to_string() const
{
    std::string s;
    for_each([&](Word l, Gen g, Word r, const PolyF2& c) {
        if (!s.empty()) s += " + ";
        if (!c.is_one()) {
            std::string cs = c.to_string();
            s += (cs.find('+') == std::string::npos ? cs : "(" + cs + ")") + "*";
        }
        s += std::string(word_name(l)) + "|";
        if (g != Gen::unit) s += std::string(gen_name(g)) + "|";
        s += word_name(r);
    });
    return s.empty() ? "0" : s;
}

FreeBimodElem act(Word left, const FreeBimodElem& e, Word right)
{
    FreeBimodElem r;
    e.for_each([&](Word l, Gen g, Word rr, const PolyF2& c) {
        const AlgElem& lp = basis_product(left, l);
        const AlgElem& rp = basis_product(rr, right);
        lp.for_each([&](Word a, const PolyF2& ca) {
            PolyF2 cac = ca * c;
            rp.for_each([&](Word b, const PolyF2& cb) { r.add_term(a, g, b, cac * cb); });
        });
    });
    return r;
}

FreeBimodElem act(const AlgElem& left, const FreeBimodElem& e, const AlgElem& right)
{
    FreeBimodElem r;
    left.for_each([&](Word a, const PolyF2& ca) {
        right.for_each([&](Word b, const PolyF2& cb) { r += (ca * cb) * act(a, e, b); });
    });
    return r;
}

BimodMap::BimodMap(std::vector<Gen> source, std::vector<Gen> target, std::map<Gen, FreeBimodElem> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images))
{
    for (Gen g : source_) images_.try_emplace(g);
    for (const auto& [g, img] : images_) {
        if (std::find(source_.begin(), source_.end(), g) == source_.end())
            throw std::invalid_argument("image given for a generator outside the source");
        img.for_each([&](Word, Gen h, Word, const PolyF2&) {
            if (std::find(target_.begin(), target_.end(), h) == target_.end())
                throw std::invalid_argument("image leaves the target module");
        });
    }
}

BimodMap BimodMap::identity(const std::vector<Gen>& gens)
{
    std::map<Gen, FreeBimodElem> im;
    for (Gen g : gens) im[g] = FreeBimodElem::generator(g);
    return BimodMap(gens, gens, std::move(im));
}

BimodMap BimodMap::zero(const std::vector<Gen>& source, const std::vector<Gen>& target)
{
    return BimodMap(source, target, {});
}

const FreeBimodElem& BimodMap::image(Gen g) const
{
    auto it = images_.find(g);
    if (it == images_.end()) throw std::invalid_argument("unknown generator " + std::string(gen_name(g)));
    return it->second;
}

FreeBimodElem BimodMap::apply(const FreeBimodElem& e) const
{
    FreeBimodElem r;
    e.for_each([&](Word l, Gen g, Word rr, const PolyF2& c) { r += c * act(l, image(g), rr); });
    return r;
}

bool BimodMap::is_zero() const
{
    return std::all_of(images_.begin(), images_.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

BimodMap compose(const BimodMap& m2, const BimodMap& m1)
{
    if (m1.target() != m2.source()) throw std::invalid_argument("compose: shape mismatch");
    std::map<Gen, FreeBimodElem> im;
    for (Gen g : m1.source()) im[g] = m2.apply(m1.image(g));
    return BimodMap(m1.source(), m2.target(), std::move(im));
}

FreeBimodElem to_free(const TensorKQ1& t)
{
    FreeBimodElem r;
    for (const auto& [k, c] : t.terms()) {
        const auto& [l, a, rr] = k;
        r.add_term(l, a == Arrow::x ? Gen::x : Gen::y, rr, c);
    }
    return r;
}

}  // namespace hhbv
