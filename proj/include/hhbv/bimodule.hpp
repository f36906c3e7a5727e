#pragma once

#include "hhbv/algebra.hpp"

#include <boost/container/flat_map.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hhbv {

// Generator names of the free bimodules: the unit generator of Lambda, the arrows, the relations.
enum class Gen : std::uint8_t { unit, x, y, rx, ry };

std::string_view gen_name(Gen g);
std::optional<Gen> parse_gen(std::string_view name);

class FreeBimodElem {
public:
    using Key = std::uint16_t;

    FreeBimodElem() = default;
    static FreeBimodElem generator(Gen g) { return term(Word::one, g, Word::one); }
    static FreeBimodElem term(Word left, Gen g, Word right, const PolyF2& c = PolyF2::one());

    static Key key(Word l, Gen g, Word r)
    {
        return static_cast<Key>(static_cast<unsigned>(g) * 64 + index(l) * 8 + index(r));
    }
    static Gen key_gen(Key k) { return static_cast<Gen>(k / 64); }
    static Word key_left(Key k) { return word_at((k / 8) % 8); }
    static Word key_right(Key k) { return word_at(k % 8); }

    void add_term(Word left, Gen g, Word right, const PolyF2& c);
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const boost::container::flat_map<Key, PolyF2>& terms() const { return terms_; }

    template <class F>
    void for_each(F&& f) const
    {
        for (const auto& [k, c] : terms_) f(key_left(k), key_gen(k), key_right(k), c);
    }

    FreeBimodElem& operator+=(const FreeBimodElem& o);
    friend FreeBimodElem operator+(FreeBimodElem a, const FreeBimodElem& b) { return a += b; }
    friend FreeBimodElem operator*(const PolyF2& s, const FreeBimodElem& e);
    friend bool operator==(const FreeBimodElem&, const FreeBimodElem&) = default;

    // "x|rx|1 + d*1|ry|xyx"; the unit generator prints as "a|b".
    std::string to_string() const;

private:
    boost::container::flat_map<Key, PolyF2> terms_;
};

FreeBimodElem act(const AlgElem& left, const FreeBimodElem& e, const AlgElem& right);
FreeBimodElem act(Word left, const FreeBimodElem& e, Word right);

class BimodMap {
public:
    BimodMap(std::vector<Gen> source, std::vector<Gen> target, std::map<Gen, FreeBimodElem> images);
    static BimodMap identity(const std::vector<Gen>& gens);
    static BimodMap zero(const std::vector<Gen>& source, const std::vector<Gen>& target);

    const std::vector<Gen>& source() const { return source_; }
    const std::vector<Gen>& target() const { return target_; }
    // Throws std::invalid_argument for a generator outside the source.
    const FreeBimodElem& image(Gen g) const;
    FreeBimodElem apply(const FreeBimodElem& e) const;
    bool is_zero() const;

    friend bool operator==(const BimodMap&, const BimodMap&) = default;

private:
    std::vector<Gen> source_, target_;
    std::map<Gen, FreeBimodElem> images_;
};

// m2 after m1; throws std::invalid_argument when target(m1) != source(m2).
BimodMap compose(const BimodMap& m2, const BimodMap& m1);

// The arrow slot of R (x) KQ1 (x) R as generators x, y of P1.
FreeBimodElem to_free(const TensorKQ1& t);

}  // namespace hhbv
