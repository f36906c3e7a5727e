#pragma once

#include "hhbv/coeff.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>

namespace hhbv {

enum class Word : std::uint8_t { one, x, y, xy, yx, xyx, yxy, xyxy };

inline constexpr std::size_t kBasisSize = 8;
inline constexpr std::array<Word, kBasisSize> kBasis{Word::one, Word::x,   Word::y,   Word::xy,
                                                     Word::yx,  Word::xyx, Word::yxy, Word::xyxy};
inline constexpr Word kSocle = Word::xyxy;

constexpr std::size_t index(Word w) { return static_cast<std::size_t>(w); }
constexpr Word word_at(std::size_t i) { return static_cast<Word>(i); }

std::string_view word_name(Word w);
std::optional<Word> parse_word(std::string_view name);

// Element of R in the basis B; zero coefficients carry no information.
class AlgElem {
public:
    AlgElem() = default;
    explicit AlgElem(Word w, PolyF2 c = PolyF2::one()) { c_[index(w)] = std::move(c); }
    static AlgElem one() { return AlgElem(Word::one); }

    const PolyF2& operator[](Word w) const { return c_[index(w)]; }
    void add_term(Word w, const PolyF2& c) { c_[index(w)] += c; }
    bool is_zero() const;
    std::size_t term_count() const;

    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t i = 0; i < kBasisSize; ++i)
            if (!c_[i].is_zero()) f(word_at(i), c_[i]);
    }

    AlgElem& operator+=(const AlgElem& o);
    friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
    friend AlgElem operator*(const PolyF2& s, AlgElem a);
    friend AlgElem operator*(const AlgElem& a, const AlgElem& b);
    friend bool operator==(const AlgElem&, const AlgElem&) = default;

    // "0", "x + d*xy", "(d^2+1)*yxy"
    std::string to_string() const;

private:
    std::array<PolyF2, kBasisSize> c_{};
};

// Image of an arbitrary word over {x,y} in R (the empty word is 1).
AlgElem normal_form(std::string_view word);

const AlgElem& basis_product(Word a, Word b);
AlgElem mul(const AlgElem& a, const AlgElem& b);

// Socle coefficient of a*b.
PolyF2 bilinear_form(const AlgElem& a, const AlgElem& b);
PolyF2 gram_entry(Word a, Word b);

// b* with <b*, c> = delta(b, c); entries of the inverse Gram matrix.
const std::array<AlgElem, kBasisSize>& dual_basis();

// The unique word w with b*w equal to the socle word (1<->xyxy, x<->yxy, y<->xyx, xy, yx fixed).
Word complement_word(Word b);

enum class Arrow : std::uint8_t { x, y };

// Element of R (x) KQ1 (x) R in the basis pairs of each arrow slot.
class TensorKQ1 {
public:
    using Key = std::tuple<Word, Arrow, Word>;
    void add_term(Word left, Arrow a, Word right, const PolyF2& c);
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, PolyF2>& terms() const { return terms_; }
    friend bool operator==(const TensorKQ1&, const TensorKQ1&) = default;

private:
    std::map<Key, PolyF2> terms_;
};

TensorKQ1 derivation_C(Word b);
TensorKQ1 derivation_C(const AlgElem& a);

}  // namespace hhbv
