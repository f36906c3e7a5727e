#pragma once

#include "hhbv/bimodule.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace hhbv {

// Generators of P_n; empty for n < 0.
const std::vector<Gen>& generators(int n);

// d_n : P_{n+1} -> P_n, 4-periodic.
const BimodMap& minimal_diff(int n);
FreeBimodElem apply_diff(int n, const FreeBimodElem& e);

// The explicitly listed degree-3 differential image of the unit generator.
FreeBimodElem lambda_listed();

// mu : P_0 -> R
AlgElem augmentation(const FreeBimodElem& e);

// t_n : P_n -> P_{n+1}, K-linear, right R-linear; t_{n+4} = t_n.
FreeBimodElem homotopy_t(int n, const FreeBimodElem& e);
// t_{-1} : R -> P_0
FreeBimodElem homotopy_t_minus1(const AlgElem& a);

// Element of R (x) Rbar^{(x)n} (x) R. Middle slots are never the identity word.
class BarChain {
public:
    static constexpr int kMaxDegree = 19;

    explicit BarChain(int degree = 0);
    static BarChain term(std::span<const Word> slots, const PolyF2& c = PolyF2::one());

    int degree() const { return degree_; }
    std::size_t slot_count() const { return static_cast<std::size_t>(degree_) + 2; }

    // Throws std::invalid_argument on a wrong slot count or an identity middle slot.
    void add_term(std::span<const Word> slots, const PolyF2& c);
    void add_packed(std::uint64_t key, const PolyF2& c);
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::map<std::uint64_t, PolyF2>& terms() const { return terms_; }

    template <class F>
    void for_each(F&& f) const
    {
        std::vector<Word> buf(slot_count());
        for (const auto& [k, c] : terms_) {
            unpack(k, buf);
            f(std::span<const Word>(buf), c);
        }
    }

    static std::uint64_t pack(std::span<const Word> slots);
    static void unpack(std::uint64_t key, std::span<Word> out);

    BarChain& operator+=(const BarChain& o);
    friend BarChain operator+(BarChain a, const BarChain& b) { return a += b; }
    friend BarChain operator*(const PolyF2& s, const BarChain& c);
    friend bool operator==(const BarChain&, const BarChain&) = default;

    std::string to_string() const;

private:
    int degree_;
    std::map<std::uint64_t, PolyF2> terms_;
};

BarChain act(const AlgElem& left, const BarChain& c, const AlgElem& right);
BarChain act(Word left, const BarChain& c, Word right);

// Normalized bar differential; degree >= 1.
BarChain bar_diff(const BarChain& c);
// s(a_0 (x) ... (x) a_{n+1}) = 1 (x) a_0 (x) ... (x) a_{n+1}; zero when a_0 = 1.
BarChain homotopy_s(const BarChain& c);

}  // namespace hhbv
