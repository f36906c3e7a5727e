#pragma once

#include "hhbv/resolution.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hhbv {

struct Violation {
    std::string check;
    int degree = 0;
    std::string input;
    std::string detail;
};

// Phi : P -> Bar and Psi : Bar -> P with per-degree memo tables.
// Memo construction is single-threaded; a Comparison is not shared across threads while it grows.
class Comparison {
public:
    const BarChain& phi_generator(int n, Gen g);
    BarChain phi(int n, const FreeBimodElem& e);

    // Psi_n(1 (x) middle (x) 1); middle slots must not be the identity.
    const FreeBimodElem& psi_middle(std::span<const Word> middle);
    FreeBimodElem psi(const BarChain& c);

    // Phi and Psi squares in degrees 1..maxdeg (Psi on every basis tuple).
    std::vector<Violation> verify_chain_maps(int maxdeg);

    std::size_t psi_cache_size() const { return psi_memo_.size(); }
    std::size_t phi_cache_size() const { return phi_memo_.size(); }

    static std::uint64_t middle_key(std::span<const Word> middle);

private:
    std::map<std::pair<int, Gen>, BarChain> phi_memo_;
    std::unordered_map<std::uint64_t, FreeBimodElem> psi_memo_;
};

// Process-wide instance used by the cochain operations.
Comparison& shared_comparison();

// Calls f on every tuple of n non-identity basis words, in lexicographic order.
template <class F>
void for_each_middle(int n, F&& f)
{
    std::vector<Word> t(static_cast<std::size_t>(n), Word::x);
    if (n == 0) {
        f(std::span<const Word>(t));
        return;
    }
    while (true) {
        f(std::span<const Word>(t));
        int i = n - 1;
        while (i >= 0 && t[static_cast<std::size_t>(i)] == Word::xyxy) t[static_cast<std::size_t>(i--)] = Word::x;
        if (i < 0) return;
        auto& w = t[static_cast<std::size_t>(i)];
        w = word_at(index(w) + 1);
    }
}

}  // namespace hhbv
