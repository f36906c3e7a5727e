#include "hhbv/comparison.hpp"

#include <stdexcept>

namespace hhbv {

std::uint64_t Comparison::middle_key(std::span<const Word> middle)
{
    if (middle.size() > static_cast<std::size_t>(BarChain::kMaxDegree)) throw std::invalid_argument("bar degree out of range");
    return (static_cast<std::uint64_t>(middle.size()) << 58) | BarChain::pack(middle);
}

const BarChain& Comparison::phi_generator(int n, Gen g)
{
    if (auto it = phi_memo_.find({n, g}); it != phi_memo_.end()) return it->second;
    BarChain value(n);
    if (n == 0) {
        if (g != Gen::unit) throw std::invalid_argument("phi: generator not in P_0");
        const Word t[2] = {Word::one, Word::one};
        value.add_term(t, PolyF2::one());
    }
    else {
        value = homotopy_s(phi(n - 1, minimal_diff(n - 1).image(g)));
    }
    return phi_memo_.emplace(std::make_pair(n, g), std::move(value)).first->second;
}

BarChain Comparison::phi(int n, const FreeBimodElem& e)
{
    BarChain r(n);
    e.for_each([&](Word l, Gen g, Word rr, const PolyF2& c) { r += c * act(l, phi_generator(n, g), rr); });
    return r;
}

const FreeBimodElem& Comparison::psi_middle(std::span<const Word> middle)
{
    const std::uint64_t key = middle_key(middle);
    if (auto it = psi_memo_.find(key); it != psi_memo_.end()) return it->second;
    FreeBimodElem value;
    if (middle.empty()) {
        value = FreeBimodElem::generator(Gen::unit);
    }
    else {
        if (middle.front() == Word::one) throw std::invalid_argument("psi: identity middle slot");
        const FreeBimodElem& prev = psi_middle(middle.subspan(1));
        value = homotopy_t(static_cast<int>(middle.size()) - 1, act(middle.front(), prev, Word::one));
    }
    return psi_memo_.emplace(key, std::move(value)).first->second;
}

FreeBimodElem Comparison::psi(const BarChain& c)
{
    FreeBimodElem r;
    c.for_each([&](std::span<const Word> t, const PolyF2& cf) {
        r += cf * act(t.front(), psi_middle(t.subspan(1, t.size() - 2)), t.back());
    });
    return r;
}

std::vector<Violation> Comparison::verify_chain_maps(int maxdeg)
{
    std::vector<Violation> out;
    for (int n = 1; n <= maxdeg; ++n) {
        for (Gen g : generators(n)) {
            BarChain lhs = bar_diff(phi_generator(n, g));
            BarChain rhs = phi(n - 1, minimal_diff(n - 1).image(g));
            if (!(lhs == rhs))
                out.push_back({"phi-square", n, std::string(gen_name(g)), (lhs + rhs).to_string()});
        }
        for_each_middle(n, [&](std::span<const Word> mid) {
            std::vector<Word> slots{Word::one};
            slots.insert(slots.end(), mid.begin(), mid.end());
            slots.push_back(Word::one);
            FreeBimodElem lhs = apply_diff(n - 1, psi_middle(mid));
            FreeBimodElem rhs = psi(bar_diff(BarChain::term(slots)));
            if (!(lhs == rhs)) out.push_back({"psi-square", n, BarChain::term(slots).to_string(), (lhs + rhs).to_string()});
        });
    }
    return out;
}

Comparison& shared_comparison()
{
    static Comparison c;
    return c;
}

}  // namespace hhbv
