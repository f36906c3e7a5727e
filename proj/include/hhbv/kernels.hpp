#pragma once

#include "hhbv/comparison.hpp"

#include <cstddef>
#include <vector>

namespace hhbv {

enum class Exec { serial, parallel };

struct SweepResult {
    std::size_t checked = 0;
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// d_n d_{n+1} = 0 on generators, n = 0..maxn.
SweepResult check_minimal_complex(int maxn);

// bar_diff o bar_diff = 0 on every K-basis tuple (all outer slots) of degree 2..maxdeg.
SweepResult check_bar_complex(int maxdeg, Exec exec);

// t d + d t = id on the K-basis of P_n for n = 0..maxn, and mu t_{-1} = id on B.
SweepResult check_homotopy(int maxn, Exec exec);

// s d + d s = id on K-basis tuples a_0 (x) ... (x) a_n (x) 1 of degree 0..maxdeg.
SweepResult check_bar_homotopy(int maxdeg, Exec exec);

// Dense Psi_n(1 (x) middle (x) 1) for all middles of length <= maxdeg, built level by level.
class PsiTable {
public:
    PsiTable(int maxdeg, Exec exec);
    int max_degree() const { return static_cast<int>(levels_.size()) - 1; }
    const FreeBimodElem& at(std::span<const Word> middle) const;
    const std::vector<FreeBimodElem>& level(int n) const { return levels_[static_cast<std::size_t>(n)]; }
    FreeBimodElem psi(const BarChain& c) const;

    static std::size_t middle_index(std::span<const Word> middle);
    static void middle_from_index(std::size_t idx, std::span<Word> out);

private:
    std::vector<std::vector<FreeBimodElem>> levels_;
};

// d Psi_n = Psi_{n-1} bar_diff on every middle tuple, n = 1..table.max_degree().
SweepResult check_psi_squares(const PsiTable& table, Exec exec);

}  // namespace hhbv
