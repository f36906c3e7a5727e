#include "hhbv/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hhbv {

namespace {

std::size_t pow7(int n)
{
    std::size_t p = 1;
    for (int i = 0; i < n; ++i) p *= 7;
    return p;
}

using Local = std::vector<std::pair<std::size_t, Violation>>;

// Runs body(i, local) for i in [0, count); violations come back ordered by i.
template <class Body>
std::vector<Violation> sweep(std::size_t count, Exec exec, Body&& body)
{
    std::vector<Local> per_thread;
    if (exec == Exec::parallel) {
        per_thread.resize(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel for schedule(dynamic, 64)
        for (std::size_t i = 0; i < count; ++i) {
            auto& mine = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
            try {
                body(i, mine);
            }
            catch (const std::exception& ex) {
                mine.push_back({i, {"exception", 0, std::to_string(i), ex.what()}});
            }
        }
    }
    else {
        per_thread.resize(1);
        for (std::size_t i = 0; i < count; ++i) {
            try {
                body(i, per_thread[0]);
            }
            catch (const std::exception& ex) {
                per_thread[0].push_back({i, {"exception", 0, std::to_string(i), ex.what()}});
            }
        }
    }
    Local all;
    for (auto& v : per_thread) all.insert(all.end(), v.begin(), v.end());
    std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Violation> out;
    for (auto& [i, v] : all) out.push_back(std::move(v));
    return out;
}

void warm_tables()
{
    (void)basis_product(Word::one, Word::one);
    (void)dual_basis();
    for (int k = 0; k < 4; ++k) (void)minimal_diff(k);
    (void)homotopy_t(0, FreeBimodElem::term(Word::x, Gen::unit, Word::one));
    (void)homotopy_t(1, FreeBimodElem::term(Word::x, Gen::x, Word::one));
    (void)homotopy_t(2, FreeBimodElem::term(Word::x, Gen::rx, Word::one));
}

void append(SweepResult& r, std::size_t checked, std::vector<Violation> v)
{
    r.checked += checked;
    r.violations.insert(r.violations.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
}

}  // namespace

SweepResult check_minimal_complex(int maxn)
{
    SweepResult r;
    for (int n = 0; n <= maxn; ++n) {
        BimodMap dd = compose(minimal_diff(n), minimal_diff(n + 1));
        for (Gen g : dd.source()) {
            ++r.checked;
            if (!dd.image(g).is_zero())
                r.violations.push_back({"minimal-complex", n, std::string(gen_name(g)), dd.image(g).to_string()});
        }
    }
    return r;
}

SweepResult check_bar_complex(int maxdeg, Exec exec)
{
    warm_tables();
    SweepResult r;
    for (int n = 2; n <= maxdeg; ++n) {
        const std::size_t mids = pow7(n);
        const std::size_t count = 64 * mids;
        auto v = sweep(count, exec, [&](std::size_t i, Local& out) {
            std::vector<Word> slots(static_cast<std::size_t>(n) + 2);
            slots.front() = word_at(i / (8 * mids));
            slots.back() = word_at((i / mids) % 8);
            PsiTable::middle_from_index(i % mids, std::span<Word>(slots).subspan(1, static_cast<std::size_t>(n)));
            BarChain c = BarChain::term(slots);
            BarChain dd = bar_diff(bar_diff(c));
            if (!dd.is_zero()) out.push_back({i, {"bar-complex", n, c.to_string(), dd.to_string()}});
        });
        append(r, count, std::move(v));
    }
    return r;
}

SweepResult check_homotopy(int maxn, Exec exec)
{
    warm_tables();
    SweepResult r;
    for (Word b : kBasis) {
        ++r.checked;
        if (!(augmentation(homotopy_t_minus1(AlgElem(b))) == AlgElem(b)))
            r.violations.push_back({"mu-t", -1, std::string(word_name(b)), ""});
    }
    for (int n = 0; n <= maxn; ++n) {
        const auto& gens = generators(n);
        const std::size_t count = gens.size() * 64;
        auto v = sweep(count, exec, [&](std::size_t i, Local& out) {
            FreeBimodElem e = FreeBimodElem::term(word_at((i / 8) % 8), gens[i / 64], word_at(i % 8));
            FreeBimodElem s = apply_diff(n, homotopy_t(n, e));
            s += n == 0 ? homotopy_t_minus1(augmentation(e)) : homotopy_t(n - 1, apply_diff(n - 1, e));
            if (!(s == e)) out.push_back({i, {"homotopy", n, e.to_string(), (s + e).to_string()}});
        });
        append(r, count, std::move(v));
    }
    return r;
}

SweepResult check_bar_homotopy(int maxdeg, Exec exec)
{
    warm_tables();
    SweepResult r;
    for (int n = 0; n <= maxdeg; ++n) {
        const std::size_t mids = pow7(n);
        const std::size_t count = 64 * mids;
        auto v = sweep(count, exec, [&](std::size_t i, Local& out) {
            std::vector<Word> slots(static_cast<std::size_t>(n) + 2);
            slots.front() = word_at(i / (8 * mids));
            slots.back() = word_at((i / mids) % 8);
            PsiTable::middle_from_index(i % mids, std::span<Word>(slots).subspan(1, static_cast<std::size_t>(n)));
            BarChain c = BarChain::term(slots);
            BarChain s = bar_diff(homotopy_s(c));
            if (n == 0) {
                // s_{-1} mu
                basis_product(slots.front(), slots.back()).for_each([&](Word w, const PolyF2& cw) {
                    const Word t[2] = {Word::one, w};
                    s += BarChain::term(t, cw);
                });
            }
            else {
                s += homotopy_s(bar_diff(c));
            }
            if (!(s == c)) out.push_back({i, {"bar-homotopy", n, c.to_string(), (s + c).to_string()}});
        });
        append(r, count, std::move(v));
    }
    return r;
}

// ---- dense Psi tables

std::size_t PsiTable::middle_index(std::span<const Word> middle)
{
    std::size_t idx = 0;
    for (Word w : middle) {
        if (w == Word::one) throw std::invalid_argument("identity middle slot");
        idx = idx * 7 + index(w) - 1;
    }
    return idx;
}

void PsiTable::middle_from_index(std::size_t idx, std::span<Word> out)
{
    for (std::size_t i = out.size(); i-- > 0;) {
        out[i] = word_at(idx % 7 + 1);
        idx /= 7;
    }
}

PsiTable::PsiTable(int maxdeg, Exec exec)
{
    if (maxdeg < 0) throw std::invalid_argument("PsiTable: negative degree");
    warm_tables();
    levels_.push_back({FreeBimodElem::generator(Gen::unit)});
    for (int n = 1; n <= maxdeg; ++n) {
        const std::size_t sub = pow7(n - 1);
        const auto& prev = levels_.back();
        std::vector<FreeBimodElem> cur(7 * sub);
        auto fill = [&](std::size_t i) { cur[i] = homotopy_t(n - 1, act(word_at(i / sub + 1), prev[i % sub], Word::one)); };
        if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 64)
            for (std::size_t i = 0; i < cur.size(); ++i) fill(i);
        }
        else {
            for (std::size_t i = 0; i < cur.size(); ++i) fill(i);
        }
        levels_.push_back(std::move(cur));
    }
}

const FreeBimodElem& PsiTable::at(std::span<const Word> middle) const
{
    if (static_cast<int>(middle.size()) > max_degree()) throw std::out_of_range("PsiTable: degree beyond table");
    return levels_[middle.size()][middle_index(middle)];
}

FreeBimodElem PsiTable::psi(const BarChain& c) const
{
    FreeBimodElem r;
    c.for_each([&](std::span<const Word> t, const PolyF2& cf) {
        r += cf * act(t.front(), at(t.subspan(1, t.size() - 2)), t.back());
    });
    return r;
}

SweepResult check_psi_squares(const PsiTable& table, Exec exec)
{
    SweepResult r;
    for (int n = 1; n <= table.max_degree(); ++n) {
        const auto& lvl = table.level(n);
        auto v = sweep(lvl.size(), exec, [&](std::size_t i, Local& out) {
            std::vector<Word> slots(static_cast<std::size_t>(n) + 2, Word::one);
            PsiTable::middle_from_index(i, std::span<Word>(slots).subspan(1, static_cast<std::size_t>(n)));
            FreeBimodElem lhs = apply_diff(n - 1, lvl[i]);
            FreeBimodElem rhs = table.psi(bar_diff(BarChain::term(slots)));
            if (!(lhs == rhs))
                out.push_back({i, {"psi-square", n, BarChain::term(slots).to_string(), (lhs + rhs).to_string()}});
        });
        append(r, lvl.size(), std::move(v));
    }
    return r;
}

}  // namespace hhbv
