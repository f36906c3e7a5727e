#include "hhbv/suites.hpp"

#include <omp.h>

#include <algorithm>
#include <random>

namespace hhbv {

namespace {

Monomial mono(Generator g) { return {g}; }

// Zero of the given degree when the term is absent.
Cochain cup_or_zero(const Cochain& a, const Cochain& b, int degree, Comparison& cmp)
{
    if (a.degree() < 0 || b.degree() < 0) return Cochain(degree);
    return cup(a, b, cmp);
}

void record_class(SweepResult& r, const std::string& check, const std::string& input, const Cochain& f)
{
    ++r.checked;
    try {
        if (!is_coboundary(f).coboundary) r.violations.push_back({check, f.degree(), input, f.to_string()});
    }
    catch (const NotCocycle& e) {
        r.violations.push_back({check, f.degree(), input, e.what()});
    }
}

std::string pair_name(Generator a, Generator b)
{
    return std::string(generator_name(a)) + "," + std::string(generator_name(b));
}

}  // namespace

SweepResult check_cocycles()
{
    SweepResult r;
    for (Generator g : kGenerators) {
        ++r.checked;
        if (!is_cocycle(representative(g)))
            r.violations.push_back({"cocycle", generator_degree(g), std::string(generator_name(g)), "f o d != 0"});
    }
    return r;
}

SweepResult check_delta_squared(ProductCache& cache)
{
    SweepResult r;
    std::vector<Monomial> inputs{{}};
    for (Generator g : kGenerators) inputs.push_back({g});
    std::vector<Monomial> all;
    for (std::size_t i = 0; i < inputs.size(); ++i)
        for (std::size_t j = i; j < inputs.size(); ++j) {
            Monomial m = monomial_product(inputs[i], inputs[j]);
            if (monomial_degree(m) >= 2 && std::find(all.begin(), all.end(), m) == all.end()) all.push_back(m);
        }
    for (const auto& m : all) {
        try {
            Cochain dd = delta(delta(cache.get(m), DualChoice::form_dual, cache.comparison()), DualChoice::form_dual,
                               cache.comparison());
            record_class(r, "delta o delta", monomial_name(m), dd);
        }
        catch (const NotCocycle& e) {
            ++r.checked;
            r.violations.push_back({"delta o delta", monomial_degree(m), monomial_name(m), e.what()});
        }
    }
    return r;
}

SweepResult check_bv_identity(ProductCache& cache, DualChoice dual)
{
    SweepResult r;
    Comparison& cmp = cache.comparison();
    for (std::size_t i = 0; i < kGenerators.size(); ++i)
        for (std::size_t j = i; j < kGenerators.size(); ++j) {
            Generator ga = kGenerators[i], gb = kGenerators[j];
            const Cochain& a = cache.get(mono(ga));
            const Cochain& b = cache.get(mono(gb));
            const int n = a.degree() + b.degree() - 1;
            if (n < 0) {
                ++r.checked;
                continue;
            }
            Cochain sum = gerstenhaber_bracket(a, b, cmp);
            sum += delta(cache.get(monomial_product(mono(ga), mono(gb))), dual, cmp);
            sum += cup_or_zero(delta(a, dual, cmp), b, n, cmp);
            sum += cup_or_zero(a, delta(b, dual, cmp), n, cmp);
            record_class(r, "bv identity", pair_name(ga, gb), sum);
        }
    return r;
}

SweepResult check_graded_commutativity(ProductCache& cache)
{
    SweepResult r;
    Comparison& cmp = cache.comparison();
    for (std::size_t i = 0; i < kGenerators.size(); ++i)
        for (std::size_t j = i + 1; j < kGenerators.size(); ++j) {
            const Cochain& a = cache.get(mono(kGenerators[i]));
            const Cochain& b = cache.get(mono(kGenerators[j]));
            record_class(r, "graded commutativity", pair_name(kGenerators[i], kGenerators[j]),
                         cup(a, b, cmp) + cup(b, a, cmp));
        }
    return r;
}

SweepResult check_poisson(ProductCache& cache, int samples, std::uint64_t seed)
{
    SweepResult r;
    Comparison& cmp = cache.comparison();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, kGenerators.size() - 1);
    for (int s = 0; s < samples;) {
        Generator ga = kGenerators[pick(rng)], gb = kGenerators[pick(rng)], gc = kGenerators[pick(rng)];
        const int total = generator_degree(ga) + generator_degree(gb) + generator_degree(gc);
        if (total > 5) continue;
        ++s;
        const int n = total - 1;
        const std::string name = std::string(generator_name(ga)) + "," + std::string(generator_name(gb)) + "," +
                                 std::string(generator_name(gc));
        if (n < 0) {
            ++r.checked;
            continue;
        }
        const Cochain& a = cache.get(mono(ga));
        const Cochain& b = cache.get(mono(gb));
        const Cochain& c = cache.get(mono(gc));
        Cochain sum = gerstenhaber_bracket(cup(a, b, cmp), c, cmp);
        Cochain ac = gerstenhaber_bracket(a, c, cmp);
        Cochain bc = gerstenhaber_bracket(b, c, cmp);
        sum += cup_or_zero(ac, b, n, cmp);
        sum += cup_or_zero(a, bc, n, cmp);
        record_class(r, "poisson", name, sum);
    }
    return r;
}

SweepResult check_relations(ProductCache& cache, const std::vector<std::string>& relations)
{
    SweepResult r;
    for (const auto& rc : check_ideal_relations(relations, cache)) {
        ++r.checked;
        if (!rc.coboundary) r.violations.push_back({"ideal relation", rc.degree, rc.relation, "not a coboundary"});
    }
    return r;
}

SweepResult check_connes(int maxdeg, Exec exec)
{
    SweepResult r;
    for (int n = 0; n <= maxdeg; ++n) {
        std::size_t count = 1;
        for (int i = 0; i <= n; ++i) count *= kBasisSize;
        std::vector<std::vector<Violation>> found(static_cast<std::size_t>(omp_get_max_threads()));
        const auto body = [&](std::size_t idx, std::vector<Violation>& out) {
            std::vector<Word> slots(static_cast<std::size_t>(n) + 1);
            std::size_t rest = idx;
            for (auto& w : slots) {
                w = word_at(rest % kBasisSize);
                rest /= kBasisSize;
            }
            HomologyChain c(n);
            c.add_term(slots, PolyF2::one());
            HomologyChain bb = connes_B(connes_B(c));
            if (!bb.is_zero()) out.push_back({"B o B", n, c.to_string(), bb.to_string()});
        };
        if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 64)
            for (std::size_t idx = 0; idx < count; ++idx) body(idx, found[static_cast<std::size_t>(omp_get_thread_num())]);
        }
        else {
            for (std::size_t idx = 0; idx < count; ++idx) body(idx, found[0]);
        }
        r.checked += count;
        for (auto& v : found) r.violations.insert(r.violations.end(), v.begin(), v.end());
    }
    return r;
}

bool psi3_phi3_is_identity(Comparison& cmp)
{
    FreeBimodElem g = FreeBimodElem::generator(Gen::unit);
    return cmp.psi(cmp.phi(3, g)) == g;
}

}  // namespace hhbv
