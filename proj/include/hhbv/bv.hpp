#pragma once

#include "hhbv/comparison.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hhbv {

// Degree-n cochain on the minimal resolution: one value per generator of P_n.
// Degree -1 is allowed and is always zero.
class Cochain {
public:
    explicit Cochain(int degree = 0);
    Cochain(int degree, std::vector<AlgElem> values);

    int degree() const { return degree_; }
    const std::vector<Gen>& gens() const { return generators(degree_); }
    const std::vector<AlgElem>& values() const { return values_; }
    const AlgElem& value(Gen g) const;
    void set(Gen g, AlgElem v);

    // Bimodule-linear evaluation on an element of P_n.
    AlgElem evaluate(const FreeBimodElem& e) const;
    bool is_zero() const;

    Cochain& operator+=(const Cochain& o);
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator*(const PolyF2& s, Cochain f);
    friend bool operator==(const Cochain&, const Cochain&) = default;

    // "(x, 1)" for two generators, "xy + yx" for one.
    std::string to_string() const;

private:
    std::size_t slot(Gen g) const;
    int degree_;
    std::vector<AlgElem> values_;
};

class NotCocycle : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// f o d_n, a cochain of degree n+1.
Cochain coboundary_of(const Cochain& f);
bool is_cocycle(const Cochain& f);

// Function on normalized bar tuples of a fixed degree.
class BarCochain {
public:
    using Fn = std::function<AlgElem(std::span<const Word>)>;
    BarCochain(int degree, Fn fn) : degree_(degree), fn_(std::move(fn)) {}
    int degree() const { return degree_; }
    AlgElem operator()(std::span<const Word> middle) const { return fn_(middle); }
    // sum of c * a_0 * f(middle) * a_{n+1}
    AlgElem evaluate(const BarChain& c) const;

private:
    int degree_;
    Fn fn_;
};

// f o Psi_n, memoized per tuple.
BarCochain cochain_to_bar(const Cochain& f, Comparison& cmp = shared_comparison());
BarCochain identity_bar_cochain();
// f o_i g, 1 <= i <= |f|; slots receive g's value with its identity component dropped.
BarCochain circle_i(const BarCochain& f, const BarCochain& g, int i);
BarCochain circle(const BarCochain& f, const BarCochain& g);
// Restriction along Phi_n to the minimal resolution.
Cochain pullback(const BarCochain& f, Comparison& cmp = shared_comparison());

Cochain cup(const Cochain& f, const Cochain& g, Comparison& cmp = shared_comparison());
Cochain gerstenhaber_bracket(const Cochain& f, const Cochain& g, Comparison& cmp = shared_comparison());

// form_dual: the Gram-inverse dual basis. word_complement: b* read as the complementary word
// (kept as a diagnostic; it does not give a well-defined operator for d != 0).
enum class DualChoice { form_dual, word_complement };
// Throws NotCocycle.
Cochain delta(const Cochain& f, DualChoice dual = DualChoice::form_dual, Comparison& cmp = shared_comparison());

enum class SolveMode { trivial, symbolic, specialized };
std::string_view solve_mode_name(SolveMode m);

struct CoboundaryResult {
    bool coboundary = false;
    std::optional<Cochain> witness;  // h with h o d = f, when found with polynomial entries
    SolveMode mode = SolveMode::trivial;
};

// Throws NotCocycle.
CoboundaryResult is_coboundary(const Cochain& f);
bool same_class(const Cochain& a, const Cochain& b);

// Flattened coefficients (generator-major, basis-minor) and the coboundary matrix of degree n.
std::vector<PolyF2> flatten(const Cochain& f);
const std::vector<std::vector<PolyF2>>& coboundary_matrix(int n);  // rows: P_n slots, cols: P_{n-1} slots

// Class test after d -> v.
bool is_coboundary_at(const Cochain& f, F2kElem v, const BinaryField& field);

// Element of R^{(x)(n+1)} in the basis B^{n+1}.
class HomologyChain {
public:
    explicit HomologyChain(int degree);
    int degree() const { return degree_; }
    void add_term(std::span<const Word> slots, const PolyF2& c);
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::uint64_t, PolyF2>& terms() const { return terms_; }
    friend bool operator==(const HomologyChain&, const HomologyChain&) = default;
    std::string to_string() const;

    template <class F>
    void for_each(F&& f) const
    {
        std::vector<Word> buf(static_cast<std::size_t>(degree_) + 1);
        for (const auto& [k, c] : terms_) {
            BarChain::unpack(k, buf);
            f(std::span<const Word>(buf), c);
        }
    }

private:
    int degree_;
    std::map<std::uint64_t, PolyF2> terms_;
};

HomologyChain connes_B(const HomologyChain& c);

// ---- generators of the cohomology ring

enum class Generator : std::uint8_t { p1, p2, p3, p4, q1, q2, w1, w2, w3, e };
inline constexpr std::array<Generator, 10> kGenerators{Generator::p1, Generator::p2, Generator::p3, Generator::p4,
                                                      Generator::q1, Generator::q2, Generator::w1, Generator::w2,
                                                      Generator::w3, Generator::e};

std::string_view generator_name(Generator g);
std::optional<Generator> parse_generator(std::string_view name);
int generator_degree(Generator g);
const Cochain& representative(Generator g);
Cochain unit_cochain();

}  // namespace hhbv
