#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace hhbv {

// Polynomial in d over GF(2). Bit k of the limb sequence is the coefficient of d^k.
class PolyF2 {
public:
    using Limb = std::uint64_t;

    PolyF2() = default;

    static PolyF2 one();
    static PolyF2 d();
    static PolyF2 monomial(unsigned k);
    static PolyF2 from_limb(Limb bits);
    // Little-endian bit string, "1101" = 1 + d + d^3. Throws std::invalid_argument.
    static PolyF2 from_bits(std::string_view bits);

    bool is_zero() const { return limbs_.empty(); }
    bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }
    int degree() const;
    bool coeff(unsigned k) const;
    bool constant_term() const { return !limbs_.empty() && (limbs_[0] & 1u); }
    // Low 64 coefficients; callers check degree() < 64 first.
    Limb low_limb() const { return limbs_.empty() ? 0 : limbs_[0]; }

    std::string to_bits() const;
    // Human form: "0", "1", "d", "d^2+d+1".
    std::string to_string() const;

    PolyF2& operator+=(const PolyF2& o);
    friend PolyF2 operator+(PolyF2 a, const PolyF2& b) { return a += b; }
    friend PolyF2 operator*(const PolyF2& a, const PolyF2& b);
    PolyF2& operator*=(const PolyF2& o) { return *this = *this * o; }

    friend bool operator==(const PolyF2& a, const PolyF2& b) { return a.limbs_ == b.limbs_; }
    friend std::strong_ordering operator<=>(const PolyF2& a, const PolyF2& b);

    // Quotient and remainder; throws std::domain_error on division by zero.
    static std::pair<PolyF2, PolyF2> divmod(const PolyF2& a, const PolyF2& b);
    static PolyF2 gcd(PolyF2 a, PolyF2 b);

    std::size_t hash() const;

private:
    void trim();
    boost::container::small_vector<Limb, 1> limbs_;
};

struct F2kElem {
    std::uint64_t value = 0;
    friend bool operator==(F2kElem, F2kElem) = default;
};

// GF(2^k) as GF(2)[z]/(m(z)), 1 <= k <= 32; the modulus is checked for irreducibility.
class BinaryField {
public:
    // Uses the lexicographically smallest irreducible modulus of degree k.
    explicit BinaryField(unsigned k);
    // modulus includes the leading bit z^k.
    BinaryField(unsigned k, std::uint64_t modulus);

    unsigned degree() const { return k_; }
    std::uint64_t modulus() const { return modulus_; }
    std::uint64_t size() const { return std::uint64_t{1} << k_; }

    F2kElem elem(std::uint64_t residue) const;
    F2kElem zero() const { return {}; }
    F2kElem one() const { return {1}; }
    F2kElem add(F2kElem a, F2kElem b) const { return {a.value ^ b.value}; }
    F2kElem mul(F2kElem a, F2kElem b) const;
    F2kElem pow(F2kElem a, std::uint64_t e) const;
    F2kElem inv(F2kElem a) const;

    static bool is_irreducible(std::uint64_t poly, unsigned k);

private:
    std::uint64_t reduce(std::uint64_t v) const;
    unsigned k_;
    std::uint64_t modulus_;
};

// Evaluation homomorphism d -> v.
F2kElem specialize(const PolyF2& p, F2kElem v, const BinaryField& f);

// Element of GF(2)(d), kept reduced with nonzero denominator.
class RationalF2 {
public:
    RationalF2() : den_(PolyF2::one()) {}
    RationalF2(PolyF2 num) : num_(std::move(num)), den_(PolyF2::one()) {}  // NOLINT
    RationalF2(PolyF2 num, PolyF2 den);

    const PolyF2& num() const { return num_; }
    const PolyF2& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    RationalF2 inverse() const;
    std::string to_string() const;

    friend RationalF2 operator+(const RationalF2& a, const RationalF2& b);
    friend RationalF2 operator*(const RationalF2& a, const RationalF2& b);
    friend bool operator==(const RationalF2& a, const RationalF2& b) = default;

private:
    PolyF2 num_, den_;
};

}  // namespace hhbv
