#include "hhbv/coeff.hpp"

#include <bit>
#include <stdexcept>

namespace hhbv {

PolyF2 PolyF2::one() { return from_limb(1); }
PolyF2 PolyF2::d() { return from_limb(2); }

PolyF2 PolyF2::monomial(unsigned k)
{
    PolyF2 p;
    p.limbs_.assign(k / 64 + 1, 0);
    p.limbs_.back() = Limb{1} << (k % 64);
    return p;
}

PolyF2 PolyF2::from_limb(Limb bits)
{
    PolyF2 p;
    if (bits) p.limbs_.push_back(bits);
    return p;
}

PolyF2 PolyF2::from_bits(std::string_view bits)
{
    PolyF2 p;
    p.limbs_.assign(bits.size() / 64 + 1, 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            p.limbs_[i / 64] |= Limb{1} << (i % 64);
        else if (bits[i] != '0')
            throw std::invalid_argument("bad polynomial bit string: " + std::string(bits));
    }
    p.trim();
    return p;
}

void PolyF2::trim()
{
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

int PolyF2::degree() const
{
    if (limbs_.empty()) return -1;
    return static_cast<int>(64 * (limbs_.size() - 1)) + 63 - std::countl_zero(limbs_.back());
}

bool PolyF2::coeff(unsigned k) const
{
    if (k / 64 >= limbs_.size()) return false;
    return (limbs_[k / 64] >> (k % 64)) & 1u;
}

std::string PolyF2::to_bits() const
{
    if (is_zero()) return "0";
    std::string s;
    for (int k = 0; k <= degree(); ++k) s += coeff(static_cast<unsigned>(k)) ? '1' : '0';
    return s;
}

std::string PolyF2::to_string() const
{
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
        if (!coeff(static_cast<unsigned>(k))) continue;
        if (!s.empty()) s += '+';
        if (k == 0)
            s += '1';
        else if (k == 1)
            s += 'd';
        else
            s += "d^" + std::to_string(k);
    }
    return s;
}

PolyF2& PolyF2::operator+=(const PolyF2& o)
{
    if (o.limbs_.size() > limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    for (std::size_t i = 0; i < o.limbs_.size(); ++i) limbs_[i] ^= o.limbs_[i];
    trim();
    return *this;
}

PolyF2 operator*(const PolyF2& a, const PolyF2& b)
{
    PolyF2 r;
    if (a.is_zero() || b.is_zero()) return r;
    if (a.limbs_.size() == 1 && b.limbs_.size() == 1) {
        // carry-less product of two limbs
        PolyF2::Limb x = a.limbs_[0], y = b.limbs_[0], lo = 0, hi = 0;
        if (std::bit_width(x) + std::bit_width(y) <= 65) {
            while (x) {
                int i = std::countr_zero(x);
                lo ^= y << i;
                x &= x - 1;
            }
            return PolyF2::from_limb(lo);
        }
        while (x) {
            int i = std::countr_zero(x);
            lo ^= y << i;
            if (i) hi ^= y >> (64 - i);
            x &= x - 1;
        }
        r.limbs_ = {lo, hi};
        r.trim();
        return r;
    }
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t ia = 0; ia < a.limbs_.size(); ++ia) {
        PolyF2::Limb x = a.limbs_[ia];
        while (x) {
            int i = std::countr_zero(x);
            x &= x - 1;
            for (std::size_t ib = 0; ib < b.limbs_.size(); ++ib) {
                PolyF2::Limb y = b.limbs_[ib];
                r.limbs_[ia + ib] ^= y << i;
                if (i) r.limbs_[ia + ib + 1] ^= y >> (64 - i);
            }
        }
    }
    r.trim();
    return r;
}

std::strong_ordering operator<=>(const PolyF2& a, const PolyF2& b)
{
    if (auto c = a.limbs_.size() <=> b.limbs_.size(); c != 0) return c;
    for (std::size_t i = a.limbs_.size(); i-- > 0;)
        if (auto c = a.limbs_[i] <=> b.limbs_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::pair<PolyF2, PolyF2> PolyF2::divmod(const PolyF2& a, const PolyF2& b)
{
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    PolyF2 q, r = a;
    const int db = b.degree();
    while (r.degree() >= db) {
        const auto shift = static_cast<unsigned>(r.degree() - db);
        PolyF2 m = monomial(shift);
        q += m;
        r += m * b;
    }
    return {q, r};
}

PolyF2 PolyF2::gcd(PolyF2 a, PolyF2 b)
{
    while (!b.is_zero()) {
        PolyF2 r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::size_t PolyF2::hash() const
{
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (Limb l : limbs_) h = (h ^ l) * 0x100000001b3ull;
    return h;
}

// ---- GF(2^k)

namespace {

std::uint64_t clmul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m, unsigned k)
{
    std::uint64_t r = 0;
    const std::uint64_t top = std::uint64_t{1} << k;
    while (b) {
        if (b & 1u) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & top) a ^= m;
    }
    return r;
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m)
{
    const int dm = 63 - std::countl_zero(m);
    while (a && 63 - std::countl_zero(a) >= dm) a ^= m << ((63 - std::countl_zero(a)) - dm);
    return a;
}

}  // namespace

bool BinaryField::is_irreducible(std::uint64_t poly, unsigned k)
{
    if (k == 0 || k > 32) return false;
    if (63 - std::countl_zero(poly) != static_cast<int>(k)) return false;
    for (std::uint64_t q = 2; 63 - std::countl_zero(q) <= static_cast<int>(k / 2); ++q)
        if (poly_mod(poly, q) == 0) return false;
    return true;
}

BinaryField::BinaryField(unsigned k) : k_(k), modulus_(0)
{
    if (k == 0 || k > 32) throw std::invalid_argument("field degree must be in 1..32");
    for (std::uint64_t m = (std::uint64_t{1} << k) | 1u; m < (std::uint64_t{1} << (k + 1)); m += 2)
        if (is_irreducible(m, k)) {
            modulus_ = m;
            return;
        }
    throw std::logic_error("no irreducible polynomial found");
}

BinaryField::BinaryField(unsigned k, std::uint64_t modulus) : k_(k), modulus_(modulus)
{
    if (!is_irreducible(modulus, k)) throw std::invalid_argument("modulus is not irreducible of degree k");
}

std::uint64_t BinaryField::reduce(std::uint64_t v) const { return poly_mod(v, modulus_); }

F2kElem BinaryField::elem(std::uint64_t residue) const { return {reduce(residue)}; }

F2kElem BinaryField::mul(F2kElem a, F2kElem b) const { return {clmul_mod(a.value, b.value, modulus_, k_)}; }

F2kElem BinaryField::pow(F2kElem a, std::uint64_t e) const
{
    F2kElem r = one();
    while (e) {
        if (e & 1u) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

F2kElem BinaryField::inv(F2kElem a) const
{
    if (a.value == 0) throw std::domain_error("inverse of zero in GF(2^k)");
    return pow(a, size() - 2);
}

F2kElem specialize(const PolyF2& p, F2kElem v, const BinaryField& f)
{
    F2kElem r = f.zero();
    for (int k = p.degree(); k >= 0; --k) {
        r = f.mul(r, v);
        if (p.coeff(static_cast<unsigned>(k))) r = f.add(r, f.one());
    }
    return r;
}

// ---- GF(2)(d)

RationalF2::RationalF2(PolyF2 num, PolyF2 den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = PolyF2::one();
        return;
    }
    PolyF2 g = PolyF2::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = PolyF2::divmod(num_, g).first;
        den_ = PolyF2::divmod(den_, g).first;
    }
}

RationalF2 RationalF2::inverse() const
{
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    return RationalF2(den_, num_);
}

std::string RationalF2::to_string() const
{
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalF2 operator+(const RationalF2& a, const RationalF2& b)
{
    if (a.den_ == b.den_) return RationalF2(a.num_ + b.num_, a.den_);
    return RationalF2(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalF2 operator*(const RationalF2& a, const RationalF2& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) return RationalF2(a.num_ * b.num_);
    return RationalF2(a.num_ * b.num_, a.den_ * b.den_);
}

}  // namespace hhbv
