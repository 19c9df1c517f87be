#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mockmod/rational.hpp"

namespace mockmod {

// Shared "no more information than this" sentinel for absolute precision
// and valuation lower bounds.  Kept well away from LONG_MAX so saturating
// sums of two sentinels cannot overflow.
inline constexpr long kPrecInf = std::numeric_limits<long>::max() / 4;

inline long sat_add(long a, long b) {
    if (a >= kPrecInf || b >= kPrecInf) return kPrecInf;
    return a + b;
}

// Powers of p that fit in a uint64 word: table[j] = p^j.  The table is
// built once per prime and lives for the whole process, so raw references
// into it stay valid.  Mantissas are capped at table.size()-1 digits.
const std::vector<std::uint64_t>& padic_pow_table(long p);
long padic_max_prec(long p);

// A scaled p-adic number: value = p^shift * mantissa, where the mantissa
// is a unit known modulo p^prec.  The absolute precision is shift + prec:
// the value is known modulo p^(shift+prec).
//
// Zeros come in two flavours.  A *limited* zero (mantissa 0, prec 1,
// canonically shift = absprec - 1) records only "== 0 mod p^absprec" --
// the residue of cancellation or of reducing an unknown quantity.  An
// *exact* zero (prec = kPrecInf) is the ring's true zero; integer and
// rational conversions of 0 produce it, and it never caps the precision
// of whatever it is added to.  Every value carries absprec >= 1;
// operations that would drop below that throw PrecisionError instead of
// returning a value that claims to be known "mod p^0".
//
// Arithmetic follows interval-style precision propagation: min absolute
// precision for +/-, shift-additive with min relative precision for */÷.
// Addition re-derives the valuation from the aligned mantissa sum, so
// cancellation raises the shift and shrinks prec by the same amount.
class Padic {
public:
    Padic(long p, long shift, std::uint64_t mantissa, long prec);

    static Padic exact_zero(long p);
    static Padic limited_zero(long p, long abs_prec);
    static Padic from_integer(long p, const mpz_class& n, long prec);
    static Padic from_rational(long p, const Rat& x, long prec);
    // Like from_rational but targeting an absolute precision instead of a
    // mantissa length (used when reducing rationals for mod-p^m compares).
    static Padic from_rational_abs(long p, const Rat& x, long abs_prec);

    long prime() const { return p_; }
    long shift() const { return shift_; }
    std::uint64_t mantissa() const { return man_; }
    long mantissa_prec() const { return prec_; }

    bool is_zero() const { return man_ == 0; }
    bool is_exact_zero() const { return man_ == 0 && prec_ >= kPrecInf; }
    bool is_unit() const { return man_ != 0 && shift_ == 0; }

    long abs_prec() const { return sat_add(shift_, prec_); }
    // Valuation if nonzero; otherwise the best known lower bound.
    long ord_lower_bound() const { return man_ != 0 ? shift_ : abs_prec(); }

    // Value mod p^m as an integer in [0, p^m).  Requires abs_prec >= m and
    // a p-integral value (shift >= 0 unless zero).
    mpz_class residue(long m) const;

    // a == b as stored representations (used for cache round-trip tests).
    friend bool operator==(const Padic& a, const Padic& b) = default;

    // "e:u:M"; exact zero encodes as "0:0:0".
    std::string encode() const;
    static Padic decode(long p, const std::string& text);

    Padic pow(unsigned long e) const;
    bool congruent(const Padic& other, long m) const;

    friend Padic operator+(const Padic& a, const Padic& b);
    friend Padic operator-(const Padic& a, const Padic& b);
    friend Padic operator*(const Padic& a, const Padic& b);
    friend Padic operator/(const Padic& a, const Padic& b);
    Padic operator-() const;

private:
    struct raw_tag {};
    Padic(raw_tag, long p, long shift, std::uint64_t man, long prec)
        : p_(p), shift_(shift), man_(man), prec_(prec) {}

    long p_;
    long shift_;
    std::uint64_t man_;
    long prec_;

    friend Padic padic_add(const Padic&, const Padic&,
                           const std::vector<std::uint64_t>&);
    friend Padic padic_neg(const Padic&, const std::vector<std::uint64_t>&);
    friend Padic padic_mul(const Padic&, const Padic&,
                           const std::vector<std::uint64_t>&);
    friend Padic padic_div(const Padic&, const Padic&,
                           const std::vector<std::uint64_t>&);
};

// Table-passing kernels used by the series layer (hot paths; the scalar
// operators above fetch the table themselves and then call these).
Padic padic_add(const Padic& a, const Padic& b,
                const std::vector<std::uint64_t>& pw);
Padic padic_neg(const Padic& a, const std::vector<std::uint64_t>& pw);
Padic padic_mul(const Padic& a, const Padic& b,
                const std::vector<std::uint64_t>& pw);
Padic padic_div(const Padic& a, const Padic& b,
                const std::vector<std::uint64_t>& pw);

inline Padic padic_sub(const Padic& a, const Padic& b,
                       const std::vector<std::uint64_t>& pw) {
    return padic_add(a, padic_neg(b, pw), pw);
}

// Roots of x^2 - lambda*x + p^(k-1) when ord_p(lambda) = v splits the
// Newton polygon into slopes v and k-1-v (requires 0 < v < (k-1)/2 and
// odd p).  beta is the root of valuation v, obtained by substituting
// x = p^v y and Newton-lifting the simple unit root y == lambda/p^v
// (mod p); betaPrime = lambda - beta has valuation k-1-v.
struct HeckeRootPair {
    long p;
    int k;
    mpz_class lambda;
    Padic beta;
    Padic beta_prime;
    int v;
};

HeckeRootPair hensel_quadratic_roots(const mpz_class& lambda, long p, int k,
                                     long prec);

} // namespace mockmod
