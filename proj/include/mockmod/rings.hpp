#pragma once

#include <string>

#include "mockmod/errors.hpp"
#include "mockmod/padic.hpp"
#include "mockmod/rational.hpp"

namespace mockmod {

// Coefficient rings share one interface so series code can be templated:
//   Value, zero/one, from_int/from_mpz/from_rat, ring ops, add_mul (fused
//   accumulate, the hot path of series multiplication), congruent, reduce,
//   encode/decode and a descriptor string for cache headers.

struct RationalRing {
    using Value = Rat;

    Value zero() const { return Rat(0); }
    Value one() const { return Rat(1); }
    Value from_int(long n) const { return Rat(n); }
    Value from_mpz(const mpz_class& n) const { return Rat(n); }
    Value from_rat(const Rat& x) const { return x; }

    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value neg(const Value& a) const { return -a; }

    Value inverse(const Value& a) const {
        if (a == 0) throw DomainError("rational inverse of zero");
        return 1 / a;
    }

    // acc += a*b.  Integer operands are by far the common case for the
    // forms built here, and mpz_addmul on the raw numerators skips all
    // mpq canonicalization.
    void add_mul(Value& acc, const Value& a, const Value& b) const {
        if (mpz_cmp_ui(mpq_denref(a.get_mpq_t()), 1) == 0 &&
            mpz_cmp_ui(mpq_denref(b.get_mpq_t()), 1) == 0 &&
            mpz_cmp_ui(mpq_denref(acc.get_mpq_t()), 1) == 0) {
            mpz_addmul(mpq_numref(acc.get_mpq_t()),
                       mpq_numref(a.get_mpq_t()), mpq_numref(b.get_mpq_t()));
        } else {
            acc += a * b;
        }
    }

    bool is_zero(const Value& a) const { return a == 0; }
    bool is_unit(const Value& a) const { return a != 0; }

    bool congruent(const Value& a, const Value& b, long p, long m) const {
        if (p < 2) throw DomainError("congruence needs a modulus base >= 2");
        Rat diff = a - b;
        if (diff == 0) return true;
        return ord_p(diff, p) >= m;
    }

    // Canonical representative of a p-integral rational in [0, p^m).
    Value reduce(const Value& a, long p, long m) const {
        if (m < 0) throw DomainError("reduce mod p^m needs m >= 0");
        mpz_class mod = pow_z(p, static_cast<unsigned long>(m));
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), a.get_den().get_mpz_t(),
                       mod.get_mpz_t()) == 0)
            throw DomainError("reduce mod p^m of a non-p-integral rational");
        mpz_class r = (a.get_num() * inv) % mod;
        if (r < 0) r += mod;
        return Rat(r);
    }

    std::string encode(const Value& a) const { return encode_rat(a); }
    Value decode(const std::string& text) const { return decode_rat(text); }
    std::string descriptor() const { return "rational"; }

    friend bool operator==(const RationalRing&, const RationalRing&) = default;
};

class PadicRing {
public:
    using Value = Padic;

    PadicRing(long p, long prec) : p_(p), prec_(prec), pw_(&padic_pow_table(p)) {
        if (prec < 1 || prec > padic_max_prec(p))
            throw PrecisionError("unsupported mantissa precision " +
                                 std::to_string(prec) + " for p=" +
                                 std::to_string(p));
    }

    long prime() const { return p_; }
    long precision() const { return prec_; }

    Value zero() const { return Padic::exact_zero(p_); }
    Value one() const { return Padic::from_integer(p_, 1, prec_); }
    Value from_int(long n) const {
        return Padic::from_integer(p_, mpz_class(n), prec_);
    }
    Value from_mpz(const mpz_class& n) const {
        return Padic::from_integer(p_, n, prec_);
    }
    Value from_rat(const Rat& x) const {
        return Padic::from_rational(p_, x, prec_);
    }

    Value add(const Value& a, const Value& b) const {
        return padic_add(a, b, *pw_);
    }
    Value sub(const Value& a, const Value& b) const {
        return padic_sub(a, b, *pw_);
    }
    Value mul(const Value& a, const Value& b) const {
        return padic_mul(a, b, *pw_);
    }
    Value neg(const Value& a) const { return padic_neg(a, *pw_); }

    Value inverse(const Value& a) const { return padic_div(one(), a, *pw_); }

    void add_mul(Value& acc, const Value& a, const Value& b) const {
        acc = padic_add(acc, padic_mul(a, b, *pw_), *pw_);
    }

    bool is_zero(const Value& a) const { return a.is_zero(); }
    bool is_unit(const Value& a) const { return a.is_unit(); }

    bool congruent(const Value& a, const Value& b, long p, long m) const {
        if (p != p_)
            throw DomainError("congruence base does not match the ring prime");
        return a.congruent(b, m);
    }

    // Exact canonical representative of the residue mod p^m; throws
    // PrecisionError when the stored precision cannot certify it.
    Value reduce(const Value& a, long p, long m) const {
        if (p != p_)
            throw DomainError("reduce base does not match the ring prime");
        return Padic::from_integer(p_, a.residue(m), prec_);
    }

    std::string encode(const Value& a) const { return a.encode(); }
    Value decode(const std::string& text) const {
        return Padic::decode(p_, text);
    }
    std::string descriptor() const {
        return "padic:" + std::to_string(p_) + ":" + std::to_string(prec_);
    }

    friend bool operator==(const PadicRing& a, const PadicRing& b) {
        return a.p_ == b.p_ && a.prec_ == b.prec_;
    }

private:
    long p_;
    long prec_;
    const std::vector<std::uint64_t>* pw_;
};

} // namespace mockmod
