#include "mockmod/padic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "mockmod/errors.hpp"

namespace mockmod {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

// Inverse of u modulo m (gcd(u, m) = 1, m < 2^63), extended Euclid.
std::uint64_t invmod(std::uint64_t u, std::uint64_t m) {
    __int128 r0 = static_cast<__int128>(m), r1 = static_cast<__int128>(u % m);
    __int128 t0 = 0, t1 = 1;
    while (r1 != 0) {
        __int128 q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        t0 -= q * t1;
        std::swap(t0, t1);
    }
    if (r0 != 1) throw Error("internal: invmod of a non-unit");
    t0 %= static_cast<__int128>(m);
    if (t0 < 0) t0 += static_cast<__int128>(m);
    return static_cast<std::uint64_t>(t0);
}

} // namespace

const std::vector<std::uint64_t>& padic_pow_table(long p) {
    static std::mutex mu;
    static std::map<long, std::unique_ptr<std::vector<std::uint64_t>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[p];
    if (!slot) {
        if (p < 3 || !is_small_prime(p))
            throw DomainError("p-adic base must be an odd prime (p >= 3)");
        auto tbl = std::make_unique<std::vector<std::uint64_t>>();
        // Cap p^M at 2^62 so mantissa products fit an unsigned __int128
        // with room to spare.
        const std::uint64_t limit = std::uint64_t{1} << 62;
        std::uint64_t x = 1;
        tbl->push_back(x);
        while (x <= limit / static_cast<std::uint64_t>(p)) {
            x *= static_cast<std::uint64_t>(p);
            tbl->push_back(x);
        }
        slot = std::move(tbl);
    }
    return *slot;
}

long padic_max_prec(long p) {
    return static_cast<long>(padic_pow_table(p).size()) - 1;
}

Padic::Padic(long p, long shift, std::uint64_t man, long prec)
    : p_(p), shift_(shift), man_(man), prec_(prec) {
    const auto& pw = padic_pow_table(p);
    if (man_ == 0) {
        if (prec_ >= kPrecInf) { // exact zero
            shift_ = 0;
            prec_ = kPrecInf;
            return;
        }
        long abs = sat_add(shift_, prec_);
        if (abs < 1)
            throw PrecisionError("p-adic zero with no remaining precision");
        shift_ = abs - 1;
        prec_ = 1;
        return;
    }
    if (prec_ < 1)
        throw PrecisionError("p-adic mantissa with nonpositive precision");
    if (prec_ > padic_max_prec(p))
        throw PrecisionError(
            "mantissa precision " + std::to_string(prec_) + " exceeds the " +
            std::to_string(padic_max_prec(p)) + "-digit word capacity for p=" +
            std::to_string(p));
    man_ %= pw[prec_];
    if (man_ == 0) { // everything we knew was in dropped digits
        long abs = sat_add(shift_, prec_);
        shift_ = abs - 1;
        prec_ = 1;
        return;
    }
    // Normalize to a unit mantissa; absolute precision is preserved.
    while (man_ % static_cast<std::uint64_t>(p_) == 0) {
        man_ /= static_cast<std::uint64_t>(p_);
        ++shift_;
        --prec_;
    }
}

Padic Padic::exact_zero(long p) {
    padic_pow_table(p); // validate p
    return Padic(raw_tag{}, p, 0, 0, kPrecInf);
}

Padic Padic::limited_zero(long p, long abs_prec) {
    return Padic(p, abs_prec - 1, 0, 1);
}

Padic Padic::from_integer(long p, const mpz_class& n, long prec) {
    if (n == 0) return exact_zero(p);
    if (prec < 1 || prec > padic_max_prec(p))
        throw PrecisionError("unsupported mantissa precision " +
                             std::to_string(prec) + " for p=" +
                             std::to_string(p));
    long v = ord_p(n, p);
    mpz_class unit = n / pow_z(p, static_cast<unsigned long>(v));
    const auto& pw = padic_pow_table(p);
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), unit.get_mpz_t(), pw[prec]);
    return Padic(p, v, mpz_get_ui(r.get_mpz_t()), prec);
}

Padic Padic::from_rational(long p, const Rat& x, long prec) {
    if (x == 0) return exact_zero(p);
    if (prec < 1 || prec > padic_max_prec(p))
        throw PrecisionError("unsupported mantissa precision " +
                             std::to_string(prec) + " for p=" +
                             std::to_string(p));
    const auto& pw = padic_pow_table(p);
    long a = ord_p(x.get_num(), p);
    long b = ord_p(x.get_den(), p);
    mpz_class nu = x.get_num() / pow_z(p, static_cast<unsigned long>(a));
    mpz_class du = x.get_den() / pow_z(p, static_cast<unsigned long>(b));
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), nu.get_mpz_t(), pw[prec]);
    std::uint64_t num_res = mpz_get_ui(r.get_mpz_t());
    mpz_fdiv_r_ui(r.get_mpz_t(), du.get_mpz_t(), pw[prec]);
    std::uint64_t den_res = mpz_get_ui(r.get_mpz_t());
    std::uint64_t man = mulmod(num_res, invmod(den_res, pw[prec]), pw[prec]);
    return Padic(p, a - b, man, prec);
}

Padic Padic::from_rational_abs(long p, const Rat& x, long abs_prec) {
    if (x == 0) return exact_zero(p);
    long v = ord_p(x, p);
    long prec = abs_prec - v;
    if (prec < 1) {
        // ord(x) >= abs_prec: x is honestly zero to this absolute precision.
        return limited_zero(p, abs_prec);
    }
    return from_rational(p, x, std::min(prec, padic_max_prec(p)));
}

mpz_class Padic::residue(long m) const {
    if (m < 0) throw DomainError("residue modulus p^m needs m >= 0");
    if (m == 0) return 0;
    if (abs_prec() < m)
        throw PrecisionError("residue mod p^" + std::to_string(m) +
                             " requested from a value known only mod p^" +
                             std::to_string(abs_prec()));
    if (man_ == 0) return 0;
    if (shift_ < 0)
        throw DomainError("residue of a value with negative valuation");
    if (shift_ >= m) return 0;
    const auto& pw = padic_pow_table(p_);
    long d = m - shift_; // d <= prec_ because abs_prec >= m
    return pow_z(p_, static_cast<unsigned long>(shift_)) *
           mpz_class(static_cast<unsigned long>(man_ % pw[d]));
}

std::string Padic::encode() const {
    if (is_exact_zero()) return "0:0:0";
    return std::to_string(shift_) + ":" + std::to_string(man_) + ":" +
           std::to_string(prec_);
}

Padic Padic::decode(long p, const std::string& text) {
    long fields[3];
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        std::size_t next = text.find(':', pos);
        if ((i < 2) != (next != std::string::npos))
            throw DomainError("malformed p-adic encoding: \"" + text + "\"");
        std::string part = text.substr(pos, next == std::string::npos
                                                ? std::string::npos
                                                : next - pos);
        try {
            std::size_t used = 0;
            fields[i] = std::stol(part, &used);
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw DomainError("malformed p-adic encoding: \"" + text + "\"");
        }
        pos = next + 1;
    }
    if (fields[1] == 0 && fields[2] == 0) {
        if (fields[0] != 0)
            throw DomainError("malformed p-adic zero encoding: \"" + text +
                              "\"");
        return exact_zero(p);
    }
    if (fields[1] < 0)
        throw DomainError("negative p-adic mantissa: \"" + text + "\"");
    return Padic(p, fields[0], static_cast<std::uint64_t>(fields[1]),
                 fields[2]);
}

Padic Padic::pow(unsigned long e) const {
    if (e == 0) return from_integer(p_, 1, padic_max_prec(p_));
    Padic base = *this;
    Padic acc = base;
    --e;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Padic::congruent(const Padic& other, long m) const {
    if (p_ != other.p_)
        throw DomainError("congruence across different primes");
    if (abs_prec() < m || other.abs_prec() < m)
        throw PrecisionError(
            "congruence mod p^" + std::to_string(m) +
            " requested at absolute precision " +
            std::to_string(std::min(abs_prec(), other.abs_prec())));
    return (*this - other).ord_lower_bound() >= m;
}

Padic padic_add(const Padic& a, const Padic& b,
                const std::vector<std::uint64_t>& pw) {
    if (a.p_ != b.p_)
        throw DomainError("p-adic arithmetic across different primes");
    if (a.is_exact_zero()) return b;
    if (b.is_exact_zero()) return a;
    const long p = a.p_;
    const long A = std::min(a.abs_prec(), b.abs_prec());
    if (a.man_ == 0 && b.man_ == 0) return Padic::limited_zero(p, A);
    long e = kPrecInf;
    if (a.man_ != 0) e = a.shift_;
    if (b.man_ != 0) e = std::min(e, b.shift_);
    if (e >= A) return Padic::limited_zero(p, A);
    const long d = A - e; // <= max mantissa precision (see header contract)
    const std::uint64_t mod = pw[d];
    std::uint64_t s = 0;
    if (a.man_ != 0 && a.shift_ < A)
        s = mulmod(a.man_ % mod, pw[a.shift_ - e], mod);
    if (b.man_ != 0 && b.shift_ < A)
        s = (s + mulmod(b.man_ % mod, pw[b.shift_ - e], mod)) % mod;
    if (s == 0) return Padic::limited_zero(p, A);
    long w = 0;
    while (s % static_cast<std::uint64_t>(p) == 0) {
        s /= static_cast<std::uint64_t>(p);
        ++w;
    }
    return Padic(Padic::raw_tag{}, p, e + w, s, d - w);
}

Padic padic_neg(const Padic& a, const std::vector<std::uint64_t>& pw) {
    if (a.man_ == 0) return a;
    return Padic(Padic::raw_tag{}, a.p_, a.shift_, pw[a.prec_] - a.man_,
                 a.prec_);
}

Padic padic_mul(const Padic& a, const Padic& b,
                const std::vector<std::uint64_t>& pw) {
    if (a.p_ != b.p_)
        throw DomainError("p-adic arithmetic across different primes");
    if (a.is_exact_zero() || b.is_exact_zero())
        return Padic::exact_zero(a.p_);
    if (a.man_ == 0 || b.man_ == 0)
        return Padic::limited_zero(
            a.p_, sat_add(a.ord_lower_bound(), b.ord_lower_bound()));
    const long prec = std::min(a.prec_, b.prec_);
    const std::uint64_t mod = pw[prec];
    return Padic(Padic::raw_tag{}, a.p_, a.shift_ + b.shift_,
                 mulmod(a.man_ % mod, b.man_ % mod, mod), prec);
}

Padic padic_div(const Padic& a, const Padic& b,
                const std::vector<std::uint64_t>& pw) {
    if (a.p_ != b.p_)
        throw DomainError("p-adic arithmetic across different primes");
    if (b.man_ == 0) {
        if (b.is_exact_zero()) throw DomainError("p-adic division by zero");
        throw PrecisionError(
            "division by a value that is zero to its tracked precision");
    }
    if (a.is_exact_zero()) return a;
    if (a.man_ == 0)
        return Padic::limited_zero(a.p_, a.abs_prec() - b.shift_);
    const long prec = std::min(a.prec_, b.prec_);
    const std::uint64_t mod = pw[prec];
    const std::uint64_t inv = invmod(b.man_ % mod, mod);
    return Padic(Padic::raw_tag{}, a.p_, a.shift_ - b.shift_,
                 mulmod(a.man_ % mod, inv, mod), prec);
}

Padic operator+(const Padic& a, const Padic& b) {
    return padic_add(a, b, padic_pow_table(a.p_));
}

Padic operator-(const Padic& a, const Padic& b) {
    return padic_sub(a, b, padic_pow_table(a.p_));
}

Padic operator*(const Padic& a, const Padic& b) {
    return padic_mul(a, b, padic_pow_table(a.p_));
}

Padic operator/(const Padic& a, const Padic& b) {
    return padic_div(a, b, padic_pow_table(a.p_));
}

Padic Padic::operator-() const { return padic_neg(*this, padic_pow_table(p_)); }

HeckeRootPair hensel_quadratic_roots(const mpz_class& lambda, long p, int k,
                                     long prec) {
    if (p == 2)
        throw DomainError(
            "p = 2 rejected: the reduced quadratic has no simple unit root");
    if (!is_small_prime(p)) throw DomainError("p must be an odd prime");
    if (k < 4 || k % 2 != 0)
        throw DomainError("weight k must be even and >= 4");
    if (prec < 1 || prec > padic_max_prec(p))
        throw PrecisionError("unsupported mantissa precision " +
                             std::to_string(prec) + " for p=" +
                             std::to_string(p));
    if (lambda == 0)
        throw DomainError("lambda = 0 admits no finite-slope root split");
    const long v = ord_p(lambda, p);
    if (v <= 0 || 2 * v >= k - 1)
        throw DomainError(
            "unsupported valuation split: need 0 < ord_p(lambda) < (k-1)/2, "
            "got ord = " + std::to_string(v));
    if (prec <= k - 1 - 2 * v)
        throw PrecisionError(
            "precision " + std::to_string(prec) +
            " cannot resolve ord(betaPrime) = k-1-v; need more than " +
            std::to_string(k - 1 - 2 * v) + " mantissa digits");

    // Substitute x = p^v y:  y^2 - (lambda/p^v) y + p^(k-1-2v) = 0.
    // Mod p this is y(y - u) with u a unit, so y == u is a simple root and
    // Newton doubles the number of correct digits each pass.
    const mpz_class u = lambda / pow_z(p, static_cast<unsigned long>(v));
    const mpz_class c = pow_z(p, static_cast<unsigned long>(k - 1 - 2 * v));
    mpz_class y = u % p;
    if (y < 0) y += p;
    long have = 1;
    while (have < prec) {
        have = std::min(2 * have, prec);
        const mpz_class m = pow_z(p, static_cast<unsigned long>(have));
        mpz_class fy = (y * y - u * y + c) % m;
        mpz_class fpy = (2 * y - u) % m;
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), fpy.get_mpz_t(), m.get_mpz_t()) == 0)
            throw Error("internal: Newton derivative lost invertibility");
        y = (y - fy * inv) % m;
        if (y < 0) y += m;
    }

    const auto& pw = padic_pow_table(p);
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), y.get_mpz_t(), pw[prec]);
    Padic beta(p, v, mpz_get_ui(r.get_mpz_t()), prec);
    Padic lam = Padic::from_integer(p, lambda, prec);
    Padic beta_prime = lam - beta;
    if (beta_prime.is_zero() || beta_prime.shift() != k - 1 - v)
        throw PrecisionError(
            "root split did not certify ord(betaPrime) = k-1-v at precision " +
            std::to_string(prec));

    // The pair must reproduce trace and norm to its full precision.
    Padic norm = beta * beta_prime;
    Padic target = Padic::from_integer(
        p, pow_z(p, static_cast<unsigned long>(k - 1)), prec);
    if (!(beta + beta_prime).congruent(lam, std::min((beta + beta_prime).abs_prec(),
                                                     lam.abs_prec())) ||
        !norm.congruent(target, std::min(norm.abs_prec(), target.abs_prec())))
        throw Error("internal: Hensel pair fails trace/norm verification");

    return HeckeRootPair{p, k, lambda, beta, beta_prime, static_cast<int>(v)};
}

} // namespace mockmod
