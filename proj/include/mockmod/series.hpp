#pragma once

#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "mockmod/errors.hpp"
#include "mockmod/numutil.hpp"
#include "mockmod/rings.hpp"

namespace mockmod {

// How many worker threads series multiplication may use (>=1).
void set_series_threads(int n);
int series_threads();

// Truncated Laurent series sum_{n >= min_exp} c_n q^n with coefficients
// stored for min_exp <= n < prec_bound.  The window carries meaning:
// coefficients below min_exp are exactly zero, coefficients at or above
// prec_bound are unknown and reading one throws WindowError.
template <class Ring>
class Series {
public:
    using Value = typename Ring::Value;

    Series(Ring ring, long min_exp, long prec_bound, std::vector<Value> coeff)
        : ring_(std::move(ring)), min_(min_exp), bound_(prec_bound),
          c_(std::move(coeff)) {
        if (bound_ <= min_)
            throw WindowError("empty series window [" + std::to_string(min_) +
                              ", " + std::to_string(bound_) + ")");
        if (static_cast<long>(c_.size()) != bound_ - min_)
            throw WindowError("coefficient count " +
                              std::to_string(c_.size()) +
                              " does not fill window [" +
                              std::to_string(min_) + ", " +
                              std::to_string(bound_) + ")");
    }

    static Series zeros(const Ring& ring, long min_exp, long prec_bound) {
        if (prec_bound <= min_exp)
            throw WindowError("empty series window [" +
                              std::to_string(min_exp) + ", " +
                              std::to_string(prec_bound) + ")");
        return Series(ring, min_exp, prec_bound,
                      std::vector<Value>(
                          static_cast<std::size_t>(prec_bound - min_exp),
                          ring.zero()));
    }

    const Ring& ring() const { return ring_; }
    long min_exp() const { return min_; }
    long prec_bound() const { return bound_; }

    Value at(long n) const {
        if (n >= bound_)
            throw WindowError("coefficient of q^" + std::to_string(n) +
                              " lies outside the computed window [" +
                              std::to_string(min_) + ", " +
                              std::to_string(bound_) + ")");
        if (n < min_) return ring_.zero();
        return c_[static_cast<std::size_t>(n - min_)];
    }

    Value& mut(long n) {
        if (n < min_ || n >= bound_)
            throw WindowError("mutable access to q^" + std::to_string(n) +
                              " outside window [" + std::to_string(min_) +
                              ", " + std::to_string(bound_) + ")");
        return c_[static_cast<std::size_t>(n - min_)];
    }

    // Same window, coefficient-wise map.
    template <class F>
    Series map(F&& f) const {
        std::vector<Value> out;
        out.reserve(c_.size());
        for (const Value& v : c_) out.push_back(f(v));
        return Series(ring_, min_, bound_, std::move(out));
    }

private:
    Ring ring_;
    long min_;
    long bound_;
    std::vector<Value> c_;
};

template <class Ring>
void require_same_ring(const Series<Ring>& a, const Series<Ring>& b) {
    if (!(a.ring() == b.ring()))
        throw DomainError("series from different coefficient rings");
}

template <class Ring>
Series<Ring> add(const Series<Ring>& a, const Series<Ring>& b) {
    require_same_ring(a, b);
    const long lo = std::min(a.min_exp(), b.min_exp());
    const long hi = std::min(a.prec_bound(), b.prec_bound());
    auto out = Series<Ring>::zeros(a.ring(), lo, hi);
    for (long n = lo; n < hi; ++n) out.mut(n) = a.ring().add(a.at(n), b.at(n));
    return out;
}

template <class Ring>
Series<Ring> neg(const Series<Ring>& a) {
    return a.map([&](const typename Ring::Value& v) { return a.ring().neg(v); });
}

template <class Ring>
Series<Ring> sub(const Series<Ring>& a, const Series<Ring>& b) {
    return add(a, neg(b));
}

template <class Ring>
Series<Ring> scalar_mul(const typename Ring::Value& s, const Series<Ring>& a) {
    return a.map(
        [&](const typename Ring::Value& v) { return a.ring().mul(s, v); });
}

// Multiply by q^s.
template <class Ring>
Series<Ring> shift_exp(const Series<Ring>& a, long s) {
    std::vector<typename Ring::Value> c;
    c.reserve(static_cast<std::size_t>(a.prec_bound() - a.min_exp()));
    for (long n = a.min_exp(); n < a.prec_bound(); ++n) c.push_back(a.at(n));
    return Series<Ring>(a.ring(), a.min_exp() + s, a.prec_bound() + s,
                        std::move(c));
}

// Cauchy product.  Output window [ma+mb, min(Ta+mb, Tb+ma)): outside it a
// product coefficient would depend on unknown inputs.
template <class Ring>
Series<Ring> mul(const Series<Ring>& a, const Series<Ring>& b) {
    require_same_ring(a, b);
    const Ring& ring = a.ring();
    const long lo = a.min_exp() + b.min_exp();
    const long hi = std::min(a.prec_bound() + b.min_exp(),
                             b.prec_bound() + a.min_exp());
    auto out = Series<Ring>::zeros(ring, lo, hi);
    auto run = [&](long from, long to) {
        for (long n = from; n < to; ++n) {
            typename Ring::Value acc = ring.zero();
            const long i_lo = std::max(a.min_exp(), n - b.prec_bound() + 1);
            const long i_hi = std::min(a.prec_bound() - 1, n - b.min_exp());
            for (long i = i_lo; i <= i_hi; ++i)
                ring.add_mul(acc, a.at(i), b.at(n - i));
            out.mut(n) = acc;
        }
    };
    const int threads = series_threads();
    if (threads <= 1 || hi - lo < 64) {
        run(lo, hi);
        return out;
    }
    std::vector<std::thread> pool;
    const long chunk = ceil_div(hi - lo, threads);
    for (int t = 0; t < threads; ++t) {
        const long from = lo + t * chunk;
        const long to = std::min(hi, from + chunk);
        if (from >= to) break;
        pool.emplace_back(run, from, to);
    }
    for (auto& th : pool) th.join();
    return out;
}

// a^e by binary powering.  The window any association yields is the same:
// the defect prec_bound - min_exp is invariant under multiplication.
template <class Ring>
Series<Ring> power(const Series<Ring>& a, unsigned long e) {
    if (e == 0) {
        auto out = Series<Ring>::zeros(a.ring(), 0,
                                       a.prec_bound() - a.min_exp());
        out.mut(0) = a.ring().one();
        return out;
    }
    std::optional<Series<Ring>> acc;
    Series<Ring> base = a;
    while (true) {
        if (e & 1) acc = acc ? mul(*acc, base) : base;
        e >>= 1;
        if (e == 0) break;
        base = mul(base, base);
    }
    return *acc;
}

// Reciprocal of a series whose leading coefficient (at min_exp) is a unit.
// Solving (sum a_i q^i)(sum b_j q^j) = 1 for b_n consumes a up to exponent
// n + 2*min_exp, so the output bound is capped at prec_bound() - 2*min_exp.
template <class Ring>
Series<Ring> invert_unit(const Series<Ring>& a, long prec_bound_out) {
    const Ring& ring = a.ring();
    const long m = a.min_exp();
    const typename Ring::Value lead = a.at(m);
    if (!ring.is_unit(lead))
        throw DomainError("series inverse needs a unit leading coefficient");
    if (prec_bound_out > a.prec_bound() - 2 * m)
        throw WindowError("input window too short to invert out to q^" +
                          std::to_string(prec_bound_out));
    const typename Ring::Value lead_inv = ring.inverse(lead);
    auto out = Series<Ring>::zeros(ring, -m, prec_bound_out);
    out.mut(-m) = lead_inv;
    for (long n = -m + 1; n < prec_bound_out; ++n) {
        typename Ring::Value acc = ring.zero();
        // coefficient of q^{n+m} in a * out, excluding the a_m * out_n term
        for (long i = m + 1; i <= n + 2 * m; ++i)
            ring.add_mul(acc, a.at(i), out.at(n + m - i));
        out.mut(n) = ring.neg(ring.mul(lead_inv, acc));
    }
    return out;
}

// U_n: picks every n-th coefficient, (U_n f)_j = f_{nj}.
template <class Ring>
Series<Ring> apply_u(const Series<Ring>& a, long n) {
    if (n < 1) throw DomainError("U_n needs n >= 1");
    const long lo = ceil_div(a.min_exp(), n);
    const long hi = floor_div(a.prec_bound() - 1, n) + 1;
    if (hi <= lo)
        throw WindowError("window [" + std::to_string(a.min_exp()) + ", " +
                          std::to_string(a.prec_bound()) +
                          ") holds no multiple of " + std::to_string(n));
    auto out = Series<Ring>::zeros(a.ring(), lo, hi);
    for (long j = lo; j < hi; ++j) out.mut(j) = a.at(n * j);
    return out;
}

// V_n: f(q) -> f(q^n).
template <class Ring>
Series<Ring> apply_v(const Series<Ring>& a, long n) {
    if (n < 1) throw DomainError("V_n needs n >= 1");
    const long lo = n * a.min_exp();
    const long hi = n * (a.prec_bound() - 1) + 1;
    auto out = Series<Ring>::zeros(a.ring(), lo, hi);
    for (long j = a.min_exp(); j < a.prec_bound(); ++j)
        out.mut(n * j) = a.at(j);
    return out;
}

// D^r with D = q d/dq: coefficient at q^n is multiplied by n^r.
template <class Ring>
Series<Ring> apply_d(const Series<Ring>& a, unsigned long r = 1) {
    auto out = Series<Ring>::zeros(a.ring(), a.min_exp(), a.prec_bound());
    for (long n = a.min_exp(); n < a.prec_bound(); ++n) {
        mpz_class nr;
        mpz_class base(n);
        mpz_pow_ui(nr.get_mpz_t(), base.get_mpz_t(), r);
        out.mut(n) = a.ring().mul(a.ring().from_mpz(nr), a.at(n));
    }
    return out;
}

// Restrict to exactly [lo, hi); hi must lie inside the known window
// (coefficients below min_exp are the ring's zero by definition).
template <class Ring>
Series<Ring> crop(const Series<Ring>& a, long lo, long hi) {
    if (hi > a.prec_bound())
        throw WindowError("crop to [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + ") exceeds computed bound " +
                          std::to_string(a.prec_bound()));
    auto out = Series<Ring>::zeros(a.ring(), lo, hi);
    for (long n = lo; n < hi; ++n) out.mut(n) = a.at(n);
    return out;
}

template <class Ring>
Series<Ring> reduce_mod(const Series<Ring>& a, long p, long m) {
    return a.map([&](const typename Ring::Value& v) {
        return a.ring().reduce(v, p, m);
    });
}

// First exponent in [lo, hi) where a and b disagree mod p^m, if any.
// Reading past either window throws WindowError; a padic coefficient too
// coarse to decide the congruence throws PrecisionError.
template <class Ring>
std::optional<long> first_incongruence(const Series<Ring>& a,
                                       const Series<Ring>& b, long p, long m,
                                       long lo, long hi) {
    for (long n = lo; n < hi; ++n)
        if (!a.ring().congruent(a.at(n), b.at(n), p, m)) return n;
    return std::nullopt;
}

// Mixed-ring comparison: the rational side is truncated to the absolute
// precision the congruence needs.
inline std::optional<long> first_incongruence(const Series<RationalRing>& a,
                                              const Series<PadicRing>& b,
                                              long p, long m, long lo,
                                              long hi) {
    if (b.ring().prime() != p)
        throw DomainError("congruence base does not match the ring prime");
    for (long n = lo; n < hi; ++n) {
        Padic av = Padic::from_rational_abs(p, a.at(n), m);
        if (!av.congruent(b.at(n), m)) return n;
    }
    return std::nullopt;
}

template <class Ring>
bool series_equal(const Series<Ring>& a, const Series<Ring>& b) {
    if (!(a.ring() == b.ring()) || a.min_exp() != b.min_exp() ||
        a.prec_bound() != b.prec_bound())
        return false;
    for (long n = a.min_exp(); n < a.prec_bound(); ++n)
        if (!(a.at(n) == b.at(n))) return false;
    return true;
}

using QSeries = Series<RationalRing>;
using PSeries = Series<PadicRing>;

} // namespace mockmod
