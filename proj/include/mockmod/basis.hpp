#pragma once

#include <map>

#include "mockmod/forms.hpp"

namespace mockmod {

// Weight bookkeeping for the canonical weakly holomorphic basis of weight
// 2-k.  Only k = 12 (d = 1, k' = 14) is exercised by the pipeline; the
// parameterization is validated but other weights are untested surface.
struct BasisParams {
    int k = 12;       // cusp-form weight
    int d = 1;        // dim S_k
    int k_prime = 14; // k' in {0,4,6,8,10,14}, k' == 2-k (mod 12)

    void validate() const {
        static const int allowed[] = {0, 4, 6, 8, 10, 14};
        bool ok = false;
        for (int a : allowed) ok = ok || (k_prime == a);
        if (!ok || ((k_prime - (2 - k)) % 12 + 12) % 12 != 0)
            throw DomainError("basis parameters violate k' == 2-k (mod 12)");
        if (d < 0) throw DomainError("basis dimension must be >= 0");
    }
};

// Canonical basis element f_m = q^{-m} + O(q^{-d}) of weight 2-k, built
// from g_t = E_{k'} Delta^{-d-1} j^t by eliminating the coefficients at
// q^{-m+1} .. q^{-d-1} against previously built elements.  `terms` is the
// total coefficient count; the window is [-m, terms - m).
template <class Ring>
Series<Ring> duke_jenkins(const Ring& ring, long m, long terms,
                          const BasisParams& bp = BasisParams{}) {
    bp.validate();
    if (m < 1) throw DomainError("basis index m must be >= 1");
    if (terms < 1) throw WindowError("basis window must hold a coefficient");
    const long d = bp.d;
    if (m <= d) return Series<Ring>::zeros(ring, -m, terms - m);
    if (terms < m + 2) throw WindowError("basis window too small to pin f_m");

    const long out_bound = terms - m;
    const long B = terms + 8; // internal slack for j-multiplies/eliminations

    auto e_kp = eisenstein(ring, bp.k_prime, B);
    auto dlt = delta_series(ring, B + 3);
    if (!(dlt.at(1) == ring.one()))
        throw Error("internal: Delta leading coefficient is not 1");
    auto dinv = invert_unit(dlt, B + 1);        // [-1, B+1)
    auto dinv_pow = dinv;                       // Delta^{-(d+1)}
    for (long i = 1; i <= d; ++i) dinv_pow = mul(dinv_pow, dinv);
    auto base = mul(e_kp, dinv_pow);            // leading exponent -(d+1)
    auto e4 = eisenstein(ring, 4, B + 1);
    auto j = mul(power(e4, 3), crop(dinv, -1, B)); // [-1, B-1)

    std::map<long, Series<Ring>> fs;
    fs.emplace(d + 1, base);
    auto g = base;
    for (long mm = d + 2; mm <= m; ++mm) {
        g = mul(g, j);
        auto f = g;
        for (long n = -(mm - 1); n <= -d - 1; ++n) {
            auto c = f.at(n);
            if (ring.is_zero(c)) continue;
            f = sub(f, scalar_mul(c, fs.at(-n)));
        }
        fs.emplace(mm, std::move(f));
    }
    return crop(fs.at(m), -m, out_bound);
}

// Weight-kappa Hecke operator on q-expansions:
//   (a|T_p)(n) = a(pn) + p^{kappa-1} a(n/p),  a(s) = 0 for s not integral.
template <class Ring>
Series<Ring> hecke_tp(const Series<Ring>& a, long kappa, long p) {
    if (p < 2) throw DomainError("Hecke operator needs p >= 2");
    const long m = a.min_exp(), T = a.prec_bound();
    const long lo = std::min(ceil_div(m, p), p * m);
    const long hi = std::min(floor_div(T - 1, p) + 1, p * (T - 1) + 1);
    if (hi <= lo)
        throw WindowError("window too small for the Hecke operator");
    const Rat pk = kappa >= 1
                       ? Rat(pow_z(p, static_cast<unsigned long>(kappa - 1)))
                       : Rat(1) / Rat(pow_z(p, static_cast<unsigned long>(
                                                   1 - kappa)));
    const auto factor = a.ring().from_rat(pk);
    auto out = Series<Ring>::zeros(a.ring(), lo, hi);
    for (long n = lo; n < hi; ++n) {
        auto v = a.at(p * n);
        if (n % p == 0)
            v = a.ring().add(v, a.ring().mul(factor, a.at(n / p)));
        out.mut(n) = v;
    }
    return out;
}

// R_p = p^{1-k} f_{p,2-k}; principal part p^{1-k} q^{-p} - p^{1-k}tau(p) q^{-1}.
// `terms` counts coefficients: window [-p, terms - p).
template <class Ring>
Series<Ring> r_p(const Ring& ring, long p, long terms,
                 const BasisParams& bp = BasisParams{}) {
    if (!is_small_prime(p) || p < 3)
        throw DomainError("R_p needs an odd prime p");
    auto f = duke_jenkins(ring, p, terms, bp);
    const Rat scale =
        Rat(1) / Rat(pow_z(p, static_cast<unsigned long>(bp.k - 1)));
    return scalar_mul(ring.from_rat(scale), f);
}

} // namespace mockmod
