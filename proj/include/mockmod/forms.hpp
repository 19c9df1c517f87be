#pragma once

#include <vector>

#include "mockmod/series.hpp"

namespace mockmod {

// Bernoulli numbers B_0..B_n (convention B_1 = -1/2).
std::vector<Rat> bernoulli_table(int n);
Rat bernoulli(int n);

// sigma_r(n) = sum of d^r over divisors d of n.
mpz_class sigma(long n, int r);

// sigma_r(n) for all n in [0, bound); entry 0 is unused (zero).
std::vector<mpz_class> sigma_table(int r, long bound);

// Coefficients of prod_{n>=1} (1-q^n)^s as exact integers on [0, bound),
// for s in {1, 3}: the pentagonal-number series (s=1) and the Jacobi cube
// (s=3) are both sparse with small coefficients.
std::vector<mpz_class> eta_power_q(int s, long bound);

// E_k = 1 - (2k/B_k) sum_{n>=1} sigma_{k-1}(n) q^n, window [0, bound).
template <class Ring>
Series<Ring> eisenstein(const Ring& ring, int k, long bound) {
    if (k < 2 || k % 2 != 0)
        throw DomainError("Eisenstein weight must be even and >= 2");
    auto out = Series<Ring>::zeros(ring, 0, bound);
    out.mut(0) = ring.one();
    const Rat c = Rat(-2 * k) / bernoulli(k);
    const auto sig = sigma_table(k - 1, bound);
    for (long n = 1; n < bound; ++n)
        out.mut(n) = ring.from_rat(c * Rat(sig[static_cast<std::size_t>(n)]));
    return out;
}

// Delta = q prod (1-q^n)^24, window [1, bound).  Built from the sparse
// Jacobi cube q*prod(1-q^n)^3, shifted to prod(1-q^n)^3 and cubed-squared
// up to the 24th power (24 = 8*3), then re-shifted.
template <class Ring>
Series<Ring> delta_series(const Ring& ring, long bound) {
    if (bound < 2) throw WindowError("delta needs bound >= 2");
    const auto cube = eta_power_q(3, bound - 1);
    auto eta3 = Series<Ring>::zeros(ring, 0, bound - 1); // prod(1-q^n)^3
    for (long n = 0; n < bound - 1; ++n)
        eta3.mut(n) = ring.from_mpz(cube[static_cast<std::size_t>(n)]);
    auto eta6 = mul(eta3, eta3);
    auto eta12 = mul(eta6, eta6);
    auto eta24 = mul(eta12, eta12);
    return crop(shift_exp(eta24, 1), 1, bound);
}

// j = E_4^3 / Delta, window [-1, bound).
template <class Ring>
Series<Ring> j_invariant(const Ring& ring, long bound) {
    auto e4 = eisenstein(ring, 4, bound + 1);
    auto e4cubed = power(e4, 3);
    auto dinv = invert_unit(delta_series(ring, bound + 2), bound);
    return mul(e4cubed, dinv);
}

// E_{k,p} = E_k - p^k E_k|V_p, window [0, bound).  Constant term 1 - p^k.
template <class Ring>
Series<Ring> eisenstein_p(const Ring& ring, int k, long p, long bound) {
    if (k < 4) throw DomainError("E_{k,p} needs k >= 4 (use e2_tilde for k=2)");
    auto e = eisenstein(ring, k, bound);
    auto scaled = scalar_mul(
        ring.from_mpz(pow_z(p, static_cast<unsigned long>(k))),
        apply_v(e, p));
    return crop(sub(e, scaled), 0, bound);
}

// E~_{2,p} = E_2 - p E_2|V_p, window [0, bound).  Constant term 1 - p.
template <class Ring>
Series<Ring> e2_tilde(const Ring& ring, long p, long bound) {
    auto e = eisenstein(ring, 2, bound);
    auto scaled = scalar_mul(ring.from_int(p), apply_v(e, p));
    return crop(sub(e, scaled), 0, bound);
}

// Eichler integral of a cusp form: coefficient a(n) becomes n^(kappa-1) a(n).
// Exact only over the rationals (n^(kappa-1) has unbounded denominators).
QSeries eichler_integral(const QSeries& g, long kappa);

} // namespace mockmod
