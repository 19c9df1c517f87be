#pragma once

#include "mockmod/basis.hpp"
#include "mockmod/rings.hpp"
#include "mockmod/series.hpp"

namespace mockmod {

// Truncation budget for assembling F_{alpha,delta} from R_p to a target
// modulus p^ell after scaling by p^s.  `depth` is the sharp last summand
// index: the smallest r >= 2 with v*(r+1) + s - (k-1) >= ell, so every
// dropped tail term has order >= ell.  `depth_conservative` instead keeps
// all summands whose own order could fall below ell, which costs one more
// level whenever v | (ell + k - 1 - s).
struct TruncationPlan {
    long p = 0;
    int k = 0;
    int v = 0;                  // ord_p of the Hecke eigenvalue
    long target_mod_power = 0;  // ell
    long scale_exp = 0;         // s
    long depth = 0;             // sharp truncation depth r
    long depth_conservative = 0;
    long coeff_count = 0;       // N: congruence checked on [0, N)
    long rp_terms = 0;          // p^{depth-1} * (N + 1)
    long l1_statement = 0;      // max(ceil((k - 1 + ell) / v), ell - 1)
    long l1_proof = 0;          // max(ceil((k - 1 + ell) / v), ell - 2)
    int k_p = 0;                // 4 when p = 3, else p - 1
};

TruncationPlan plan_truncation(long p, int k, int v, long ell, long s,
                               long coeff_count);

// Hecke eigenvalue of Delta at a prime, from a fresh rational expansion.
mpz_class delta_eigenvalue(long p);

// (beta/(beta'-beta)) * sum_{n=2}^{depth} (beta'^n - beta^n) R|U_{p^{n-1}},
// assembled over a p-adic coefficient ring.  Every output coefficient must
// retain absolute precision >= ell + s or a PrecisionError is thrown; the
// result window starts at exponent -1 and is as wide as `rp` supports.
PSeries f_alpha_delta_truncated(const PadicRing& ring,
                                const HeckeRootPair& pair,
                                const TruncationPlan& plan, const PSeries& rp,
                                long depth_override = 0);

// Partial sums of the companion expansion -beta' sum_{l>=0} beta'^l R|U_{p^l}
// (or, with `from_l1 = true`, of -sum_{l>=1} beta'^l R|U_{p^l}, which is the
// image of the full expansion under U_p).
PSeries f_alpha_star_truncated(const PadicRing& ring,
                               const HeckeRootPair& pair, const PSeries& rp,
                               long last_level, bool from_l1 = false);

// Holomorphic congruence ledger: G = F_{alpha,delta} * Delta * E_{k_p,p}^{rE}
// matches the plain assembly mod p^ell while clearing the pole at the cusp 0.
// Orders at that cusp are tracked in q^{1/p} units: the deepest U_{p^{depth-1}}
// summand contributes a pole of at most p^{depth+1}, while Delta and each
// E_{k_p,p} factor contribute zeros of order p and 1.
struct HolomorphicLedger {
    long depth = 0;          // r_ell = ceil((ell + k - 1) / v)
    long l1_statement = 0;   // max(ceil((k - 1 + ell) / v), ell - 1)
    long l1_used = 0;        // max(l1_statement, depth)
    long e_exponent = 0;     // rE = p^{l1_used + 1}
    long pole_qp_units = 0;  // p^{depth + 1}
    long zero_qp_units = 0;  // p + e_exponent
    bool certified = false;  // zero_qp_units >= pole_qp_units
};

struct HolomorphicApprox {
    long weight = 0; // 2 + k_p * e_exponent
    PSeries series;  // window starts at exponent >= 0
    HolomorphicLedger ledger;
};

HolomorphicApprox build_holomorphic_approx(const PadicRing& ring,
                                           const HeckeRootPair& pair, long ell,
                                           const PSeries& rp);

} // namespace mockmod
