#include "mockmod/padlimit.hpp"

#include <sstream>

namespace mockmod {

namespace {

// Sum of (beta'^n - beta^n) * (rp | U_{p^{n-1}}) for n = 2..depth.
PSeries assemble_sum(const PadicRing& ring, const HeckeRootPair& pair,
                     const PSeries& rp, long depth) {
    if (depth < 2) throw DomainError("truncation depth must be >= 2");
    const Padic& beta = pair.beta;
    const Padic& beta_prime = pair.beta_prime;
    PSeries level = rp;
    Padic bn = ring.mul(beta, beta);
    Padic bpn = ring.mul(beta_prime, beta_prime);
    std::optional<PSeries> acc;
    for (long n = 2; n <= depth; ++n) {
        level = apply_u(level, pair.p);
        auto term = scalar_mul(ring.sub(bpn, bn), level);
        acc = acc ? add(*acc, term) : std::move(term);
        if (n < depth) {
            bn = ring.mul(bn, beta);
            bpn = ring.mul(bpn, beta_prime);
        }
    }
    return *acc;
}

} // namespace

TruncationPlan plan_truncation(long p, int k, int v, long ell, long s,
                               long coeff_count) {
    if (p < 3 || !is_small_prime(p))
        throw DomainError("truncation plans need an odd prime p");
    if (k < 4 || k % 2 != 0) throw DomainError("weight must be even and >= 4");
    if (v < 1 || 2 * v >= k - 1)
        throw DomainError("eigenvalue valuation must satisfy 0 < v < (k-1)/2");
    if (ell < 1) throw DomainError("target modulus exponent must be >= 1");
    if (s < 0) throw DomainError("scale exponent must be >= 0");
    if (coeff_count < 1) throw DomainError("coefficient count must be >= 1");

    TruncationPlan plan;
    plan.p = p;
    plan.k = k;
    plan.v = v;
    plan.target_mod_power = ell;
    plan.scale_exp = s;
    plan.coeff_count = coeff_count;
    // Dropped tail terms n > r have order >= s + v(n) - (k-1) >= ell as soon
    // as v(r+1) + s - (k-1) >= ell; the conservative variant also keeps the
    // boundary term whose own order already reaches ell.
    long r = 2;
    while (v * (r + 1) + s - (k - 1) < ell) ++r;
    plan.depth = r;
    plan.depth_conservative =
        std::max<long>(2, ceil_div(ell + (k - 1) - s, v));
    mpz_class rp_terms =
        pow_z(p, static_cast<unsigned long>(plan.depth - 1)) *
        (coeff_count + 1);
    if (!rp_terms.fits_slong_p())
        throw DomainError("truncation plan needs more source coefficients "
                          "than fit in a machine word");
    plan.rp_terms = rp_terms.get_si();
    plan.l1_statement =
        std::max<long>(ceil_div((k - 1) + ell, v), ell - 1);
    plan.l1_proof = std::max<long>(ceil_div((k - 1) + ell, v), ell - 2);
    plan.k_p = (p == 3) ? 4 : static_cast<int>(p - 1);
    return plan;
}

mpz_class delta_eigenvalue(long p) {
    if (p < 2 || !is_small_prime(p))
        throw DomainError("Delta eigenvalues are indexed by primes");
    RationalRing ring;
    auto dlt = delta_series(ring, p + 1);
    Rat c = dlt.at(p);
    if (mpz_cmp_ui(mpq_denref(c.get_mpq_t()), 1) != 0)
        throw Error("internal: Delta coefficient is not an integer");
    return mpz_class(mpq_numref(c.get_mpq_t()));
}

PSeries f_alpha_delta_truncated(const PadicRing& ring,
                                const HeckeRootPair& pair,
                                const TruncationPlan& plan, const PSeries& rp,
                                long depth_override) {
    if (ring.prime() != pair.p || pair.p != plan.p)
        throw DomainError("mismatched primes across ring, roots, and plan");
    const long depth = depth_override > 0 ? depth_override : plan.depth;
    auto sum = assemble_sum(ring, pair, rp, depth);
    const Padic prefactor =
        ring.mul(pair.beta, ring.inverse(ring.sub(pair.beta_prime, pair.beta)));
    auto out = scalar_mul(prefactor, sum);
    if (out.min_exp() != -1)
        throw WindowError("assembly window does not reach exponent -1");
    const long needed = plan.target_mod_power + plan.scale_exp;
    for (long n = out.min_exp(); n < out.prec_bound(); ++n) {
        if (out.at(n).abs_prec() < needed) {
            std::ostringstream os;
            os << "assembled coefficient at exponent " << n
               << " retains absolute precision " << out.at(n).abs_prec()
               << " < required " << needed
               << "; raise the working precision";
            throw PrecisionError(os.str());
        }
    }
    return out;
}

PSeries f_alpha_star_truncated(const PadicRing& ring,
                               const HeckeRootPair& pair, const PSeries& rp,
                               long last_level, bool from_l1) {
    if (ring.prime() != pair.p)
        throw DomainError("mismatched primes between ring and roots");
    const long first = from_l1 ? 1 : 0;
    if (last_level < first)
        throw DomainError("companion truncation level below first summand");
    PSeries level = rp;
    Padic bpl = ring.one();
    std::optional<PSeries> acc;
    for (long l = 0; l <= last_level; ++l) {
        if (l > 0) {
            level = apply_u(level, pair.p);
            bpl = ring.mul(bpl, pair.beta_prime);
        }
        if (l < first) continue;
        auto term = scalar_mul(bpl, level);
        acc = acc ? add(*acc, term) : std::move(term);
    }
    const Padic front =
        from_l1 ? ring.neg(ring.one()) : ring.neg(pair.beta_prime);
    return scalar_mul(front, *acc);
}

HolomorphicApprox build_holomorphic_approx(const PadicRing& ring,
                                           const HeckeRootPair& pair, long ell,
                                           const PSeries& rp) {
    if (ell < 1) throw DomainError("target modulus exponent must be >= 1");
    const long p = pair.p;
    const int k = pair.k, v = pair.v;

    HolomorphicLedger ledger;
    ledger.depth = ceil_div(ell + (k - 1), v);
    ledger.l1_statement = std::max<long>(ceil_div((k - 1) + ell, v), ell - 1);
    ledger.l1_used = std::max(ledger.l1_statement, ledger.depth);
    mpz_class e_exp = pow_z(p, static_cast<unsigned long>(ledger.l1_used + 1));
    if (!e_exp.fits_slong_p())
        throw DomainError("target modulus too deep for ledger arithmetic");
    ledger.e_exponent = e_exp.get_si();
    ledger.pole_qp_units =
        pow_z(p, static_cast<unsigned long>(ledger.depth + 1)).get_si();
    ledger.zero_qp_units = p + ledger.e_exponent;
    ledger.certified = ledger.zero_qp_units >= ledger.pole_qp_units;
    if (!ledger.certified)
        throw Error("internal: holomorphic ledger fails its own certificate");

    auto f = assemble_sum(ring, pair, rp, ledger.depth);
    const Padic prefactor =
        ring.mul(pair.beta, ring.inverse(ring.sub(pair.beta_prime, pair.beta)));
    f = scalar_mul(prefactor, f);

    const long k_p = (p == 3) ? 4 : p - 1;
    const long fb = f.prec_bound();
    auto dlt = delta_series(ring, fb + 2);
    auto fd = mul(f, dlt);
    auto ekp = eisenstein_p(ring, static_cast<int>(k_p), p, fd.prec_bound());
    auto g = mul(fd, power(ekp, static_cast<unsigned long>(ledger.e_exponent)));
    if (g.min_exp() < 0)
        throw WindowError("holomorphic approximation has a pole at infinity");

    HolomorphicApprox out{2 + k_p * ledger.e_exponent, std::move(g), ledger};
    return out;
}

} // namespace mockmod
