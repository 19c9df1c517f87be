#include "mockmod/verify.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace mockmod {

long sturm_bound_gamma0(long weight, long p) {
    if (weight < 0) throw DomainError("Sturm bound needs weight >= 0");
    if (p < 2) throw DomainError("Sturm bound needs a prime level");
    mpz_class num = mpz_class(weight) * (p + 1);
    mpz_class q;
    mpz_cdiv_q_ui(q.get_mpz_t(), num.get_mpz_t(), 12);
    return q.get_si();
}

long lemma_bound(int k, long p, long ell) {
    if (k < 1 || p < 2 || ell < 0)
        throw DomainError("coefficient budget needs k >= 1, p >= 2, ell >= 0");
    // ceil((p+1)/6 + k*(p^{ell+2} + p^{ell+1})/12) in exact arithmetic.
    Rat total = Rat(p + 1) / 6 +
                Rat(k) *
                    (pow_z(p, static_cast<unsigned long>(ell + 2)) +
                     pow_z(p, static_cast<unsigned long>(ell + 1))) /
                    12;
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), total.get_num().get_mpz_t(),
               total.get_den().get_mpz_t());
    if (!q.fits_slong_p())
        throw DomainError("coefficient budget exceeds a machine word");
    return q.get_si();
}

long pole_order_bound(long p, long ell) {
    if (p < 2 || ell < 1)
        throw DomainError("pole bound needs p >= 2 and ell >= 1");
    mpz_class v = pow_z(p, static_cast<unsigned long>(ell + 2));
    if (!v.fits_slong_p())
        throw DomainError("pole bound exceeds a machine word");
    return v.get_si();
}

namespace {

QSeries const_one(const RationalRing& ring, long lo, long hi) {
    auto out = QSeries::zeros(ring, lo, hi);
    out.mut(0) = Rat(1);
    return out;
}

// Fold per-instance reports of a composite check into one entry: the window
// is the widest instance window, `compared` totals every coefficient
// examined, and the first failing instance supplies the mismatch.
CongruenceReport aggregate(const std::string& id,
                           const std::vector<CongruenceReport>& parts) {
    CongruenceReport rep;
    rep.check_id = id;
    rep.pass = true;
    std::ostringstream note;
    bool first = true;
    for (const auto& part : parts) {
        if (first) {
            rep.lo = part.lo;
            rep.hi = part.hi;
            rep.p = part.p;
            rep.mod_power = part.mod_power;
        } else {
            rep.lo = std::min(rep.lo, part.lo);
            rep.hi = std::max(rep.hi, part.hi);
            if (part.p != rep.p) rep.p = 0;
            rep.mod_power = std::max(rep.mod_power, part.mod_power);
        }
        rep.compared += part.compared;
        if (!part.pass && rep.pass) {
            rep.pass = false;
            rep.first_mismatch = part.first_mismatch;
        }
        if (!first) note << "; ";
        note << part.note << (part.pass ? " ok" : " FAILED");
        first = false;
    }
    rep.note = note.str();
    return rep;
}

} // namespace

struct CheckSuite::Impl {
    CheckOptions opt;
    RationalRing rr;
    std::recursive_mutex mu;
    std::map<std::string, QSeries> qmemo;
    std::map<std::string, PSeries> pmemo;
    std::map<long, HeckeRootPair> pairs;
    std::optional<PadicRing> ring3_;

    explicit Impl(CheckOptions o) : opt(std::move(o)) {}

    long N(long dflt) const { return opt.terms > 0 ? opt.terms : dflt; }
    long M(long dflt) const { return opt.mod_power > 0 ? opt.mod_power : dflt; }

    const PadicRing& ring3() {
        if (!ring3_) ring3_.emplace(3, opt.precision);
        return *ring3_;
    }

    const HeckeRootPair& pair(long p) {
        auto it = pairs.find(p);
        if (it != pairs.end()) return it->second;
        const long prec = std::min(opt.precision, padic_max_prec(p));
        auto pr = hensel_quadratic_roots(delta_eigenvalue(p), p, 12, prec);
        return pairs.emplace(p, std::move(pr)).first->second;
    }

    const QSeries& rat(const std::string& key,
                       const std::function<QSeries()>& make) {
        auto it = qmemo.find(key);
        if (it != qmemo.end()) return it->second;
        return qmemo.emplace(key, make()).first->second;
    }
    const PSeries& pad(const std::string& key,
                       const std::function<PSeries()>& make) {
        auto it = pmemo.find(key);
        if (it != pmemo.end()) return it->second;
        return pmemo.emplace(key, make()).first->second;
    }

    // ---- shared rational building blocks -------------------------------
    const QSeries& e_q(int k, long bound) {
        return rat("E" + std::to_string(k) + "@" + std::to_string(bound),
                   [&] { return eisenstein(rr, k, bound); });
    }
    const QSeries& delta_q(long bound) {
        return rat("delta@" + std::to_string(bound),
                   [&] { return delta_series(rr, bound); });
    }
    const QSeries& j_q(long bound) {
        return rat("j@" + std::to_string(bound),
                   [&] { return j_invariant(rr, bound); });
    }
    const QSeries& e2t3_q(long bound) {
        return rat("e2tilde3@" + std::to_string(bound),
                   [&] { return e2_tilde(rr, 3, bound); });
    }
    const QSeries& ekp_q(int k, long p, long bound) {
        return rat("E" + std::to_string(k) + "p" + std::to_string(p) + "@" +
                       std::to_string(bound),
                   [&] { return eisenstein_p(rr, k, p, bound); });
    }
    const QSeries& dj3_q(long terms) {
        return rat("dj3@" + std::to_string(terms), [&] {
            CacheKey key{"dj-basis",
                         "m=3;terms=" + std::to_string(terms)};
            return cache_through(opt.cache_dir, key, rr, -3, terms - 3,
                                 [&] { return duke_jenkins(rr, 3, terms); });
        });
    }
    const QSeries& rp3_q(long terms) {
        return rat("rp3@" + std::to_string(terms), [&] {
            const Rat s = Rat(1) / Rat(pow_z(3, 11));
            return scalar_mul(rr.from_rat(s), dj3_q(terms));
        });
    }

    // ---- shared p-adic building blocks ---------------------------------
    const PSeries& rp3_p(long terms) {
        return pad("rp3@" + std::to_string(terms), [&] {
            CacheKey key{"r-p", "p=3;terms=" + std::to_string(terms)};
            return cache_through(opt.cache_dir, key, ring3(), -3, terms - 3,
                                 [&] { return r_p(ring3(), 3, terms); });
        });
    }
    const PSeries& delta_p(long bound) {
        return pad("delta@" + std::to_string(bound),
                   [&] { return delta_series(ring3(), bound); });
    }
    const PSeries& ekp_p(int k, long bound) {
        return pad("E" + std::to_string(k) + "p3@" + std::to_string(bound),
                   [&] { return eisenstein_p(ring3(), k, 3, bound); });
    }

    // 3^7 * F_{alpha,delta} * Delta at the conservative depth 4; window
    // [0, n_coeff + 1).
    const PSeries& thm_lhs(long n_coeff) {
        return pad("thmLHS@" + std::to_string(n_coeff), [&] {
            auto plan = plan_truncation(3, 12, pair(3).v, 3, 7, n_coeff);
            auto& rp = rp3_p(27 * n_coeff);
            auto F = f_alpha_delta_truncated(ring3(), pair(3), plan, rp,
                                             plan.depth_conservative);
            auto fd = mul(F, delta_p(n_coeff + 2));
            return scalar_mul(ring3().from_mpz(pow_z(3, 7)), fd);
        });
    }

    // -3^{-4} Delta E_{6,3}^3 (beta/(beta'-beta)) sum_{n=2}^4 beta^n
    // (3^11 R_3 | U_{3^{n-1}}); window [0, n_coeff + 1).
    const PSeries& weak_lhs(long n_coeff) {
        return pad("weakLHS@" + std::to_string(n_coeff), [&] {
            const PadicRing& ring = ring3();
            const auto& pr = pair(3);
            auto scaled =
                scalar_mul(ring.from_mpz(pow_z(3, 11)), rp3_p(27 * n_coeff));
            PSeries level = scaled;
            Padic bn = ring.mul(pr.beta, pr.beta);
            std::optional<PSeries> acc;
            for (int n = 2; n <= 4; ++n) {
                level = apply_u(level, 3);
                auto term = scalar_mul(bn, level);
                acc = acc ? add(*acc, term) : std::move(term);
                if (n < 4) bn = ring.mul(bn, pr.beta);
            }
            auto de = mul(delta_p(n_coeff + 6),
                          power(ekp_p(6, n_coeff + 5), 3));
            auto lhs = mul(de, *acc);
            Padic pref = ring.mul(
                pr.beta, ring.inverse(ring.sub(pr.beta_prime, pr.beta)));
            Padic front = ring.neg(
                ring.mul(ring.from_rat(Rat(1) / Rat(81)), pref));
            return scalar_mul(front, lhs);
        });
    }

    // RHS shared by the weak identity and e2cong/deltacong:
    //   e2part  = Etilde_{2,3}^10 + 3 E_10^2 | V_3          on [0, n)
    //   full    = e2part + 9 Delta Etilde_{2,3}^4           on [0, n)
    const QSeries& e2cong_rhs(long n) {
        return rat("e2congRHS@" + std::to_string(n), [&] {
            auto p10 = power(e2t3_q(n), 10);
            auto e10sq = power(e_q(10, n), 2);
            auto v3 = crop(apply_v(e10sq, 3), 0, n);
            return add(p10, scalar_mul(Rat(3), v3));
        });
    }
    const QSeries& weak_rhs(long n) {
        return rat("weakRHS@" + std::to_string(n), [&] {
            auto de4 = mul(delta_q(n + 1), power(e2t3_q(n), 4));
            return add(e2cong_rhs(n), scalar_mul(Rat(9), crop(de4, 0, n)));
        });
    }

    // ---- the checks -----------------------------------------------------

    CongruenceReport thm_check(const std::string& id, long m_dflt) {
        const long n = N(323), m = M(m_dflt);
        const auto& lhs = thm_lhs(n);
        QSeries rhs = const_one(rr, 0, n);
        if (m >= 2) rhs = add(rhs, sub(e_q(2, n), const_one(rr, 0, n)));
        if (m >= 3)
            rhs = add(rhs, scalar_mul(Rat(9), crop(delta_q(n + 1), 0, n)));
        auto rep = check_congruence(id, rhs, lhs, 3, m, 0, n);
        rep.precision = opt.precision;
        std::ostringstream note;
        note << "3^7 F Delta vs "
             << (m <= 1 ? "1" : m == 2 ? "E2" : "E2 + 9 Delta") << " (depth 4)";
        rep.note = note.str();
        return rep;
    }

    CongruenceReport principal_part_check(const std::string& id, long p) {
        // principal part = the negative-exponent coefficients only; the
        // constant term of the basis element is unconstrained
        const long terms = N(40);
        QSeries f = (p == 3) ? crop(dj3_q(std::max<long>(terms, 8)), -3, 0)
                             : crop(duke_jenkins(rr, p, terms), -p, 0);
        const Rat scale = Rat(1) / Rat(pow_z(p, 11));
        auto lhs = scalar_mul(rr.from_rat(scale), f);
        auto rhs = QSeries::zeros(rr, -p, 0);
        rhs.mut(-p) = scale;
        rhs.mut(-1) = -Rat(delta_eigenvalue(p)) * scale;
        auto rep = check_exact(id, lhs, rhs, -p, 0);
        rep.p = p;
        rep.note = "principal part of R_" + std::to_string(p);
        return rep;
    }

    CongruenceReport closed_form_check() {
        const long n = N(2000);
        auto lhs = crop(dj3_q(n + 3), -3, n - 3);
        // Independent assembly of E_14 Delta^{-2} (j - 768).
        const long B = n + 8;
        auto e14 = e_q(14, B);
        auto dlt = delta_q(B + 3);
        auto dinv = invert_unit(dlt, B + 1);
        auto base = mul(e14, mul(dinv, dinv)); // [-2, B-2)
        auto jm = sub(j_q(B - 1), scalar_mul(Rat(768), const_one(rr, 0, B - 1)));
        auto rhs = mul(base, jm); // [-3, B-3)
        auto rep = check_exact("rp-closed-form", lhs, crop(rhs, -3, n - 3), -3,
                               n - 3);
        rep.p = 3;
        rep.note = "f_3 vs E14*Delta^-2*(j-768) on " + std::to_string(n) +
                   " terms";
        return rep;
    }

    CongruenceReport e2cong_check() {
        const long n = N(323), m = M(3);
        auto rep =
            check_congruence("e2cong", e_q(2, n), e2cong_rhs(n), 3, m, 0, n);
        rep.note = "E2 vs Etilde_{2,3}^10 + 3 E10^2|V3";
        return rep;
    }

    CongruenceReport deltacong_check() {
        const long n = N(323), m = M(3);
        auto lhs = scalar_mul(Rat(9), crop(delta_q(n + 1), 0, n));
        auto de4 = mul(delta_q(n + 1), power(e2t3_q(n), 4));
        auto rhs = scalar_mul(Rat(9), crop(de4, 0, n));
        auto rep = check_congruence("deltacong", lhs, rhs, 3, m, 0, n);
        rep.note = "9 Delta vs 9 Delta Etilde_{2,3}^4";
        return rep;
    }

    CongruenceReport e23cong_check() {
        const long n = N(500), m = M(3);
        auto lhs = power(e2t3_q(n), 9);
        auto rep = check_congruence("e23cong", lhs, const_one(rr, 0, n), 3, m,
                                    0, n);
        rep.note = "Etilde_{2,3}^9 vs 1";
        return rep;
    }

    CongruenceReport e63cong_check() {
        const long n = N(200);
        std::vector<CongruenceReport> parts;
        for (long r = 0; r <= 2; ++r) {
            for (long d = 1; d <= 2; ++d) {
                const unsigned long e =
                    static_cast<unsigned long>(pow_z(3, r).get_ui() * d);
                const long m = M(r + 2);
                auto lhs = power(ekp_q(6, 3, n), e);
                auto mid = power(e_q(6, n), e);
                auto p1 = check_congruence("e63cong", lhs, mid, 3, m, 0, n);
                p1.note = "E_{6,3}^" + std::to_string(e) + " vs E_6^" +
                          std::to_string(e) + " mod 3^" + std::to_string(m);
                parts.push_back(p1);
                auto p2 = check_congruence("e63cong", mid,
                                           const_one(rr, 0, n), 3, m, 0, n);
                p2.note = "E_6^" + std::to_string(e) + " vs 1 mod 3^" +
                          std::to_string(m);
                parts.push_back(p2);
            }
        }
        return aggregate("e63cong", parts);
    }

    CongruenceReport e4sq_check() {
        const long n = N(100), m = M(2);
        auto e4sq = power(e_q(4, n), 2);
        std::vector<CongruenceReport> parts;
        auto p1 = check_congruence("e4sq-e2", e4sq, e_q(2, n), 3, m, 0, n);
        p1.note = "E4^2 vs E2 on [0," + std::to_string(n) + ")";
        parts.push_back(p1);
        auto rhs = scalar_mul(Rat(4), mul(e2t3_q(n), e_q(6, n)));
        auto p2 = check_congruence("e4sq-e2", e4sq, rhs, 3, m, 0, 3);
        p2.note = "E4^2 vs 4 Etilde_{2,3} E6 on [0,3)";
        parts.push_back(p2);
        auto p3 = check_congruence("e4sq-e2", e4sq, rhs, 3, m, 0, n);
        p3.note = "E4^2 vs 4 Etilde_{2,3} E6 on [0," + std::to_string(n) + ")";
        parts.push_back(p3);
        return aggregate("e4sq-e2", parts);
    }

    CongruenceReport weaktoshow_check() {
        const long n = N(323), m = M(3);
        auto rep = check_congruence("weaktoshow", weak_rhs(n), weak_lhs(n), 3,
                                    m, 0, n);
        rep.precision = opt.precision;
        rep.note = "-3^-4 Delta E_{6,3}^3 (beta/(beta'-beta)) "
                   "sum beta^n 3^11 R_3|U vs Eisenstein combination";
        return rep;
    }

    CongruenceReport jacobi_check() {
        const long n = N(2000);
        auto lhs = sub(power(e_q(4, n + 1), 3), power(e_q(6, n + 1), 2));
        auto rhs =
            crop(scalar_mul(Rat(1728), delta_q(n + 1)), 0, n + 1);
        auto rep = check_exact("jacobi", lhs, rhs, 0, n);
        rep.note = "E4^3 - E6^2 vs 1728 Delta";
        return rep;
    }

    CongruenceReport jdelta_check() {
        const long n = N(2000);
        auto lhs = mul(j_q(n + 1), delta_q(n + 2)); // [0, n+1)
        auto rep = check_exact("jdelta", lhs, power(e_q(4, n + 1), 3), 0, n);
        rep.note = "j Delta vs E4^3";
        return rep;
    }

    CongruenceReport serre_check() {
        const long n = N(200);
        struct Inst {
            int weight;
            long p;
            long m;
        };
        const Inst insts[] = {{6, 3, 2}, {4, 5, 1}, {8, 5, 1}};
        std::vector<CongruenceReport> parts;
        for (const auto& inst : insts) {
            const long m = M(inst.m);
            auto rep = check_congruence("serre", e_q(inst.weight, n),
                                        const_one(rr, 0, n), inst.p, m, 0, n);
            rep.note = "E" + std::to_string(inst.weight) + " vs 1 mod " +
                       std::to_string(inst.p) + "^" + std::to_string(m);
            parts.push_back(rep);
        }
        return aggregate("serre", parts);
    }

    CongruenceReport bol_check() {
        const long n = N(500);
        auto dlt = delta_q(n + 1);
        auto eich = eichler_integral(dlt, -10);
        auto lhs = apply_d(eich, 11);
        auto rep = check_exact("bol", lhs, dlt, 1, n + 1);
        rep.note = "D^11 of the Eichler integral of Delta vs Delta";
        return rep;
    }

    CongruenceReport hecke_eigen_check() {
        const long n = N(1000);
        std::vector<CongruenceReport> parts;
        for (long p : {2L, 3L, 5L}) {
            auto dlt = delta_q(n * p + 1);
            auto lhs = hecke_tp(dlt, 12, p);
            auto rhs = scalar_mul(Rat(delta_eigenvalue(p)),
                                  crop(delta_q(n + 1), 1, n + 1));
            auto rep = check_exact("hecke-eigen", lhs, rhs, 1, n + 1);
            rep.note = "Delta|T(" + std::to_string(p) + ") vs tau(" +
                       std::to_string(p) + ") Delta";
            parts.push_back(rep);
        }
        return aggregate("hecke-eigen", parts);
    }

    CongruenceReport hensel_check(const std::string& id, long p) {
        const auto start = std::chrono::steady_clock::now();
        const auto& pr = pair(p);
        const PadicRing ring(p, pr.beta.mantissa_prec());
        const long m = ring.precision();
        const mpz_class pk = pow_z(p, 11);
        bool ok = true;
        std::ostringstream note;
        note << "x^2 - " << pr.lambda << " x + " << p << "^11: ";
        const long v = pr.v;
        if (pr.beta.shift() != v || pr.beta_prime.shift() != 11 - v) {
            ok = false;
            note << "valuation split broken; ";
        }
        if (!ring.add(pr.beta, pr.beta_prime)
                 .congruent(ring.from_mpz(pr.lambda), m)) {
            ok = false;
            note << "trace mismatch; ";
        }
        if (!ring.mul(pr.beta, pr.beta_prime)
                 .congruent(ring.from_mpz(pk), m)) {
            ok = false;
            note << "norm mismatch; ";
        }
        mpz_class mod = pow_z(p, static_cast<unsigned long>(11 - v));
        mpz_class lam_red;
        mpz_fdiv_r(lam_red.get_mpz_t(), pr.lambda.get_mpz_t(),
                   mod.get_mpz_t());
        if (pr.beta.residue(11 - v) != lam_red) {
            ok = false;
            note << "beta != lambda mod p^" << (11 - v) << "; ";
        }
        note << "ord(beta)=" << v << ", ord(beta')=" << (11 - v)
             << ", mantissa digits " << m;
        CongruenceReport rep;
        rep.check_id = id;
        rep.p = p;
        rep.lo = 0;
        rep.hi = 4;
        rep.compared = 4;
        rep.pass = ok;
        rep.precision = m;
        rep.note = note.str();
        rep.wall_time_ms =
            std::chrono::duration<double, std::milli>(
                std::chrono::steady_clock::now() - start)
                .count();
        return rep;
    }

    CongruenceReport ring_oracle_check() {
        if (opt.precision < 20)
            throw PrecisionError(
                "the rational oracle needs >= 20 p-adic mantissa digits to "
                "certify agreement mod 27");
        const long n_thm = N(323);
        const long n = std::min<long>(200, n_thm);
        const long m = M(3);
        const auto& pr = pair(3);
        // Exact-rational run of the same pipeline, using the integer
        // residue of beta; the perturbation from truncating beta sits at
        // order >= precision - 15, far above the compared modulus.
        const Rat B(pr.beta.residue(opt.precision));
        const Rat Bp = Rat(pr.lambda) - B;
        auto& rpq = rp3_q(27 * n);
        QSeries level = rpq;
        Rat bn = B * B, bpn = Bp * Bp;
        std::optional<QSeries> acc;
        for (int t = 2; t <= 4; ++t) {
            level = apply_u(level, 3);
            auto term = scalar_mul(bpn - bn, level);
            acc = acc ? add(*acc, term) : std::move(term);
            if (t < 4) {
                bn = bn * B;
                bpn = bpn * Bp;
            }
        }
        auto fq = scalar_mul(B / (Bp - B), *acc);
        auto lhs_q = scalar_mul(Rat(pow_z(3, 7)), mul(fq, delta_q(n + 2)));
        auto rep = check_congruence("ring-oracle", lhs_q, thm_lhs(n_thm), 3, m,
                                    0, n);
        rep.precision = opt.precision;
        rep.note = "exact-rational pipeline vs p-adic pipeline";
        return rep;
    }

    CongruenceReport depth_agreement_check() {
        const long n = N(323), m = M(3);
        auto plan = plan_truncation(3, 12, pair(3).v, 3, 7, n);
        auto F3 = f_alpha_delta_truncated(ring3(), pair(3), plan, rp3_p(27 * n),
                                          3);
        auto lhs = scalar_mul(ring3().from_mpz(pow_z(3, 7)),
                              mul(F3, delta_p(n + 2)));
        auto rep = check_congruence("depth-agreement", lhs, thm_lhs(n), 3, m, 0,
                                    n);
        rep.precision = opt.precision;
        rep.note = "depth-3 vs depth-4 assembly";
        return rep;
    }

    CongruenceReport hol_approx_check(const std::string& id, long ell) {
        const long n = N(323);
        const long m = M(ell);
        auto ha = build_holomorphic_approx(ring3(), pair(3), ell,
                                           rp3_p(27 * n));
        std::vector<CongruenceReport> parts;

        CongruenceReport structural;
        structural.check_id = id;
        structural.p = 3;
        structural.lo = 0;
        structural.hi = 3;
        structural.compared = 3;
        structural.pass = ha.series.min_exp() >= 0 && ha.ledger.certified &&
                          ha.ledger.pole_qp_units <=
                              pole_order_bound(3, ha.ledger.depth - 1);
        std::ostringstream note;
        note << "weight " << ha.weight << ", pole " << ha.ledger.pole_qp_units
             << " <= bound " << pole_order_bound(3, ha.ledger.depth - 1)
             << ", zeros " << ha.ledger.zero_qp_units << ", E-exponent "
             << ha.ledger.e_exponent << " (l1 statement "
             << ha.ledger.l1_statement << ", used " << ha.ledger.l1_used
             << ")";
        structural.note = note.str();
        parts.push_back(structural);

        auto scaled = scalar_mul(ring3().from_mpz(pow_z(3, 7)), ha.series);
        const auto& ref = thm_lhs(n);
        const long hi = std::min(scaled.prec_bound(), ref.prec_bound());
        auto match = check_congruence(id, scaled, ref, 3, m, 0, hi);
        match.precision = opt.precision;
        match.note = "3^7 G vs depth-4 assembly mod 3^" + std::to_string(m) +
                     " on [0," + std::to_string(hi) + ")";
        parts.push_back(match);
        auto rep = aggregate(id, parts);
        rep.precision = opt.precision;
        return rep;
    }

    CongruenceReport deep_check() {
        const long n = N(323), m = M(3);
        const unsigned long e = 237;
        auto lhs = mul(weak_lhs(n), power(ekp_p(4, n + 1), e));
        auto rhs = mul(weak_rhs(n), power(ekp_q(4, 3, n), e));
        auto rep = check_congruence("thm-1-2-deep", rhs, lhs, 3, m, 0, n);
        rep.precision = opt.precision;
        rep.note = "weak identity times E_{4,3}^237 (pole ledger "
                   "237 + 3 + 3 = 243 at the cusp 0)";
        return rep;
    }

    CongruenceReport run_one(const std::string& id) {
        if (id == "thm-1-2-mod3") return thm_check(id, 1);
        if (id == "thm-1-2-mod9") return thm_check(id, 2);
        if (id == "thm-1-2-mod27") return thm_check(id, 3);
        if (id == "rp-principal-part") return principal_part_check(id, 3);
        if (id == "rp-principal-part-5") return principal_part_check(id, 5);
        if (id == "rp-principal-part-7") return principal_part_check(id, 7);
        if (id == "rp-closed-form") return closed_form_check();
        if (id == "e2cong") return e2cong_check();
        if (id == "deltacong") return deltacong_check();
        if (id == "e23cong") return e23cong_check();
        if (id == "e63cong") return e63cong_check();
        if (id == "e4sq-e2") return e4sq_check();
        if (id == "weaktoshow") return weaktoshow_check();
        if (id == "jacobi") return jacobi_check();
        if (id == "jdelta") return jdelta_check();
        if (id == "serre") return serre_check();
        if (id == "bol") return bol_check();
        if (id == "hecke-eigen") return hecke_eigen_check();
        if (id == "hensel-roots") return hensel_check(id, 3);
        if (id == "hensel-roots-5") return hensel_check(id, 5);
        if (id == "hensel-roots-7") return hensel_check(id, 7);
        if (id == "ring-oracle") return ring_oracle_check();
        if (id == "depth-agreement") return depth_agreement_check();
        if (id == "hol-approx-l1") return hol_approx_check(id, 1);
        if (id == "hol-approx-l2") return hol_approx_check(id, 2);
        if (id == "thm-1-2-deep") return deep_check();
        throw DomainError("unknown check id '" + id + "'");
    }
};

CheckSuite::CheckSuite(CheckOptions opt)
    : impl_(std::make_unique<Impl>(std::move(opt))) {
    set_series_threads(std::max(1, impl_->opt.threads));
}

CheckSuite::~CheckSuite() = default;

const std::vector<CheckSuite::Entry>& CheckSuite::registry() {
    static const std::vector<Entry> entries = {
        {"thm-1-2-mod3", 3, "scaled mock-Eisenstein assembly vs 1 mod 3"},
        {"thm-1-2-mod9", 3, "scaled mock-Eisenstein assembly vs E2 mod 9"},
        {"thm-1-2-mod27", 3,
         "scaled mock-Eisenstein assembly vs E2 + 9 Delta mod 27"},
        {"rp-principal-part", 3, "principal part of R_3 (exact)"},
        {"rp-principal-part-5", 5, "principal part of R_5 (exact)"},
        {"rp-principal-part-7", 7, "principal part of R_7 (exact)"},
        {"rp-closed-form", 3,
         "f_3 equals E14 Delta^-2 (j - 768) coefficientwise"},
        {"e2cong", 3, "E2 vs Etilde_{2,3}^10 + 3 E10^2|V3 mod 27"},
        {"deltacong", 3, "9 Delta vs 9 Delta Etilde_{2,3}^4 mod 27"},
        {"e23cong", 3, "Etilde_{2,3}^9 vs 1 mod 27"},
        {"e63cong", 3, "E_{6,3}^{3^r d} vs E_6^{3^r d} vs 1 mod 3^{r+2}"},
        {"e4sq-e2", 3, "E4^2 vs E2 and vs 4 Etilde_{2,3} E6 mod 9"},
        {"weaktoshow", 3, "weak form of the deep congruence mod 27"},
        {"jacobi", 3, "E4^3 - E6^2 = 1728 Delta (exact)"},
        {"jdelta", 3, "j Delta = E4^3 (exact)"},
        {"serre", 3, "E_{(p-1)k} vs 1 instances (p = 3, 5)"},
        {"bol", 3, "D^11 inverts the Eichler integral of Delta (exact)"},
        {"hecke-eigen", 3, "Delta|T(p) = tau(p) Delta for p = 2, 3, 5"},
        {"hensel-roots", 3, "quadratic root split for tau(3) = 252"},
        {"hensel-roots-5", 5, "quadratic root split for tau(5) = 4830"},
        {"hensel-roots-7", 7, "quadratic root split for tau(7) = -16744"},
        {"ring-oracle", 3, "rational vs p-adic pipeline agreement mod 27"},
        {"depth-agreement", 3, "depth-3 vs depth-4 assembly mod 27"},
        {"hol-approx-l1", 3, "holomorphic completion ledger and match, l=1"},
        {"hol-approx-l2", 3, "holomorphic completion ledger and match, l=2"},
        {"thm-1-2-deep", 3, "weak identity times E_{4,3}^237 mod 27"},
    };
    return entries;
}

bool CheckSuite::known(const std::string& id) {
    for (const auto& e : registry())
        if (e.id == id) return true;
    return false;
}

CongruenceReport CheckSuite::run(const std::string& id) {
    const auto start = std::chrono::steady_clock::now();
    std::unique_lock<std::recursive_mutex> lock(impl_->mu);
    auto rep = impl_->run_one(id);
    rep.wall_time_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    return rep;
}

std::vector<CongruenceReport> CheckSuite::run_suite(long p, bool parallel) {
    std::vector<std::string> ids;
    for (const auto& e : registry())
        if (e.p == p) ids.push_back(e.id);
    std::vector<CongruenceReport> out(ids.size());
    if (!parallel) {
        for (std::size_t i = 0; i < ids.size(); ++i) out[i] = run(ids[i]);
        return out;
    }
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex err_mu;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        pool.emplace_back([&, i] {
            try {
                out[i] = run(ids[i]);
            } catch (...) {
                std::lock_guard<std::mutex> g(err_mu);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

std::string reports_to_json(const std::vector<CongruenceReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& rep : reports) {
        nlohmann::ordered_json j;
        j["check"] = rep.check_id;
        j["p"] = rep.p;
        j["modPower"] = rep.mod_power;
        j["window"] = {rep.lo, rep.hi};
        j["compared"] = rep.compared;
        j["pass"] = rep.pass;
        if (rep.first_mismatch) {
            j["firstMismatch"] = {{"exp", rep.first_mismatch->exponent},
                                  {"ord", rep.first_mismatch->ord}};
        } else {
            j["firstMismatch"] = nullptr;
        }
        j["wallTimeMs"] = rep.wall_time_ms;
        j["precision"] = rep.precision;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

void write_report_file(const std::vector<CongruenceReport>& reports,
                       const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw CacheError("cannot open report file " + path);
    out << reports_to_json(reports);
    if (!out.flush()) throw CacheError("failed writing report file " + path);
}

std::string report_summary_line(const CongruenceReport& rep) {
    std::ostringstream os;
    os << (rep.pass ? "PASS" : "FAIL") << " " << rep.check_id;
    if (rep.mod_power > 0)
        os << " mod " << (rep.p > 0 ? std::to_string(rep.p) : "p") << "^"
           << rep.mod_power;
    os << " on [" << rep.lo << "," << rep.hi << ") compared=" << rep.compared;
    if (rep.first_mismatch)
        os << " first-mismatch exp=" << rep.first_mismatch->exponent
           << " ord=" << rep.first_mismatch->ord;
    os << " (" << static_cast<long>(rep.wall_time_ms) << " ms)";
    if (!rep.note.empty()) os << " -- " << rep.note;
    return os.str();
}

} // namespace mockmod
