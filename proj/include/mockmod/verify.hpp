#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mockmod/cache.hpp"
#include "mockmod/padlimit.hpp"

namespace mockmod {

// Sturm-style sufficiency bound for level Gamma_0(p): a holomorphic form of
// the given weight vanishes iff its first ceil(weight*(p+1)/12) coefficients
// do, and two forms agree mod p^m iff those coefficients do.
long sturm_bound_gamma0(long weight, long p);

// Coefficient budget certifying congruences against the weight
// 2 + k*(p^{ell+2} + p^{ell+1}) holomorphic completions that clear the
// pole of R_p|U_{p^ell} at the cusp 0:
//   ceil((p+1)/6 + k*(p^{ell+2} + p^{ell+1})/12).
long lemma_bound(int k, long p, long ell);

// Pole order of R_p|U_{p^ell} at the cusp 0, in q^{1/p} units: p^{ell+2}.
long pole_order_bound(long p, long ell);

struct Mismatch {
    long exponent = 0;
    // ord_p(lhs - rhs): how deep the failed congruence actually holds.
    long ord = 0;
};

struct CongruenceReport {
    std::string check_id;
    long p = 0;         // 0 when the check is exact / prime-free
    long mod_power = 0; // 0 when the check is exact equality
    long lo = 0, hi = 0;
    long compared = 0;
    bool pass = false;
    std::optional<Mismatch> first_mismatch;
    double wall_time_ms = 0.0;
    long precision = 0; // p-adic mantissa digits in play; 0 when rational
    std::string note;   // human detail for the stdout summary
};

// Compare lhs == rhs mod p^m on [lo, hi).  Window shortfalls surface as
// WindowError and p-adic precision shortfalls as PrecisionError -- a
// congruence is never silently narrowed.
template <class RingL, class RingR>
CongruenceReport check_congruence(const std::string& id,
                                  const Series<RingL>& lhs,
                                  const Series<RingR>& rhs, long p, long m,
                                  long lo, long hi) {
    const auto start = std::chrono::steady_clock::now();
    CongruenceReport rep;
    rep.check_id = id;
    rep.p = p;
    rep.mod_power = m;
    rep.lo = lo;
    rep.hi = hi;
    rep.compared = hi - lo;
    auto bad = first_incongruence(lhs, rhs, p, m, lo, hi);
    rep.pass = !bad.has_value();
    if (bad) {
        Mismatch mm;
        mm.exponent = *bad;
        long ord = 0;
        while (ord < m && !first_incongruence(lhs, rhs, p, ord + 1, *bad,
                                              *bad + 1)
                               .has_value())
            ++ord;
        mm.ord = ord;
        rep.first_mismatch = mm;
    }
    rep.wall_time_ms =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - start)
            .count();
    return rep;
}

// Exact coefficient-wise equality on [lo, hi) (ring equality, no modulus).
template <class Ring>
CongruenceReport check_exact(const std::string& id, const Series<Ring>& lhs,
                             const Series<Ring>& rhs, long lo, long hi) {
    const auto start = std::chrono::steady_clock::now();
    CongruenceReport rep;
    rep.check_id = id;
    rep.lo = lo;
    rep.hi = hi;
    rep.compared = hi - lo;
    rep.pass = true;
    for (long n = lo; n < hi; ++n) {
        if (!(lhs.at(n) == rhs.at(n))) {
            rep.pass = false;
            Mismatch mm;
            mm.exponent = n;
            mm.ord = 0;
            rep.first_mismatch = mm;
            break;
        }
    }
    rep.wall_time_ms =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - start)
            .count();
    return rep;
}

struct CheckOptions {
    long precision = 24;     // p-adic mantissa digits
    long terms = 0;          // 0 = each check's default window
    long mod_power = 0;      // 0 = each check's default modulus exponent
    std::string cache_dir;   // empty = no disk cache
    int threads = 1;
};

// Named end-to-end checks.  Expensive building blocks (the weight -10
// eigenform window above all) are memoized per suite instance and shared
// across checks; with a cache_dir they also persist across processes.
class CheckSuite {
public:
    explicit CheckSuite(CheckOptions opt);
    ~CheckSuite();

    struct Entry {
        std::string id;
        long p;             // suite grouping: report --p selects on this
        std::string brief;  // one-line description
    };
    static const std::vector<Entry>& registry();
    static bool known(const std::string& id);

    CongruenceReport run(const std::string& id);
    std::vector<CongruenceReport> run_suite(long p, bool parallel = false);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// JSON lines for the pinned report schema, in registry order:
//   {check, p, modPower, window, compared, pass, firstMismatch, wallTimeMs,
//    precision}
std::string reports_to_json(const std::vector<CongruenceReport>& reports);
void write_report_file(const std::vector<CongruenceReport>& reports,
                       const std::string& path);
std::string report_summary_line(const CongruenceReport& rep);

} // namespace mockmod
