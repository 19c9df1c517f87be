#include "mockmod/forms.hpp"

#include <mutex>

namespace mockmod {

std::vector<Rat> bernoulli_table(int n) {
    if (n < 0) throw DomainError("Bernoulli index must be >= 0");
    // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j, with B_0 = 1.
    std::vector<Rat> b;
    b.reserve(static_cast<std::size_t>(n) + 1);
    b.push_back(Rat(1));
    for (int m = 1; m <= n; ++m) {
        Rat acc(0);
        mpz_class binom;
        for (int j = 0; j < m; ++j) {
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m + 1),
                         static_cast<unsigned long>(j));
            acc += Rat(binom) * b[static_cast<std::size_t>(j)];
        }
        b.push_back(-acc / Rat(m + 1));
    }
    return b;
}

Rat bernoulli(int n) {
    static std::mutex mu;
    static std::vector<Rat> table;
    std::lock_guard<std::mutex> lock(mu);
    if (n >= static_cast<int>(table.size()))
        table = bernoulli_table(std::max(n, 32));
    return table[static_cast<std::size_t>(n)];
}

mpz_class sigma(long n, int r) {
    if (n < 1) throw DomainError("sigma(n, r) needs n >= 1");
    mpz_class total(0), dr;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        mpz_ui_pow_ui(dr.get_mpz_t(), static_cast<unsigned long>(d),
                      static_cast<unsigned long>(r));
        total += dr;
        const long e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(dr.get_mpz_t(), static_cast<unsigned long>(e),
                          static_cast<unsigned long>(r));
            total += dr;
        }
    }
    return total;
}

std::vector<mpz_class> sigma_table(int r, long bound) {
    if (bound < 1) throw WindowError("sigma table needs bound >= 1");
    std::vector<mpz_class> s(static_cast<std::size_t>(bound), mpz_class(0));
    mpz_class dr;
    for (long d = 1; d < bound; ++d) {
        mpz_ui_pow_ui(dr.get_mpz_t(), static_cast<unsigned long>(d),
                      static_cast<unsigned long>(r));
        for (long m = d; m < bound; m += d)
            s[static_cast<std::size_t>(m)] += dr;
    }
    return s;
}

std::vector<mpz_class> eta_power_q(int s, long bound) {
    if (bound < 1) throw WindowError("eta power needs bound >= 1");
    std::vector<mpz_class> v(static_cast<std::size_t>(bound), mpz_class(0));
    if (s == 1) {
        // prod (1-q^n) = sum_{m in Z} (-1)^m q^{m(3m-1)/2}
        for (long m = 0;; ++m) {
            const long e1 = m * (3 * m - 1) / 2;
            const long e2 = m * (3 * m + 1) / 2;
            if (e1 >= bound && e2 >= bound) break;
            const int sign = (m % 2 == 0) ? 1 : -1;
            if (e1 < bound) v[static_cast<std::size_t>(e1)] += sign;
            if (m > 0 && e2 < bound) v[static_cast<std::size_t>(e2)] += sign;
        }
        return v;
    }
    if (s == 3) {
        // prod (1-q^n)^3 = sum_{m>=0} (-1)^m (2m+1) q^{m(m+1)/2}
        for (long m = 0;; ++m) {
            const long e = m * (m + 1) / 2;
            if (e >= bound) break;
            const long c = (m % 2 == 0) ? (2 * m + 1) : -(2 * m + 1);
            v[static_cast<std::size_t>(e)] += c;
        }
        return v;
    }
    throw DomainError("only eta powers 1 and 3 have sparse expansions here");
}

QSeries eichler_integral(const QSeries& g, long kappa) {
    if (g.min_exp() < 1)
        throw DomainError("Eichler integral needs a cusp form (window from 1)");
    auto out = QSeries::zeros(g.ring(), g.min_exp(), g.prec_bound());
    for (long n = g.min_exp(); n < g.prec_bound(); ++n) {
        mpz_class nk;
        mpz_ui_pow_ui(nk.get_mpz_t(), static_cast<unsigned long>(n),
                      static_cast<unsigned long>(1 - kappa));
        out.mut(n) = g.at(n) / Rat(nk);
    }
    return out;
}

} // namespace mockmod
