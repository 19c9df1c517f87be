#include "mockmod/rational.hpp"

#include "mockmod/errors.hpp"

namespace mockmod {

long ord_p(const mpz_class& n, long p) {
    if (p < 2) throw DomainError("ord_p: base must be >= 2");
    if (n == 0) return kOrdInfinity;
    mpz_class quotient;
    const mpz_class base(p);
    // mpz_remove strips every factor of p and reports how many it removed.
    return static_cast<long>(
        mpz_remove(quotient.get_mpz_t(), n.get_mpz_t(), base.get_mpz_t()));
}

long ord_p(const Rat& x, long p) {
    if (x == 0) return kOrdInfinity;
    return ord_p(x.get_num(), p) - ord_p(x.get_den(), p);
}

mpz_class pow_z(long p, unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), e);
    return r;
}

bool is_small_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::string encode_rat(const Rat& x) {
    return x.get_str(); // "num" or "num/den", canonical form
}

Rat decode_rat(const std::string& text) {
    Rat x;
    if (x.set_str(text, 10) != 0)
        throw DomainError("malformed rational: \"" + text + "\"");
    if (x.get_den() == 0) throw DomainError("rational with zero denominator");
    x.canonicalize();
    return x;
}

} // namespace mockmod
