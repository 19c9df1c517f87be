#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mockmod/rings.hpp"

using namespace mockmod;

TEST_CASE("rational valuations") {
    CHECK(ord_p(Rat(252), 3) == 2);
    CHECK(ord_p(Rat(1) / 2187, 3) == -7);
    CHECK(ord_p(Rat(0), 3) == kOrdInfinity);
    CHECK(ord_p(Rat(10) / 9, 3) == -2);
    CHECK(ord_p(Rat(10) / 9, 5) == 1);
    CHECK_THROWS_AS(ord_p(Rat(3), 1), DomainError);
}

TEST_CASE("valuation is additive and subadditive") {
    const Rat xs[] = {Rat(252), Rat(1) / 2187, Rat(-45), Rat(7) / 12};
    for (const Rat& x : xs) {
        for (const Rat& y : xs) {
            CHECK(ord_p(x * y, 3) == ord_p(x, 3) + ord_p(y, 3));
            if (x + y != 0)
                CHECK(ord_p(x + y, 3) >=
                      std::min(ord_p(x, 3), ord_p(y, 3)));
        }
    }
}

TEST_CASE("pow table rejects non-odd-prime bases and caps precision") {
    CHECK_THROWS_AS(padic_pow_table(2), DomainError);
    CHECK_THROWS_AS(padic_pow_table(4), DomainError);
    CHECK_THROWS_AS(padic_pow_table(9), DomainError);
    CHECK_THROWS_AS(padic_pow_table(1), DomainError);
    CHECK(padic_max_prec(3) == 39);
    CHECK(padic_max_prec(5) == 26);
    CHECK(padic_max_prec(7) == 22);
    CHECK_THROWS_AS(PadicRing(3, 40), PrecisionError);
    CHECK_THROWS_AS(PadicRing(3, 0), PrecisionError);
}

TEST_CASE("canonical construction from integers and rationals") {
    auto half = Padic::from_rational(3, Rat(1) / 2, 3);
    CHECK(half.shift() == 0);
    CHECK(half.mantissa() == 14);
    CHECK(half.mantissa_prec() == 3);

    auto nine = Padic::from_integer(3, 9, 2);
    CHECK(nine.shift() == 2);
    CHECK(nine.mantissa() == 1);

    auto third = Padic::from_rational(3, Rat(1) / 3, 4);
    CHECK(third.shift() == -1);
    CHECK(third.mantissa() == 1);

    auto v252 = Padic::from_integer(3, 252, 6);
    CHECK(v252.shift() == 2);
    CHECK(v252.mantissa() == 28);
    CHECK(v252.abs_prec() == 8);

    auto neg = Padic::from_integer(3, -1, 2);
    CHECK(neg.shift() == 0);
    CHECK(neg.mantissa() == 8); // -1 mod 9

    auto sixth = Padic::from_rational(3, Rat(1) / 6, 4);
    CHECK(sixth.shift() == -1);
    CHECK(sixth.mantissa() == 41); // inverse of 2 mod 81
}

TEST_CASE("absolute-precision targeted construction") {
    CHECK(Padic::from_rational_abs(3, Rat(1) / 2, 3) ==
          Padic::from_rational(3, Rat(1) / 2, 3));
    auto z = Padic::from_rational_abs(3, Rat(9), 2);
    CHECK(z.is_zero());
    CHECK(!z.is_exact_zero());
    CHECK(z.abs_prec() == 2);
    auto deep = Padic::from_rational_abs(3, Rat(9), 5);
    CHECK(deep.shift() == 2);
    CHECK(deep.mantissa_prec() == 3);
}

TEST_CASE("zeros: exact vs information-limited") {
    auto ez = Padic::exact_zero(3);
    CHECK(ez.is_exact_zero());
    CHECK(ez.ord_lower_bound() >= kPrecInf);

    auto lz = Padic::limited_zero(3, 4);
    CHECK(lz.is_zero());
    CHECK(!lz.is_exact_zero());
    CHECK(lz.abs_prec() == 4);
    CHECK(lz.ord_lower_bound() == 4);
    CHECK_THROWS_AS(Padic::limited_zero(3, 0), PrecisionError);

    auto one = Padic::from_integer(3, 1, 10);
    CHECK(ez + one == one);              // exact zero never caps precision
    auto capped = lz + one;
    CHECK(capped.mantissa() == 1);
    CHECK(capped.abs_prec() == 4);       // limited zero does
}

TEST_CASE("addition re-derives the valuation after cancellation") {
    auto a = Padic::from_integer(3, 9, 6);
    auto b = Padic::from_integer(3, 243, 6);
    CHECK(a + b == Padic::from_integer(3, 252, 6));

    auto x = Padic::from_integer(3, 82, 4);
    auto y = Padic::from_integer(3, 1, 4);
    auto diff = x - y; // 81 = 3^4 is invisible at absolute precision 4
    CHECK(diff.is_zero());
    CHECK(diff.abs_prec() == 4);

    auto partial = Padic::from_integer(3, 82, 6) - Padic::from_integer(3, 1, 6);
    CHECK(partial.shift() == 4);
    CHECK(partial.mantissa() == 1);
    CHECK(partial.mantissa_prec() == 2); // absolute precision 6 preserved
}

TEST_CASE("multiplication and division") {
    auto a = Padic::from_integer(3, 252, 8);
    auto b = Padic::from_integer(3, 9, 8);
    auto q = a / b;
    CHECK(q.shift() == 0);
    CHECK(q.mantissa() == 28);
    CHECK(q.mantissa_prec() == 8);
    CHECK(q * b == Padic::from_integer(3, 252, 8));

    auto prod = Padic::from_rational(3, Rat(1) / 2, 8) *
                Padic::from_integer(3, 2, 8);
    CHECK(prod == Padic::from_integer(3, 1, 8));

    CHECK_THROWS_AS(a / Padic::exact_zero(3), DomainError);
    CHECK_THROWS_AS(a / Padic::limited_zero(3, 5), PrecisionError);
    CHECK((Padic::limited_zero(3, 7) * a).ord_lower_bound() == 9);
}

TEST_CASE("residues") {
    CHECK(Padic::from_rational(3, Rat(1) / 2, 5).residue(3) == 14);
    CHECK(Padic::from_integer(3, 252, 6).residue(2) == 0);
    CHECK(Padic::from_integer(3, 252, 6).residue(5) == 252 % 243);
    CHECK(Padic::exact_zero(3).residue(30) == 0);
    CHECK_THROWS_AS(Padic::from_rational(3, Rat(1) / 3, 4).residue(2),
                    DomainError);
    CHECK_THROWS_AS(Padic::from_integer(3, 1, 2).residue(5), PrecisionError);
}

TEST_CASE("congruences demand certified precision") {
    auto a = Padic::from_integer(3, 5, 2);
    auto b = Padic::from_integer(3, 14, 2);
    CHECK(a.congruent(b, 2));
    CHECK(!a.congruent(Padic::from_integer(3, 6, 2), 1));
    CHECK_THROWS_AS(a.congruent(b, 3), PrecisionError);
    CHECK_THROWS_AS(a.congruent(Padic::from_integer(5, 5, 2), 2), DomainError);
}

TEST_CASE("encode/decode round-trips") {
    auto a = Padic::from_integer(3, 252, 4);
    CHECK(a.encode() == "2:28:4");
    CHECK(Padic::decode(3, a.encode()) == a);

    auto z = Padic::exact_zero(3);
    CHECK(z.encode() == "0:0:0");
    CHECK(Padic::decode(3, "0:0:0").is_exact_zero());

    auto lz = Padic::limited_zero(3, 6);
    CHECK(Padic::decode(3, lz.encode()) == lz);

    auto neg_shift = Padic::from_rational(3, Rat(5) / 27, 7);
    CHECK(Padic::decode(3, neg_shift.encode()) == neg_shift);

    CHECK_THROWS_AS(Padic::decode(3, "banana"), DomainError);
    CHECK_THROWS_AS(Padic::decode(3, "1:2"), DomainError);
    CHECK_THROWS_AS(Padic::decode(3, "1:-2:4"), DomainError);
}

TEST_CASE("powers") {
    auto two = Padic::from_integer(3, 2, 6);
    CHECK(two.pow(2) == Padic::from_integer(3, 4, 6));
    CHECK(two.pow(5) == Padic::from_integer(3, 32, 6));
    auto one = two.pow(0);
    CHECK(one.shift() == 0);
    CHECK(one.mantissa() == 1);
    auto nine = Padic::from_integer(3, 9, 6);
    CHECK(nine.pow(3).shift() == 6);
}

TEST_CASE("ring interface round trip against rational arithmetic") {
    PadicRing ring(3, 12);
    RationalRing rr;
    const Rat xs[] = {Rat(252), Rat(-7) / 4, Rat(9), Rat(1) / 2, Rat(5) / 27};
    for (const Rat& x : xs) {
        for (const Rat& y : xs) {
            auto px = ring.from_rat(x), py = ring.from_rat(y);
            CHECK(ring.add(px, py)
                      .congruent(ring.from_rat(x + y),
                                 ring.add(px, py).abs_prec()));
            CHECK(ring.mul(px, py) == ring.from_rat(x * y));
        }
    }
    CHECK(rr.congruent(Rat(5), Rat(14), 3, 2));
    CHECK(!rr.congruent(Rat(5), Rat(15), 3, 2));
    CHECK(rr.reduce(Rat(1) / 2, 3, 3) == Rat(14));
    CHECK_THROWS_AS(rr.reduce(Rat(1) / 3, 3, 3), DomainError);
}

TEST_CASE("quadratic root splitting for the weight-12 eigenvalues") {
    auto pr3 = hensel_quadratic_roots(252, 3, 12, 20);
    CHECK(pr3.v == 2);
    CHECK(pr3.beta.shift() == 2);
    CHECK(pr3.beta_prime.shift() == 9);
    PadicRing r3(3, 20);
    CHECK(r3.add(pr3.beta, pr3.beta_prime)
              .congruent(r3.from_int(252), 20));
    CHECK(r3.mul(pr3.beta, pr3.beta_prime)
              .congruent(r3.from_mpz(pow_z(3, 11)), 20));
    CHECK(pr3.beta.residue(9) == 252);

    auto pr5 = hensel_quadratic_roots(4830, 5, 12, 10);
    CHECK(pr5.v == 1);
    CHECK(pr5.beta.shift() == 1);
    CHECK(pr5.beta_prime.shift() == 10);
    PadicRing r5(5, 10);
    CHECK(r5.add(pr5.beta, pr5.beta_prime).congruent(r5.from_int(4830), 10));
    CHECK(r5.mul(pr5.beta, pr5.beta_prime)
              .congruent(r5.from_mpz(pow_z(5, 11)), 10));

    auto pr7 = hensel_quadratic_roots(-16744, 7, 12, 10);
    CHECK(pr7.v == 1);
    CHECK(pr7.beta.shift() == 1);
    CHECK(pr7.beta_prime.shift() == 10);
    PadicRing r7(7, 10);
    CHECK(r7.add(pr7.beta, pr7.beta_prime).congruent(r7.from_int(-16744), 10));
    CHECK(r7.mul(pr7.beta, pr7.beta_prime)
              .congruent(r7.from_mpz(pow_z(7, 11)), 10));
}

TEST_CASE("root splitting rejects unusable inputs") {
    CHECK_THROWS_AS(hensel_quadratic_roots(252, 2, 12, 20), DomainError);
    CHECK_THROWS_AS(hensel_quadratic_roots(9, 3, 4, 10), DomainError);
    CHECK_THROWS_AS(hensel_quadratic_roots(5, 3, 12, 10), DomainError);
    CHECK_THROWS_AS(hensel_quadratic_roots(0, 3, 12, 10), DomainError);
    CHECK_THROWS_AS(hensel_quadratic_roots(252, 3, 12, 7), PrecisionError);
    CHECK_THROWS_AS(hensel_quadratic_roots(252, 3, 12, 0), PrecisionError);
}

TEST_CASE("root lifting is consistent across precisions") {
    auto lo = hensel_quadratic_roots(252, 3, 12, 10);
    auto hi = hensel_quadratic_roots(252, 3, 12, 20);
    CHECK(hi.beta.congruent(lo.beta, lo.beta.abs_prec()));
    CHECK(hi.beta_prime.congruent(lo.beta_prime, 10));
}
