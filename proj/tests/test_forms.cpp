#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mockmod/forms.hpp"

using namespace mockmod;

namespace {
const RationalRing rr;
}

TEST_CASE("Bernoulli numbers") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == Rat(-1) / 2);
    CHECK(bernoulli(2) == Rat(1) / 6);
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(4) == Rat(-1) / 30);
    CHECK(bernoulli(12) == Rat(-691) / 2730);
    CHECK(bernoulli(14) == Rat(7) / 6);
    CHECK_THROWS_AS(bernoulli_table(-1), DomainError);
}

TEST_CASE("divisor sums") {
    CHECK(sigma(1, 5) == 1);
    CHECK(sigma(6, 1) == 12);
    CHECK(sigma(2, 3) == 9);
    CHECK(sigma(12, 0) == 6);
    CHECK_THROWS_AS(sigma(0, 1), DomainError);
    auto table = sigma_table(5, 50);
    for (long n = 1; n < 50; ++n) CHECK(table[n] == sigma(n, 5));
}

TEST_CASE("sparse eta powers") {
    auto penta = eta_power_q(1, 16);
    const long expect1[] = {1, -1, -1, 0, 0, 1, 0, 1,
                            0, 0, 0, 0, -1, 0, 0, -1};
    for (int n = 0; n < 16; ++n) CHECK(penta[n] == expect1[n]);

    auto cube = eta_power_q(3, 11);
    const long expect3[] = {1, -3, 0, 5, 0, 0, -7, 0, 0, 0, 9};
    for (int n = 0; n < 11; ++n) CHECK(cube[n] == expect3[n]);

    CHECK_THROWS_AS(eta_power_q(2, 10), DomainError);
}

TEST_CASE("Eisenstein expansions") {
    auto e2 = eisenstein(rr, 2, 4);
    CHECK(e2.at(0) == 1);
    CHECK(e2.at(1) == -24);
    CHECK(e2.at(2) == -72);
    CHECK(e2.at(3) == -96);

    auto e4 = eisenstein(rr, 4, 3);
    CHECK(e4.at(1) == 240);
    CHECK(e4.at(2) == 2160);

    CHECK(eisenstein(rr, 6, 2).at(1) == -504);
    CHECK(eisenstein(rr, 14, 2).at(1) == -24);

    CHECK_THROWS_AS(eisenstein(rr, 3, 4), DomainError);
    CHECK_THROWS_AS(eisenstein(rr, 0, 4), DomainError);
}

TEST_CASE("discriminant cusp form") {
    auto dlt = delta_series(rr, 8);
    CHECK(dlt.min_exp() == 1);
    CHECK(dlt.at(1) == 1);
    CHECK(dlt.at(2) == -24);
    CHECK(dlt.at(3) == 252);
    CHECK(dlt.at(4) == -1472);
    CHECK(dlt.at(5) == 4830);
    CHECK(dlt.at(6) == -6048);
    CHECK(dlt.at(7) == -16744);
    CHECK(dlt.at(6) == dlt.at(2) * dlt.at(3)); // multiplicative at 6 = 2*3
    CHECK(ord_p(dlt.at(3), 3) == 2);
    CHECK(ord_p(dlt.at(5), 5) == 1);
    CHECK(ord_p(dlt.at(7), 7) == 1);
    CHECK_THROWS_AS(delta_series(rr, 1), WindowError);
}

TEST_CASE("modular invariant") {
    auto j = j_invariant(rr, 3);
    CHECK(j.min_exp() == -1);
    CHECK(j.at(-1) == 1);
    CHECK(j.at(0) == 744);
    CHECK(j.at(1) == 196884);
    CHECK(j.at(2) == 21493760);
}

TEST_CASE("level-p Eisenstein variants") {
    auto e43 = eisenstein_p(rr, 4, 3, 5);
    CHECK(e43.at(0) == -80);
    CHECK(e43.at(1) == 240);
    CHECK(e43.at(2) == 2160);
    CHECK(e43.at(3) == -12720); // 240*(28 - 81)
    CHECK(e43.at(4) == 240 * 73);

    auto e2t = e2_tilde(rr, 3, 5);
    CHECK(e2t.at(0) == -2);
    CHECK(e2t.at(1) == -24);
    CHECK(e2t.at(2) == -72);
    CHECK(e2t.at(3) == -24); // -96 + 3*24
    CHECK(e2t.at(4) == -168);

    CHECK_THROWS_AS(eisenstein_p(rr, 2, 3, 5), DomainError);
}

TEST_CASE("unit constant terms drop p-divisible tails") {
    // E_6 == 1 mod 9 and E_4 == E_8 == 1 mod 5 coefficientwise.
    auto e6 = eisenstein(rr, 6, 200);
    auto e4 = eisenstein(rr, 4, 200);
    auto e8 = eisenstein(rr, 8, 200);
    for (long n = 1; n < 200; ++n) {
        CHECK(ord_p(e6.at(n), 3) >= 2);
        CHECK(ord_p(e4.at(n), 5) >= 1);
        CHECK(ord_p(e8.at(n), 5) >= 1);
    }
}

TEST_CASE("level-p variants approximate powers of the level-1 forms") {
    // E_{k,p} == E_k mod p^k implies, raising to the d*p^m power,
    // agreement mod p^(k+m).
    const long window = 40;
    auto e43 = eisenstein_p(rr, 4, 3, window);
    auto e4 = eisenstein(rr, 4, window);
    for (int m = 0; m <= 1; ++m) {
        for (int d = 1; d <= 2; ++d) {
            const unsigned long e =
                static_cast<unsigned long>(d) * ((m == 0) ? 1 : 3);
            auto lhs = power(e43, e);
            auto rhs = power(e4, e);
            CHECK(!first_incongruence(lhs, rhs, 3, 4 + m, 0,
                                      lhs.prec_bound())
                       .has_value());
        }
    }
}

TEST_CASE("cube-square identity") {
    auto e4 = eisenstein(rr, 4, 60);
    auto e6 = eisenstein(rr, 6, 60);
    auto lhs = sub(power(e4, 3), power(e6, 2));
    auto rhs = scalar_mul(Rat(1728), crop(delta_series(rr, 60), 0, 60));
    CHECK(series_equal(crop(lhs, 0, 60), rhs));
}

TEST_CASE("iterated antiderivative inverts iterated differentiation") {
    auto dlt = delta_series(rr, 40);
    auto tilde = eichler_integral(dlt, -10);
    CHECK(tilde.at(1) == 1);
    CHECK(tilde.at(2) == Rat(-3) / 256); // -24 / 2^11
    CHECK(series_equal(apply_d(tilde, 11), dlt));
    CHECK_THROWS_AS(eichler_integral(crop(dlt, 0, 40), -10), DomainError);
}
