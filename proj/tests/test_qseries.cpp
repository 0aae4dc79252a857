#include <catch2/catch_amalgamated.hpp>

#include "qcong/cyclotomic.hpp"
#include "qcong/qseries.hpp"
#include "support/naive_qseries.hpp"
#include "support/test_rng.hpp"

using namespace qcong;
using qcong::testsupport::naive_central_sum;
using qcong::testsupport::naive_phi_sum;
using qcong::testsupport::naive_pochhammer;
using qcong::testsupport::Rng;

namespace {
const Polynomial q = Polynomial::variable();
const Polynomial q2 = Polynomial::monomial(Rat(1), 2);
const Polynomial q4 = Polynomial::monomial(Rat(1), 4);

RationalFunction rf(const Polynomial& p) { return RationalFunction{p}; }
RationalFunction one() { return RationalFunction{Polynomial(1)}; }
}  // namespace

TEST_CASE("q_pochhammer basics") {
    CHECK(q_pochhammer(rf(q), q2, 0) == one());
    CHECK(q_pochhammer(rf(q), q2, 2) ==
          rf((Polynomial(1) - q) * (Polynomial(1) - Polynomial::monomial(Rat(1), 3))));
    // (q^2;q^4)_1 / (q^4;q^4)_1 = 1/(1+q^2) after cancellation
    CHECK(q_pochhammer(rf(q2), q4, 1) / q_pochhammer(rf(q4), q4, 1) ==
          RationalFunction::make(Polynomial(1), Polynomial(1) + q2));
}

TEST_CASE("q_pochhammer recurrence") {
    Rng rng(711);
    for (int i = 0; i < 12; ++i) {
        RationalFunction x{Polynomial::monomial(rng.rat(9), rng.below(3))};
        const Polynomial& base = (i % 2) ? q2 : q;
        unsigned n = static_cast<unsigned>(rng.below(30));
        RationalFunction lhs = q_pochhammer(x, base, n + 1);
        RationalFunction rhs =
            q_pochhammer(x, base, n) * (one() - x * rf(base.pow(n)));
        CHECK(lhs == rhs);
        CHECK(q_pochhammer(x, base, n) == naive_pochhammer(x, base, n));
    }
}

TEST_CASE("q_integer") {
    CHECK(q_integer(1) == one());
    CHECK(q_integer(3) == rf(Polynomial::from_coeffs({Rat(1), Rat(1), Rat(1)})));
    CHECK(q_integer(4) * rf(Polynomial(1) - q) == rf(Polynomial(1) - q4));
    for (unsigned n = 1; n <= 100; ++n)
        CHECK(q_integer(n) * rf(Polynomial(1) - q) ==
              rf(Polynomial(1) - Polynomial::monomial(Rat(1), n)));
}

TEST_CASE("phi_series") {
    PhiSeriesSpec trivial;
    trivial.upper = {rf(Polynomial(make_rat(1, 2)))};
    trivial.lower = {rf(Polynomial(make_rat(1, 3)))};
    trivial.base = q;
    trivial.argument = rf(q);
    trivial.truncation = 0;
    CHECK(phi_series(trivial) == one());

    // the n = 1 instance of the specialized 4phi3: upper parameter q^0 = 1
    // terminates the series immediately
    PhiSeriesSpec aa1;
    aa1.upper = {one(), rf(q2), rf(Polynomial(make_rat(1, 2))), rf(Polynomial(make_rat(-1, 2)))};
    aa1.lower = {rf(q2) * Rat(-1), rf(Polynomial(make_rat(1, 4)))};
    aa1.base = q2;
    aa1.argument = rf(q2);
    aa1.truncation = 0;
    CHECK(phi_series(aa1) == one());

    // against the independent summation route, including q^{-n} parameters
    Rng rng(722);
    for (int i = 0; i < 6; ++i) {
        PhiSeriesSpec spec;
        spec.upper = {q_mon(-3), rf(Polynomial::monomial(rng.rat(5), 1))};
        spec.lower = {rf(Polynomial(rng.rat(5) + Rat(2)))};
        spec.base = q;
        spec.argument = rf(Polynomial::monomial(rng.rat(5), 1));
        spec.truncation = static_cast<unsigned>(2 + rng.below(4));
        CHECK(phi_series(spec) ==
              naive_phi_sum(spec.upper, spec.lower, spec.base, spec.argument, spec.truncation));
    }

    // a lower parameter of exactly 1 kills every term denominator from k=1 on
    PhiSeriesSpec bad = trivial;
    bad.lower = {one()};
    bad.truncation = 2;
    CHECK_THROWS_AS(phi_series(bad), ZeroTermDenominator);
}

TEST_CASE("whipple identities at small parameters") {
    {
        auto [lhs, rhs] = whipple_a_sides(0, Rat(2), Rat(3));
        CHECK(lhs == one());
        CHECK(rhs == one());
    }
    {
        auto [lhs, rhs] = whipple_a_sides(1, Rat(2), Rat(3));
        CHECK(lhs == rhs);
        // independent expansion of the 2-term sum
        std::vector<RationalFunction> upper = {q_mon(-1), rf(q2), rf(Polynomial(2)),
                                               rf(Polynomial(-2))};
        std::vector<RationalFunction> lower = {rf(-q), rf(Polynomial(3)),
                                               rf(Polynomial::monomial(make_rat(4, 3), 1))};
        CHECK(lhs == naive_phi_sum(upper, lower, q, rf(q), 1));
    }
    {
        auto [lhs, rhs] = whipple_a_sides(3, make_rat(5, 2), Rat(-7));
        CHECK(lhs == rhs);
    }
    {
        auto [lhs, rhs] = whipple_b_sides(0, Rat(2), Rat(3));
        CHECK(lhs == one());
        CHECK(rhs == one());
    }
    {
        auto [lhs, rhs] = whipple_b_sides(1, Rat(2), Rat(3));
        CHECK(lhs == rhs);
        std::vector<RationalFunction> upper = {rf(Polynomial(2)), rf(q) * make_rat(1, 2),
                                               q_mon(-1), q_mon(-1) * Rat(-1)};
        std::vector<RationalFunction> lower = {rf(Polynomial(3)), q_mon(-1) * make_rat(1, 3),
                                               rf(-q)};
        CHECK(lhs == naive_phi_sum(upper, lower, q, rf(q), 1));
    }
    {
        auto [lhs, rhs] = whipple_b_sides(2, Rat(-3), make_rat(1, 2));
        CHECK(lhs == rhs);
    }
    CHECK_THROWS_AS(whipple_a_sides(2, Rat(0), Rat(3)), DegenerateParameters);
    CHECK_THROWS_AS(whipple_b_sides(2, Rat(2), Rat(0)), DegenerateParameters);
}

TEST_CASE("whipple identities on seeded random parameters") {
    Rng rng(733);
    for (unsigned n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 3; ++trial) {
            Rat b = rng.rat(9), c = rng.rat(9);
            while (c == 1) c = rng.rat(9);
            auto a_sides = whipple_a_sides(n, b, c);
            CHECK(a_sides.lhs == a_sides.rhs);
            Rat a = rng.rat(9);
            auto b_sides = whipple_b_sides(n, a, c);
            CHECK(b_sides.lhs == b_sides.rhs);
        }
    }
}

TEST_CASE("central_q_sum") {
    CHECK(central_q_sum(1) == one());
    // 1 + (1-q)^2 q^2 / ((1-q^2)(1-q^4))
    RationalFunction expected =
        one() + RationalFunction::make((Polynomial(1) - q).pow(2) * q2,
                                       (Polynomial(1) - q2) * (Polynomial(1) - q4));
    CHECK(central_q_sum(3) == expected);
    CHECK(central_q_sum(5) == naive_central_sum(5));
    CHECK(central_q_sum(9) == naive_central_sum(9));
    CHECK_THROWS_AS(central_q_sum(4), WrongResidueClass);
}

TEST_CASE("central_q_sum denominator coprime to Phi_n") {
    for (unsigned n = 1; n <= 101; n += 2) {
        RationalFunction s = central_q_sum(n);
        CHECK(poly_gcd(s.denominator(), cyclotomic(n)).is_one());
    }
}

TEST_CASE("thm1_rhs") {
    CHECK(thm1_rhs(1) == one());
    {
        QExpression five = q_integer(5);
        QExpression two = q_integer(2);
        RationalFunction expected =
            rf(q2) * RationalFunction::make((Polynomial(1) - q2).pow(2),
                                            (Polynomial(1) - q4).pow(2)) *
            (one() + Rat(2) * five * five * rf(q2) / (two * two));
        CHECK(thm1_rhs(5) == expected);
    }
    {
        // n = 9: evaluate both the builder and a from-scratch reconstruction
        // at q = 2/3 and compare exact values.
        Rat q0 = make_rat(2, 3);
        Rat direct = thm1_rhs(9).evaluate(q0);
        auto qp = [&](long e) { return rat_pow(q0, e); };
        auto brk = [&](unsigned j) {  // [j] at q0
            Rat acc(0);
            for (unsigned i = 0; i < j; ++i) acc += qp(i);
            return acc;
        };
        Rat p2 = (1 - qp(2)) * (1 - qp(6));
        Rat p4 = (1 - qp(4)) * (1 - qp(8));
        Rat inner = qp(2) / (brk(2) * brk(2)) + qp(6) / (brk(6) * brk(6));
        Rat expected = qp(4) * (p2 * p2) / (p4 * p4) * (1 + 2 * brk(9) * brk(9) * inner);
        CHECK(direct == expected);
    }
    CHECK_THROWS_AS(thm1_rhs(3), WrongResidueClass);
}

TEST_CASE("guo closed forms") {
    CHECK(guo_a_rhs(3).is_zero());
    CHECK(guo_a_rhs(5) ==
          RationalFunction::make((Polynomial(1) - q2).pow(2), (Polynomial(1) - q4).pow(2)));
    CHECK(guo_b_rhs(3) ==
          q_integer(3) * RationalFunction::make(Polynomial(1) - Polynomial::monomial(Rat(1), 3),
                                                Polynomial(1) - Polynomial::monomial(Rat(1), 5)));
    CHECK_THROWS_AS(guo_a_rhs(4), WrongResidueClass);
    CHECK_THROWS_AS(guo_b_rhs(5), WrongResidueClass);
}

TEST_CASE("thm2_lhs") {
    CHECK(thm2_lhs(1, Rat(2), Rat(3)) == one());
    for (auto [n, a, b] : {std::tuple<unsigned, Rat, Rat>{3, Rat(2), Rat(3)},
                           {5, make_rat(-5, 3), make_rat(7, 2)}}) {
        std::vector<RationalFunction> upper = {rf(Polynomial::monomial(a, 1)),
                                               rf(Polynomial::monomial(Rat(1) / a, 1)),
                                               rf(Polynomial::monomial(Rat(1) / b, 1)),
                                               rf(Polynomial::monomial(-Rat(1) / b, 1))};
        std::vector<RationalFunction> lower = {rf(q2), rf(-q2),
                                               rf(Polynomial::monomial(Rat(1) / (b * b), 2))};
        CHECK(thm2_lhs(n, a, b) == naive_phi_sum(upper, lower, q2, rf(q2), (n - 1) / 2));
    }
    CHECK_THROWS_AS(thm2_lhs(5, Rat(0), Rat(3)), DegenerateParameters);
}

TEST_CASE("thm2_omega collapses to 1 at n = 1") {
    Rng rng(744);
    for (int i = 0; i < 5; ++i) {
        Rat a = rng.rat(9), b = rng.rat(9);
        if (a == b || a * b == 1) continue;
        CHECK(thm2_omega(1, a, b) == one());
    }
    CHECK_THROWS_AS(thm2_omega(5, Rat(2), Rat(2)), DegenerateParameters);
    CHECK_THROWS_AS(thm2_omega(5, Rat(2), make_rat(1, 2)), DegenerateParameters);
}

TEST_CASE("generic whipple instances reproduce the two closed forms") {
    // The two-parameter sum at a -> q^{+-n} is a base-q^2 Whipple-a instance
    // with b -> q/b, c -> q^2/b^2; at b -> q^n it is a base-q^2 Whipple-b
    // instance with a -> aq, c -> q^2. Both identities must hold exactly and
    // their right sides must simplify to the displayed closed forms.
    Rng rng(755);
    for (unsigned n : {5u, 9u}) {
        Rat b = rng.rat(7);
        RationalFunction qb = rf(Polynomial::monomial(Rat(1) / b, 1));  // q/b
        RationalFunction c = rf(Polynomial::monomial(Rat(1) / (b * b), 2));
        auto sides = whipple_a_sides_general(q2, (n - 1) / 2, qb, c);
        CHECK(sides.lhs == sides.rhs);
        CHECK(sides.rhs == wei_bb_rhs(n, b));

        Rat a = rng.rat(7);
        auto sides_b =
            whipple_b_sides_general(q2, (n - 1) / 2, rf(Polynomial::monomial(a, 1)), rf(q2));
        CHECK(sides_b.lhs == sides_b.rhs);
        CHECK(sides_b.rhs == wei_cc_rhs(n, a));
    }
}

TEST_CASE("factorization and wei_dd closed forms at n = 1") {
    for (unsigned which : {1u, 2u, 3u}) {
        auto [lhs, rhs] = factorization_sides(which, 1, Rat(2), Rat(3));
        CHECK(lhs == one());
        CHECK(rhs == one());
    }
    CHECK(wei_dd_lhs(1, Rat(2)) == one());
    CHECK(wei_dd_rhs(1, Rat(2)) == one());
    CHECK_THROWS_AS(wei_dd_rhs(5, Rat(1)), DegenerateParameters);
}
