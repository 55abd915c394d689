#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gammaflow/bernoulli.hpp"
#include "gammaflow/conditions.hpp"
#include "gammaflow/cumulants.hpp"
#include "gammaflow/rn_table.hpp"

using namespace gammaflow;

namespace {

/* Independent Bernoulli oracle: the Akiyama-Tanigawa in-place scheme. It
 * produces the B_1 = +1/2 convention, so order 1 is excluded from the
 * comparison. */
Rational bernoulli_at(int n) {
    std::vector<Rational> row(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        row[static_cast<std::size_t>(m)] = Rational(1, m + 1);
        for (int j = m; j >= 1; --j) {
            row[static_cast<std::size_t>(j - 1)] =
                Rational(j) * (row[static_cast<std::size_t>(j - 1)] -
                               row[static_cast<std::size_t>(j)]);
        }
    }
    return row[0];
}

CumulantSeq mu_half(int max_order) {
    return cumulants_discrete_symmetric({{Rational(2), Rational(1, 4)}}, max_order);
}

}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == Rational(0));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    CHECK(bernoulli(30) == make_rational(BigInt("8615841276005"), BigInt(14322)));
    for (int n = 5; n <= 39; n += 2) CHECK(bernoulli(n) == 0);
    for (int n = 0; n <= 40; ++n) {
        if (n == 1) continue;  /* convention split, see the oracle note */
        CHECK(bernoulli(n) == bernoulli_at(n));
    }
    CHECK_THROWS_AS(bernoulli(-1), std::invalid_argument);
}

TEST_CASE("named generators") {
    CumulantSeq u = cumulants_uniform(8);
    CHECK(u.at(2) == Rational(1, 3));
    CHECK(u.at(3) == 0);
    CHECK(u.at(4) == Rational(-2, 15));
    CHECK(u.at(6) == Rational(16, 63));
    CHECK(u.symmetric());
    CHECK(u.provenance() == "uniform");

    CumulantSeq r = cumulants_rademacher(8);
    CHECK(r.at(2) == 1);
    CHECK(r.at(4) == -2);
    CHECK(r.at(6) == 16);
    CHECK(r.at(8) == -272);

    CumulantSeq l = cumulants_laplace(Rational(1), 8);
    CHECK(l.at(2) == 2);
    CHECK(l.at(4) == 12);
    CHECK(l.at(6) == 240);
    CHECK(l.at(7) == 0);
    CumulantSeq l2 = cumulants_laplace(Rational(1, 2), 4);
    CHECK(l2.at(2) == Rational(1, 2));
    CHECK(l2.at(4) == Rational(3, 4));
    CHECK_THROWS_AS(cumulants_laplace(Rational(0), 6), std::invalid_argument);

    CumulantSeq g = cumulants_gaussian(Rational(5, 7), 9);
    CHECK(g.at(2) == Rational(5, 7));
    for (int o = 3; o <= 9; ++o) CHECK(g.at(o) == 0);
    CHECK_THROWS_AS(cumulants_gaussian(Rational(-1), 4), std::invalid_argument);
}

TEST_CASE("discrete symmetric atoms") {
    /* one pair at +-1 with full mass is the two-point law */
    CumulantSeq two_point = cumulants_discrete_symmetric({{Rational(1), Rational(1)}}, 12);
    CHECK(two_point.same_values(cumulants_rademacher(12)));
    CHECK(two_point.symmetric());

    CumulantSeq half = cumulants_discrete_symmetric({{Rational(1), Rational(1, 2)}}, 4);
    CHECK(half.at(2) == Rational(1, 2));

    CumulantSeq m = mu_half(8);
    CHECK(m.at(2) == 1);
    CHECK(m.at(4) == 1);
    CHECK(m.at(6) == -14);
    CHECK(m.at(8) == 106);
    /* the factorial-normalized readings of the same three values */
    CHECK(m.at(4) / factorial(4) == Rational(1, 24));
    CHECK(m.at(6) / factorial(6) == Rational(-7, 360));
    CHECK(m.at(8) / factorial(8) == Rational(53, 20160));

    CHECK_THROWS_AS(cumulants_discrete_symmetric({{Rational(1), Rational(2, 3)},
                                                  {Rational(2), Rational(1, 2)}},
                                                 6),
                    std::invalid_argument);
    CHECK_THROWS_AS(cumulants_discrete_symmetric({{Rational(0), Rational(1, 2)}}, 6),
                    std::invalid_argument);
    CHECK_THROWS_AS(cumulants_discrete_symmetric({{Rational(1), Rational(0)}}, 6),
                    std::invalid_argument);
}

TEST_CASE("moment cumulant conversion") {
    /* standard Gaussian moments 0,1,0,3,0,15 */
    MomentSeq g(6);
    g.set(2, Rational(1));
    g.set(4, Rational(3));
    g.set(6, Rational(15));
    CumulantSeq kg = moments_to_cumulants(g);
    CHECK(kg.at(2) == 1);
    for (int o = 3; o <= 6; ++o) CHECK(kg.at(o) == 0);
    CHECK(kg.symmetric());

    MomentSeq r(6);
    r.set(2, Rational(1));
    r.set(4, Rational(1));
    r.set(6, Rational(1));
    CumulantSeq kr = moments_to_cumulants(r);
    CHECK(kr.at(4) == -2);
    CHECK(kr.at(6) == 16);

    MomentSeq back = cumulants_to_moments(kr);
    for (int o = 1; o <= 6; ++o) CHECK(back.at(o) == r.at(o));

    MomentSeq off_centre(2);
    off_centre.set(1, Rational(1));
    off_centre.set(2, Rational(2));
    CHECK_THROWS_AS(moments_to_cumulants(off_centre), std::invalid_argument);
}

TEST_CASE("conversion round-trips on random sequences") {
    std::mt19937 rng(20267u);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    for (int trial = 0; trial < 100; ++trial) {
        CumulantSeq k(12, "random", false);
        for (int o = 2; o <= 12; ++o) {
            k.set(o, make_rational(BigInt(num(rng)), BigInt(den(rng))));
        }
        MomentSeq m = cumulants_to_moments(k);
        CumulantSeq back = moments_to_cumulants(m);
        CHECK(back.same_values(k));
    }
}

TEST_CASE("shift, scale and convolution") {
    CumulantSeq r = cumulants_rademacher(8);
    CumulantSeq sum = seq_shift_scale_convolve(r, Rational(1), Rational(0), &r);
    CHECK(sum.at(4) == -4);
    CHECK(sum.at(2) == 2);

    CumulantSeq scaled = seq_shift_scale_convolve(cumulants_uniform(8), Rational(2),
                                                  Rational(0), nullptr);
    CHECK(scaled.at(2) == Rational(4, 3));
    CHECK(scaled.at(4) == Rational(-32, 15));

    CumulantSeq shifted = seq_shift_scale_convolve(r, Rational(1), Rational(5), nullptr);
    CHECK(shifted.same_values(r));

    /* lambda^n with odd n keeps odd cumulants zero, so symmetry survives */
    CHECK(scaled.symmetric());
    CumulantSeq mix = seq_shift_scale_convolve(r, Rational(1, 2), Rational(0),
                                               &scaled);
    CHECK(mix.at(2) == Rational(1) + Rational(1, 3));
}

TEST_CASE("condition checkers") {
    ConditionReport u = check_conditions(cumulants_uniform(40), 40);
    CHECK(u.alternating_signs_holds);
    CHECK(u.quadratic_nonzero_holds);
    CHECK(u.damped_linear_term_holds);
    CHECK_FALSE(u.even_positive_holds);  /* K4 < 0 */

    ConditionReport r = check_conditions(cumulants_rademacher(40), 40);
    CHECK(r.alternating_signs_holds);
    CHECK(r.quadratic_nonzero_holds);

    ConditionReport l = check_conditions(cumulants_laplace(Rational(1), 40), 40);
    CHECK(l.even_positive_holds);

    ConditionReport m = check_conditions(mu_half(8), 8);
    CHECK_FALSE(m.alternating_signs_holds);
    /* the first pair already fails: K2 K4 = 1 > 0 */
    REQUIRE(!m.alternating_signs.empty());
    CHECK(m.alternating_signs.front().index == 1);
    CHECK(m.alternating_signs.front().value == 1);
    CHECK_FALSE(m.alternating_signs.front().ok);

    CHECK(u.to_json().find("alternating_signs") != std::string::npos);
}

TEST_CASE("quadratic form evaluation against the recursion") {
    RnTable table;
    CumulantSeq u = cumulants_uniform(12);
    for (int n = 4; n <= 10; ++n) {
        Rational closed = evaluate_an(u, n);
        Rational checked = evaluate_an(u, n, &table);
        CHECK(closed == checked);
    }
    /* even-order values used by the damping condition have a closed sign */
    CumulantSeq r = cumulants_rademacher(12);
    Rational a6 = evaluate_an(r, 6);
    CHECK(a6 == Rational(-140) * r.at(4) * r.at(4));
}
