#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>

#include "qorb/descent.hpp"

using namespace qorb;

TEST_CASE("pair discriminant from rational eigenvalues") {
    // (t1-t2)^2 (lambda - t1 t2)^2 / (lambda t1^2 t2^2) at (2, 3, 1).
    CHECK(weyl_disc_pair_eigen(2, 3, 1) == mpq_class(25, 36));
    CHECK_THROWS_AS(weyl_disc_pair_eigen(2, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(weyl_disc_pair_eigen(2, 3, 6), std::invalid_argument);
}

TEST_CASE("trace form agrees with the eigenvalue form") {
    // Eigenvalue pairs (t, lambda/t) determine traces t + lambda/t.
    for (auto [t1, t2, lam] : {std::tuple<long, long, long>{2, 3, 1},
                               {2, 5, 3},
                               {-2, 3, 12}}) {
        mpq_class l(lam);
        mpq_class tr1 = mpq_class(t1) + l / t1, tr2 = mpq_class(t2) + l / t2;
        CHECK(weyl_disc_pair_traces(tr1, tr2, l) ==
              weyl_disc_pair_eigen(t1, t2, lam));
    }
}

TEST_CASE("discriminant valuation for eigenvalues 1 + a pi^k") {
    // t_i = 1 + a_i p^k with unit a_i and unit a_1 + a_2: both factor pairs
    // (t1 - t2)^2 and (1 - t1 t2)^2 carry valuation 2k, so val D = 4k and the
    // square root |D|^{1/2} has exponent 2k.
    for (long p : {5, 7})
        for (long k = 1; k <= 3; ++k) {
            mpz_class pk = 1;
            for (long i = 0; i < k; ++i) pk *= p;
            mpq_class t1 = 1 + 1 * mpq_class(pk);  // a = 1
            mpq_class t2 = 1 + 2 * mpq_class(pk);  // b = 2, a nonsquare unit mod 5
            mpq_class d = weyl_disc_pair_eigen(t1, t2, 1);
            CHECK(rational_valuation(d, p) == 4 * k);
        }
}

TEST_CASE("quadratic resultants") {
    // Res(x^2 - x + 5, x^2 - 2x + 5) = 5.
    CHECK(quadratic_resultant(-1, 5, -2, 5) == 5);
    // Vanishes exactly on shared roots.
    CHECK(quadratic_resultant(-3, 2, -3, 2) == 0);
}

TEST_CASE("many-factor discriminant") {
    std::vector<mpz_class> traces = {1, 2};
    auto d = weyl_disc_many(traces, 5);
    CHECK(d.value == weyl_disc_pair_traces(1, 2, 5));
    CHECK(d.abs_value >= 0);
    CHECK_THROWS_AS(weyl_disc_many({1, 1}, 5), std::invalid_argument);
    CHECK_THROWS_AS(weyl_disc_many({1}, 5), std::invalid_argument);

    // Lie-algebra normalization: plain product of (t_i - t_j)^2 (l-t_i-t_j)^2.
    auto lie = weyl_disc_many({1, 2, 3}, 7, DiscNormalization::LieAlgebra);
    mpq_class want = 1;
    std::vector<long> ts = {1, 2, 3};
    for (size_t i = 0; i < ts.size(); ++i)
        for (size_t j = i + 1; j < ts.size(); ++j) {
            mpq_class di = ts[i] - ts[j], e = 7 - ts[i] - ts[j];
            want *= di * di * e * e;
        }
    CHECK(lie.value == want);

    // Valuation at a prime dividing nothing.
    CHECK(rational_valuation(d.value, 13) == 0);
}

TEST_CASE("Ext counts") {
    FrobeniusPair pair{1, 2, 5};
    CHECK(pair.weil_admissible());
    mpq_class e = ext_count(pair);
    CHECK(e == 1);  // Res/q = 5/5
    CHECK(ext_count(FrobeniusPair{2, 1, 5}) == e);
    CHECK_THROWS_AS(ext_count(FrobeniusPair{3, 3, 5}), std::invalid_argument);

    // Complex-root oracle at (1, 2, 5).
    using cd = std::complex<double>;
    auto roots = [](long t, long q) {
        cd s = std::sqrt(cd(static_cast<double>(t * t - 4 * q), 0));
        return std::pair<cd, cd>{(cd(t) + s) / 2.0, (cd(t) - s) / 2.0};
    };
    auto [a1, a2] = roots(1, 5);
    auto [b1, b2] = roots(2, 5);
    cd numeric = cd(5) * (cd(1) - a1 / b1) * (cd(1) - a1 / b2) * (cd(1) - a2 / b1) *
                 (cd(1) - a2 / b2);
    CHECK(std::abs(numeric - cd(e.get_d())) < 1e-9);

    // Positivity over a Weil-admissible grid.
    for (long t1 = -4; t1 <= 4; ++t1)
        for (long t2 = -4; t2 <= 4; ++t2) {
            if (t1 == t2) continue;
            CHECK(ext_count(FrobeniusPair{t1, t2, 5}) > 0);
        }
}

TEST_CASE("descent factors") {
    CHECK(special_descent_factor(2).exponent == mpq_class(-1, 2));
    CHECK(special_descent_factor(2).squared() == QRat::q_pow(-1));
    for (long n = 2; n <= 6; ++n)
        CHECK(special_descent_factor(n).squared() == QRat::q_pow(-n * (n - 1) / 2));
    CHECK_THROWS_AS(special_descent_factor(1), std::invalid_argument);

    CHECK(levi_ratio_exponent({1, 1}) == 1);
    CHECK(levi_ratio_exponent({0, 0, 0}) == 0);
    CHECK(levi_ratio_exponent({0, 0}) == 0);
    // All-ones word: each pair contributes 3 - 1 - 1 = 1.
    for (size_t n = 2; n <= 5; ++n) {
        std::vector<long> word(n, 1);
        CHECK(levi_ratio_exponent(word) ==
              static_cast<long>(n * (n - 1) / 2));
    }
    CHECK_THROWS_AS(levi_ratio_exponent({1}), std::invalid_argument);
}

TEST_CASE("isogeny ratio") {
    FrobeniusPair pair{1, 2, 5};
    auto r = isogeny_ratio(pair);
    CHECK(r.ratio_sq == ext_count(pair) / mpq_class(5));
    CHECK(r.approx == doctest::Approx(std::sqrt(r.ratio_sq.get_d())));

    auto many = isogeny_ratio_many({mpz_class(1), mpz_class(2)}, 5);
    auto d = weyl_disc_many({mpz_class(1), mpz_class(2)}, 5);
    CHECK(many.ratio_sq == d.abs_value / 5);
}
