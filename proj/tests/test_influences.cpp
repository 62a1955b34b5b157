#include <doctest.h>

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "walsh/influences.hpp"
#include "walsh/operators.hpp"
#include "walsh/zoo.hpp"

using namespace walsh;

TEST_CASE("influence report: majority of three") {
    const influence_report rep = make_influence_report(oracle::maj3());
    for (int i = 1; i <= 3; ++i) CHECK(rep.influence[i - 1] == doctest::Approx(0.5).epsilon(1e-12));
    for (int i = 1; i <= 3; ++i) {
        for (int j = i + 1; j <= 3; ++j) {
            CHECK(rep.pair(i, j) == doctest::Approx(0.25).epsilon(1e-12));
        }
    }
    CHECK(rep.total == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(rep.theta == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(rep.degree_weight[1] == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(rep.degree_weight[3] == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("influence report: dictator and parity") {
    const influence_report dict = make_influence_report(generate(function_spec::parse("dictator:n=4,i=1")));
    CHECK(dict.influence[0] == 1.0);
    for (int i = 2; i <= 4; ++i) CHECK(dict.influence[i - 1] == 0.0);
    CHECK(dict.max_pair() == 0.0);
    CHECK(dict.theta == 0.0);

    const influence_report par = make_influence_report(generate(function_spec::parse("walsh:n=4,A=15")));
    for (int i = 1; i <= 4; ++i) CHECK(par.influence[i - 1] == 1.0);
    for (int i = 1; i <= 4; ++i) {
        for (int j = i + 1; j <= 4; ++j) CHECK(par.pair(i, j) == 1.0);
    }
    CHECK(par.theta == 3.0);
    CHECK(par.total == 4.0);
}

TEST_CASE("closed-form weighted integrals") {
    const truth_table maj = oracle::maj3();
    CHECK(integral_j1(maj, 1, 2) == doctest::Approx(1.0 / 48).epsilon(1e-12));
    CHECK(integral_j2(maj, 1, 2) == doctest::Approx(1.0 / 16).epsilon(1e-12));

    const truth_table w12 = generate(function_spec::parse("walsh:n=2,A=3"));
    CHECK(integral_j1(w12, 1, 2) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(integral_j2(w12, 1, 2) == doctest::Approx(0.5).epsilon(1e-12));

    const truth_table r1 = generate(function_spec::parse("dictator:n=3,i=1"));
    CHECK(integral_j1(r1, 1, 2) == 0.0);
    CHECK(integral_j2(r1, 1, 2) == 0.0);

    CHECK_THROWS_AS(integral_j1(maj, 2, 2), std::invalid_argument);
}

TEST_CASE("quadrature oracle agrees with the closed forms") {
    const truth_table maj = oracle::maj3();
    CHECK(integral_quadrature(maj, 1, 2, weighted_integral::j1) ==
          doctest::Approx(1.0 / 48).epsilon(1e-8));
    CHECK(integral_quadrature(maj, 1, 2, weighted_integral::j2) ==
          doctest::Approx(1.0 / 16).epsilon(1e-8));

    const truth_table r1 = generate(function_spec::parse("dictator:n=3,i=1"));
    CHECK(std::fabs(integral_quadrature(r1, 1, 2, weighted_integral::j1)) <= 1e-9);

    for (int n : {4, 6}) {
        const truth_table f = oracle::random_boolean_table(n, 300 + n);
        const spectrum s = analyze(f);
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                CHECK(std::fabs(integral_quadrature(f, i, j, weighted_integral::j1) -
                                integral_j1(s, i, j)) <= 1e-7);
                CHECK(std::fabs(integral_quadrature(f, i, j, weighted_integral::j2) -
                                integral_j2(s, i, j)) <= 1e-7);
            }
        }
    }
}

TEST_CASE("weighted-integral identities over random tables") {
    for (int n : {2, 5, 8}) {
        const truth_table f = oracle::random_real_table(n, 500 + n);
        const spectrum s = analyze(f);
        const influence_report rep = make_influence_report(f);

        double high = 0.0;
        for (int k = 2; k <= n; ++k) high += rep.degree_weight[k];
        double j1_sum = 0.0;
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) j1_sum += integral_j1(s, i, j);
        }
        CHECK(high == doctest::Approx(4.0 * j1_sum).epsilon(1e-10));

        for (int i = 1; i <= n; ++i) {
            const double fi = s.coeffs[std::size_t{1} << (i - 1)];
            double j2_sum = 0.0;
            for (int j = 1; j <= n; ++j) {
                if (j != i) j2_sum += integral_j2(s, i, j);
            }
            CHECK(rep.influence[i - 1] - fi * fi == doctest::Approx(2.0 * j2_sum).epsilon(1e-10));
        }
    }
}

TEST_CASE("entropy") {
    CHECK(entropy(oracle::maj3()) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(entropy(truth_table(4)) == 0.0);
    const truth_table g(2, {2.0, 0.0, 2.0, 0.0});  // 1 + r1
    CHECK(entropy(g) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-13));
}

TEST_CASE("effective alpha") {
    CHECK(effective_alpha(generate(function_spec::parse("dictator:n=4,i=1"))) == 0.0);

    const double parity_alpha = effective_alpha(generate(function_spec::parse("walsh:n=2,A=3")));
    CHECK(std::isinf(parity_alpha));

    const double maj_alpha = effective_alpha(oracle::maj3());
    const double ln8 = std::log(8.0);
    const double term1 = 3.0 * 2.0 * 0.25 / (ln8 * ln8);
    const double term2 = (3.0 / std::log(3.0)) * 2.0 * 0.25 / std::log(4.0);
    CHECK(maj_alpha == doctest::Approx(std::max(term1, term2)).epsilon(1e-12));
    CHECK(maj_alpha == doctest::Approx(0.98490).epsilon(1e-4));

    CHECK_THROWS_AS(effective_alpha(truth_table(3)), std::invalid_argument);
}

TEST_CASE("influence monotonicity and symmetry") {
    for (int n : {3, 5, 7}) {
        const influence_report rep =
            make_influence_report(oracle::random_boolean_table(n, 900 + n));
        for (int i = 1; i <= n; ++i) {
            CHECK(rep.influence[i - 1] >= -1e-15);
            CHECK(rep.influence[i - 1] <= 1.0 + 1e-12);
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                CHECK(rep.pair(i, j) == rep.pair(j, i));
                CHECK(rep.pair(i, j) <= rep.influence[i - 1] + 1e-12);
            }
        }
        double wsum = 0.0;
        for (int k = 0; k <= n; ++k) wsum += rep.degree_weight[k];
        CHECK(wsum == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("report json shape") {
    const std::string json = make_influence_report(oracle::maj3()).to_json();
    CHECK(json.find("\"n\":3") != std::string::npos);
    CHECK(json.find("\"I\":[") != std::string::npos);
    CHECK(json.find("\"Iij\":[[1,2,") != std::string::npos);
    CHECK(json.find("\"theta\":0.5") != std::string::npos);
    CHECK(json.find("\"W\":[") != std::string::npos);
}
