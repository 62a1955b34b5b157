#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "walsh/operators.hpp"
#include "walsh/zoo.hpp"

using namespace walsh;

namespace {

truth_table dictator(int n, int i) {
    return generate(function_spec::parse("dictator:n=" + std::to_string(n) +
                                         ",i=" + std::to_string(i)));
}

}  // namespace

TEST_CASE("d_i basics") {
    const truth_table r1 = dictator(2, 1);
    CHECK(oracle::max_abs_diff(d_i(r1, 1).values, r1.values) == 0.0);
    for (double v : d_i(r1, 2).values) CHECK(v == 0.0);

    // d_1 of majority keeps exactly the spectrum masks containing 1
    const truth_table maj = oracle::maj3();
    const spectrum ds = analyze(d_i(maj, 1));
    CHECK(ds.coeffs[0b001] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(ds.coeffs[0b111] == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(ds.coeffs[0b010] == 0.0);
    CHECK(ds.coeffs[0b100] == 0.0);

    CHECK_THROWS_AS(d_i(maj, 0), std::invalid_argument);
    CHECK_THROWS_AS(d_i(maj, 4), std::invalid_argument);
}

TEST_CASE("partial_i basics") {
    const truth_table r1 = dictator(2, 1);
    for (double v : partial_i(r1, 1).values) CHECK(v == 1.0);

    const truth_table b = oracle::random_boolean_table(6, 11);
    for (int i = 1; i <= 6; ++i) {
        for (double v : partial_i(b, i).values) {
            CHECK((v == -1.0 || v == 0.0 || v == 1.0));
        }
    }

    // partial_1 of V at n=4: -1 exactly on the two points with x2=x3=x4=1
    const truth_table vee = generate(function_spec::parse("vee:n=4"));
    const truth_table pv = partial_i(vee, 1);
    for (std::size_t m = 0; m < pv.size(); ++m) {
        const double expect = (m & ~std::size_t{1}) == 0 ? -1.0 : 1.0;
        CHECK(pv.values[m] == expect);
    }
}

TEST_CASE("d_pair basics") {
    const truth_table w12 = generate(function_spec::parse("walsh:n=2,A=3"));
    CHECK(oracle::max_abs_diff(d_pair(w12, 1, 2).values, w12.values) == 0.0);

    const truth_table r1 = dictator(3, 1);
    for (double v : d_pair(r1, 1, 2).values) CHECK(v == 0.0);

    const spectrum ds = analyze(d_pair(oracle::maj3(), 1, 2));
    for (std::size_t mask = 0; mask < ds.size(); ++mask) {
        CHECK(ds.coeffs[mask] == doctest::Approx(mask == 0b111 ? -0.5 : 0.0).epsilon(1e-14));
    }

    CHECK_THROWS_AS(d_pair(r1, 2, 2), std::invalid_argument);
}

TEST_CASE("partial_pair basics and value set") {
    const truth_table w12 = generate(function_spec::parse("walsh:n=2,A=3"));
    for (double v : partial_pair(w12, 1, 2).values) CHECK(v == 1.0);

    const truth_table b = oracle::random_boolean_table(7, 3);
    const truth_table pp = partial_pair(b, 2, 5);
    for (double v : pp.values) {
        CHECK((v == -1.0 || v == -0.5 || v == 0.0 || v == 0.5 || v == 1.0));
    }

    // partial_pair(V,1,j) = -prod_{k in {2,3,4}\{j}} (1+x_k)/2 at n=4
    const truth_table vee = generate(function_spec::parse("vee:n=4"));
    for (int j = 2; j <= 4; ++j) {
        const truth_table got = partial_pair(vee, 1, j);
        for (std::size_t m = 0; m < got.size(); ++m) {
            double prod = 1.0;
            for (int k = 2; k <= 4; ++k) {
                if (k == j) continue;
                const double xk = (m & (std::size_t{1} << (k - 1))) ? -1.0 : 1.0;
                prod *= (1.0 + xk) / 2.0;
            }
            CHECK(got.values[m] == doctest::Approx(-prod).epsilon(1e-14));
        }
    }
}

TEST_CASE("heat_apply") {
    const truth_table r1 = dictator(3, 1);
    const truth_table ht = heat_apply(r1, heat_time(0.8));
    for (std::size_t m = 0; m < ht.size(); ++m) {
        CHECK(ht.values[m] == doctest::Approx(std::exp(-0.8) * r1.values[m]).epsilon(1e-13));
    }

    const truth_table f = oracle::random_real_table(8, 21);
    CHECK(oracle::max_abs_diff(heat_apply(f, heat_time(0.0)).values, f.values) <= 1e-12);

    const spectrum hs = analyze(heat_apply(oracle::maj3(), heat_time(std::log(2.0))));
    CHECK(hs.coeffs[0b001] == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(hs.coeffs[0b010] == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(hs.coeffs[0b100] == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(hs.coeffs[0b111] == doctest::Approx(-0.0625).epsilon(1e-13));

    CHECK_THROWS_AS(heat_time(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(heat_time(std::nan("")), std::invalid_argument);
}

TEST_CASE("semigroup derivative identity") {
    const truth_table w12 = generate(function_spec::parse("walsh:n=2,A=3"));
    verdict v = check_semigroup_derivative_identity(w12, 1, 2, heat_time(1.0));
    CHECK(v.pass);
    CHECK(v.lhs <= 1e-12);  // exact eigen-case

    const truth_table b = oracle::random_boolean_table(8, 5);
    CHECK(check_semigroup_derivative_identity(b, 3, 7, heat_time(0.37)).pass);

    CHECK(check_semigroup_derivative_identity(oracle::maj3(), 1, 2, heat_time(0.5)).pass);
}

TEST_CASE("operator algebra invariants") {
    for (int n : {3, 6}) {
        const truth_table f = oracle::random_real_table(n, 60 + n);
        for (int i = 1; i <= n; ++i) {
            // D_i f = r_i * partial_i f
            const truth_table di = d_i(f, i);
            const truth_table pi = partial_i(f, i);
            const std::size_t bit = std::size_t{1} << (i - 1);
            for (std::size_t m = 0; m < f.size(); ++m) {
                const double ri = (m & bit) ? -1.0 : 1.0;
                CHECK(std::fabs(di.values[m] - ri * pi.values[m]) <= 1e-12);
            }
            // idempotence / annihilation
            CHECK(oracle::max_abs_diff(d_i(di, i).values, di.values) <= 1e-12);
            for (double v : partial_i(pi, i).values) CHECK(v == 0.0);
        }
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                const truth_table ab = d_pair(f, i, j);
                CHECK(oracle::max_abs_diff(ab.values, d_pair(f, j, i).values) == 0.0);
                // two routes: four-point stencil vs composition
                CHECK(oracle::max_abs_diff(ab.values, d_i(d_i(f, j), i).values) <= 1e-12);
                // spectral support only on masks containing i and j
                const spectrum s = analyze(ab);
                const std::size_t need =
                    (std::size_t{1} << (i - 1)) | (std::size_t{1} << (j - 1));
                for (std::size_t mask = 0; mask < s.size(); ++mask) {
                    if ((mask & need) != need) CHECK(std::fabs(s.coeffs[mask]) <= 1e-12);
                }
            }
        }
    }
}

TEST_CASE("point-domain derivatives equal spectral mask filtering") {
    const truth_table f = oracle::random_real_table(6, 123);
    const spectrum s = analyze(f);
    for (int i = 1; i <= 6; ++i) {
        const spectrum ds = analyze(d_i(f, i));
        const std::size_t bit = std::size_t{1} << (i - 1);
        for (std::size_t mask = 0; mask < s.size(); ++mask) {
            const double want = (mask & bit) ? s.coeffs[mask] : 0.0;
            CHECK(std::fabs(ds.coeffs[mask] - want) <= 1e-12);
        }
    }
    const spectrum dp = analyze(d_pair(f, 2, 5));
    const std::size_t need = 0b10010;
    for (std::size_t mask = 0; mask < s.size(); ++mask) {
        const double want = (mask & need) == need ? s.coeffs[mask] : 0.0;
        CHECK(std::fabs(dp.coeffs[mask] - want) <= 1e-12);
    }
}

TEST_CASE("semigroup law and L2 contraction") {
    const truth_table f = oracle::random_real_table(7, 77);
    const truth_table two_step = heat_apply(heat_apply(f, heat_time(0.3)), heat_time(0.9));
    const truth_table one_step = heat_apply(f, heat_time(1.2));
    CHECK(oracle::max_abs_diff(two_step.values, one_step.values) <= 1e-10);

    const double base = lp_norm(f, 2.0);
    for (double t : {0.0, 0.2, 1.0, 4.0}) {
        CHECK(lp_norm(heat_apply(f, heat_time(t)), 2.0) <= base + 1e-12);
    }
}
