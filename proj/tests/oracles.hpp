#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "walsh/rng.hpp"
#include "walsh/truth_table.hpp"

// Test-only oracles, deliberately independent of the library's fast paths.
namespace oracle {

// O(4^n) direct evaluation of the coefficient formula.
inline walsh::spectrum naive_analyze(const walsh::truth_table& f) {
    walsh::spectrum s(f.n);
    for (std::size_t a = 0; a < f.size(); ++a) {
        double acc = 0.0;
        for (std::size_t m = 0; m < f.size(); ++m) {
            acc += f.values[m] * ((std::popcount(a & m) & 1) ? -1.0 : 1.0);
        }
        s.coeffs[a] = acc / static_cast<double>(f.size());
    }
    return s;
}

inline walsh::truth_table random_real_table(int n, std::uint64_t seed) {
    walsh::truth_table f(n);
    walsh::splitmix64 rng(seed);
    for (double& v : f.values) v = rng.pm1();
    return f;
}

inline walsh::truth_table random_boolean_table(int n, std::uint64_t seed) {
    walsh::truth_table f(n);
    walsh::splitmix64 rng(seed);
    for (double& v : f.values) v = rng.sign();
    return f;
}

// majority of three, written out pointwise: +1 iff at most one coordinate is -1
inline walsh::truth_table maj3() {
    walsh::truth_table f(3);
    for (std::size_t m = 0; m < 8; ++m) {
        f.values[m] = std::popcount(m) < 2 ? 1.0 : -1.0;
    }
    return f;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        worst = std::max(worst, std::fabs(a[k] - b[k]));
    }
    return worst;
}

}  // namespace oracle
