#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "walsh/truth_table.hpp"

namespace walsh {

/// Every influence-type quantity of one function: first-order influences I_i,
/// couple influences I_{i,j}, total influence, theta = max_i sum_{j!=i} I_{i,j},
/// and spectral weight by degree W_k.
///
/// Construction (make_influence_report) computes I_i and I_{i,j} twice, as
/// spectral sums over masks and as squared L2 norms of d_i / d_pair outputs,
/// and throws std::logic_error if the routes disagree beyond 1e-10. The
/// spectral values are the ones stored.
struct influence_report {
    int n = 0;
    std::vector<double> influence;        // I_i at index i-1
    std::vector<double> pair_influence;   // upper triangle, see pair_index
    double total = 0.0;
    double theta = 0.0;
    std::vector<double> degree_weight;    // W_0..W_n

    // packed index of (i,j), 1 <= i < j <= n
    static std::size_t pair_index(int n, int i, int j);
    double pair(int i, int j) const;              // symmetric access, i != j
    double row_sum_excluding(int i) const;        // sum_{j != i} I_{i,j}
    double max_pair() const;
    std::string to_json() const;
};

influence_report make_influence_report(const truth_table& f);

// Total influence I(f) = sum_i I_i = sum_A |A| fhat^2(A), for any real table.
double total_influence(const truth_table& f);

// Closed forms of the two weighted semigroup integrals over masks containing
// both i and j (i != j):
//   integral_j1 = int_0^inf (e^{2t}-1) ||P_t D_{i,j} f||_2^2 dt
//               = sum_{A >= {i,j}} fhat^2(A) / (2|A|(|A|-1))
//   integral_j2 = int_0^inf  e^{2t}   ||P_t D_{i,j} f||_2^2 dt
//               = sum_{A >= {i,j}} fhat^2(A) / (2(|A|-1))
double integral_j1(const truth_table& f, int i, int j);
double integral_j2(const truth_table& f, int i, int j);

// Variants on a precomputed spectrum (the closed forms only need coefficients).
double integral_j1(const spectrum& s, int i, int j);
double integral_j2(const spectrum& s, int i, int j);

enum class weighted_integral { j1, j2 };

/// Raised when the quadrature oracle cannot reach its tolerance.
struct quadrature_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical oracle for the closed forms: adaptive Simpson on [0,20] to
// absolute tolerance 1e-9, integrand evaluated through heat_apply and
// lp_norm on the d_pair table. The truncation tail is bounded analytically
// and must stay below the tolerance, else quadrature_error.
double integral_quadrature(const truth_table& f, int i, int j, weighted_integral which);

// Ent(f^2) = E[f^2 ln f^2] - E[f^2] ln E[f^2], with 0 ln 0 = 0.
double entropy(const truth_table& f);

// Effective alpha of the generalized small-couple-influence condition:
//   max( sum_{i<j} 2 I_{i,j} / ln^2(2/I_{i,j}),
//        (n/ln n) * max_i sum_{j!=i} I_{i,j} / ln(1/I_{i,j}) ).
// Terms with I_{i,j} = 0 contribute 0; I_{i,j} = 1 in the second sum gives
// +inf. Requires a Boolean table.
double effective_alpha(const truth_table& f);
double effective_alpha(const influence_report& rep);

}  // namespace walsh
