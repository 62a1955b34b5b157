#pragma once

#include "walsh/truth_table.hpp"
#include "walsh/verdict.hpp"

namespace walsh {

/// Nonnegative finite time parameter of the heat semigroup.
struct heat_time {
    double t;
    explicit heat_time(double t_);
};

// Discrete derivative (D_i f)(x) = (f(x) - f(x^i))/2, with x^i flipping
// coordinate i. Its spectrum keeps exactly the masks containing i.
truth_table d_i(const truth_table& f, int i);

// Signed-free variant (partial_i f)(x) = (f(x with x_i=1) - f(x with x_i=-1))/2.
// Constant in coordinate i; satisfies D_i f = r_i * partial_i f pointwise.
truth_table partial_i(const truth_table& f, int i);

// Second-order operators, i != j. Both are computed from the symmetric
// four-point stencil, so swapping i and j gives bit-identical output.
truth_table d_pair(const truth_table& f, int i, int j);
truth_table partial_pair(const truth_table& f, int i, int j);

// Heat semigroup P_t: spectral multiplier e^{-|A| t} per mask.
truth_table heat_apply(const truth_table& f, heat_time t);

// Verifies P_t D_{i,j} f = e^{-2t} r_i r_j * P_t partial_{i,j} f pointwise
// (max discrepancy <= 1e-10) plus the norm identity
// e^{2t} ||P_t D_{i,j} f||_p = ||P_t partial_{i,j} f||_p for p in {1,2,3}.
verdict check_semigroup_derivative_identity(const truth_table& f, int i, int j, heat_time t);

}  // namespace walsh
