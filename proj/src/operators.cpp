#include "walsh/operators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace walsh {

namespace {

void check_coordinate(const truth_table& f, int i) {
    if (i < 1 || i > f.n) {
        throw std::invalid_argument("coordinate i=" + std::to_string(i) +
                                    " outside [1," + std::to_string(f.n) + "]");
    }
}

void check_pair(const truth_table& f, int i, int j) {
    check_coordinate(f, i);
    check_coordinate(f, j);
    if (i == j) {
        throw std::invalid_argument("pair operators need distinct coordinates");
    }
}

// partial_{i,j} of a Boolean table must land in {-1,-1/2,0,1/2,1}; values are
// dyadic, so nearest-half-integer rounding with 1e-9 tolerance is exact.
void assert_half_integer_values(const truth_table& g) {
    for (double v : g.values) {
        const double doubled = 2.0 * v;
        const double nearest = std::round(doubled);
        if (std::fabs(doubled - nearest) > 1e-9 || nearest < -2.0 || nearest > 2.0) {
            throw std::logic_error("partial_pair of a Boolean table left {-1,-1/2,0,1/2,1}");
        }
    }
}

}  // namespace

heat_time::heat_time(double t_) : t(t_) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw std::invalid_argument("heat_time must be finite and >= 0");
    }
}

truth_table d_i(const truth_table& f, int i) {
    check_coordinate(f, i);
    const std::size_t bit = std::size_t{1} << (i - 1);
    truth_table out(f.n);
    for (std::size_t m = 0; m < f.size(); ++m) {
        out.values[m] = (f.values[m] - f.values[m ^ bit]) / 2.0;
    }
    return out;
}

truth_table partial_i(const truth_table& f, int i) {
    check_coordinate(f, i);
    const std::size_t bit = std::size_t{1} << (i - 1);
    truth_table out(f.n);
    for (std::size_t m = 0; m < f.size(); ++m) {
        // bit clear = coordinate +1, bit set = coordinate -1
        out.values[m] = (f.values[m & ~bit] - f.values[m | bit]) / 2.0;
    }
    return out;
}

truth_table d_pair(const truth_table& f, int i, int j) {
    check_pair(f, i, j);
    const std::size_t bi = std::size_t{1} << (i - 1);
    const std::size_t bj = std::size_t{1} << (j - 1);
    truth_table out(f.n);
    for (std::size_t m = 0; m < f.size(); ++m) {
        out.values[m] =
            (f.values[m] - f.values[m ^ bi] - f.values[m ^ bj] + f.values[m ^ bi ^ bj]) / 4.0;
    }
    return out;
}

truth_table partial_pair(const truth_table& f, int i, int j) {
    check_pair(f, i, j);
    const std::size_t bi = std::size_t{1} << (i - 1);
    const std::size_t bj = std::size_t{1} << (j - 1);
    truth_table out(f.n);
    for (std::size_t m = 0; m < f.size(); ++m) {
        const std::size_t base = m & ~bi & ~bj;
        out.values[m] = (f.values[base] - f.values[base | bj] - f.values[base | bi] +
                         f.values[base | bi | bj]) /
                        4.0;
    }
    if (is_boolean(f)) {
        assert_half_integer_values(out);
    }
    return out;
}

truth_table heat_apply(const truth_table& f, heat_time t) {
    spectrum s = analyze(f);
    // e^{-kt} by degree; popcount indexes the table
    std::vector<double> mult(static_cast<std::size_t>(f.n) + 1);
    for (int k = 0; k <= f.n; ++k) mult[k] = std::exp(-t.t * k);
    for (std::size_t mask = 0; mask < s.size(); ++mask) {
        s.coeffs[mask] *= mult[std::popcount(mask)];
    }
    return synthesize(s);
}

verdict check_semigroup_derivative_identity(const truth_table& f, int i, int j, heat_time t) {
    check_pair(f, i, j);
    const truth_table lhs_tab = heat_apply(d_pair(f, i, j), t);
    const truth_table rhs_base = heat_apply(partial_pair(f, i, j), t);
    const double damp = std::exp(-2.0 * t.t);
    const std::size_t bi = std::size_t{1} << (i - 1);
    const std::size_t bj = std::size_t{1} << (j - 1);

    double max_disc = 0.0;
    for (std::size_t m = 0; m < f.size(); ++m) {
        const double ri = (m & bi) ? -1.0 : 1.0;
        const double rj = (m & bj) ? -1.0 : 1.0;
        max_disc = std::max(max_disc,
                            std::fabs(lhs_tab.values[m] - damp * ri * rj * rhs_base.values[m]));
    }
    // same identity at the norm level, e^{2t}||.||_p = ||.||_p
    for (double p : {1.0, 2.0, 3.0}) {
        const double a = std::exp(2.0 * t.t) * lp_norm(lhs_tab, p);
        const double b = lp_norm(rhs_base, p);
        max_disc = std::max(max_disc, std::fabs(a - b));
    }

    verdict v;
    v.id = statement::semigroup_identity;
    v.applicable = true;
    v.lhs = max_disc;
    v.rhs = 0.0;
    v.slack = -max_disc;
    v.pass = max_disc <= 1e-10;
    return v;
}

}  // namespace walsh
