#include "walsh/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace walsh {

namespace {

constexpr double ineq_tol = 1e-12;       // absolute slack allowance, inequalities
constexpr double identity_rel_tol = 1e-9;
constexpr double inf = std::numeric_limits<double>::infinity();

double single_influence(const spectrum& s, int i) {
    const std::size_t bit = std::size_t{1} << (i - 1);
    double acc = 0.0;
    for (std::size_t mask = 0; mask < s.size(); ++mask) {
        if (mask & bit) acc += s.coeffs[mask] * s.coeffs[mask];
    }
    return acc;
}

double couple_influence(const spectrum& s, int i, int j) {
    const std::size_t need = (std::size_t{1} << (i - 1)) | (std::size_t{1} << (j - 1));
    double acc = 0.0;
    for (std::size_t mask = 0; mask < s.size(); ++mask) {
        if ((mask & need) == need) acc += s.coeffs[mask] * s.coeffs[mask];
    }
    return acc;
}

double high_degree_energy(const spectrum& s) {
    double acc = 0.0;
    for (std::size_t mask = 0; mask < s.size(); ++mask) {
        if (std::popcount(mask) >= 2) acc += s.coeffs[mask] * s.coeffs[mask];
    }
    return acc;
}

verdict inapplicable(statement id, const char* why) {
    verdict v;
    v.id = id;
    v.applicable = false;
    v.note = why;
    return v;
}

verdict identity_verdict(statement id, double lhs, double rhs) {
    verdict v;
    v.id = id;
    v.lhs = lhs;
    v.rhs = rhs;
    v.slack = rhs - lhs;
    v.pass = std::fabs(rhs - lhs) <= identity_rel_tol * std::max(1.0, std::fabs(lhs));
    return v;
}

verdict bound_verdict(statement id, double lhs, double rhs, double tol) {
    verdict v;
    v.id = id;
    v.lhs = lhs;
    v.rhs = rhs;
    v.slack = rhs - lhs;
    v.pass = lhs <= rhs + tol;
    return v;
}

// theta/ln(1/theta) style bound with the 0 -> 0 convention
double ratio_log_bound(double value, double scale) {
    if (value == 0.0) return 0.0;
    return scale * value / std::log(1.0 / value);
}

}  // namespace

std::string constants::to_json() const {
    return "{\"kappa\":" + format_real(kappa) + ",\"c_main\":" + format_real(c_main) +
           ",\"argmin_n1\":" + std::to_string(argmin_n1) +
           ",\"argmin_n2\":" + std::to_string(argmin_n2) + "}";
}

constants compute_constants() {
    constexpr int n_max = 1000;
    double best1 = inf, best2 = inf;
    int arg1 = 0, arg2 = 0;
    double prev1 = 0.0, prev2 = 0.0;
    for (int n = 2; n <= n_max; ++n) {
        const double ln = std::log(static_cast<double>(n));
        const double f1 = n / (16.0 * ln);
        const double f2 = n / (ln * ln);
        if (f1 < best1) { best1 = f1; arg1 = n; }
        if (f2 < best2) { best2 = f2; arg2 = n; }
        if (n > n_max - 100 && (f1 <= prev1 || f2 <= prev2)) {
            throw std::logic_error("compute_constants: objectives not increasing near scan end");
        }
        prev1 = f1;
        prev2 = f2;
    }
    constants c;
    c.kappa = std::min(best1, best2);
    c.c_main = std::max(1.0 / c.kappa, 20.0);
    c.argmin_n1 = arg1;
    c.argmin_n2 = arg2;
    return c;
}

verdict check_scalar_lemma(double x, double y, double z, scalar_variant variant) {
    const statement id =
        variant == scalar_variant::elementary ? statement::scalar_elementary
                                              : statement::scalar_asymptota;
    if (!(z >= 0.0 && z < 0.25)) return inapplicable(id, "z outside [0,1/4)");
    if (!(0.0 <= x && x <= y && y <= x * x + z)) {
        return inapplicable(id, "need 0 <= x <= y <= x^2+z");
    }
    const double y_cap = variant == scalar_variant::elementary ? 2.0 * z : z + 4.0 * z * z;
    const double x_floor = variant == scalar_variant::elementary ? 1.0 - 2.0 * z
                                                                 : 1.0 - z - 4.0 * z * z;
    const double margin_y = y_cap - y;
    const double margin_x = x - x_floor;
    verdict v;
    v.id = id;
    if (margin_y >= margin_x) {
        v.lhs = y;
        v.rhs = y_cap;
        v.note = "y_branch";
    } else {
        v.lhs = x_floor;
        v.rhs = x;
        v.note = "x_branch";
    }
    v.slack = std::max(margin_y, margin_x);
    v.pass = v.slack >= -ineq_tol;
    return v;
}

function_checks::function_checks(const truth_table& f)
    : f_(&f), s_(analyze(f)), boolean_(is_boolean(f)) {}

const influence_report& function_checks::report() const {
    if (!rep_) rep_ = make_influence_report(*f_);
    return *rep_;
}

verdict function_checks::lemma_above1() const {
    const int n = s_.n;
    double rhs = 0.0;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) rhs += integral_j1(s_, i, j);
    }
    return identity_verdict(statement::lemma_above1, high_degree_energy(s_), 4.0 * rhs);
}

verdict function_checks::lemma_mi(int i) const {
    const double fi = s_.coeffs[std::size_t{1} << (i - 1)];
    const double lhs = single_influence(s_, i) - fi * fi;
    double rhs = 0.0;
    for (int j = 1; j <= s_.n; ++j) {
        if (j != i) rhs += integral_j2(s_, i, j);
    }
    verdict v = identity_verdict(statement::lemma_mi, lhs, 2.0 * rhs);
    v.witness = i;
    return v;
}

verdict function_checks::lemma_estimate(int i, int j) const {
    if (!boolean_) return inapplicable(statement::lemma_estimate, "table not Boolean");
    const double iij = couple_influence(s_, i, j);
    double rhs = 0.0;
    if (iij > 0.0) {
        const double l = std::log(2.0 / iij);
        rhs = 2.0 * iij / (l * l);
    }
    return bound_verdict(statement::lemma_estimate, integral_j1(s_, i, j), rhs, ineq_tol);
}

verdict function_checks::lemma_estimate2(int i, int j) const {
    if (!boolean_) return inapplicable(statement::lemma_estimate2, "table not Boolean");
    const double iij = couple_influence(s_, i, j);
    double rhs;
    if (iij == 0.0) {
        rhs = 0.0;
    } else if (iij >= 1.0) {
        rhs = inf;  // ln(1/I) = 0: degenerate regime, vacuous bound
    } else {
        rhs = iij / std::log(1.0 / iij);
    }
    verdict v = bound_verdict(statement::lemma_estimate2, integral_j2(s_, i, j), rhs, ineq_tol);
    if (std::isinf(rhs)) v.note = "vacuous";
    return v;
}

verdict function_checks::lemma_trick(int i) const {
    if (!boolean_) return inapplicable(statement::lemma_trick, "table not Boolean");
    const double fi = s_.coeffs[std::size_t{1} << (i - 1)];
    verdict v = bound_verdict(statement::lemma_trick, std::fabs(fi), single_influence(s_, i),
                              ineq_tol);
    v.witness = i;
    return v;
}

verdict function_checks::theorem_additional() const {
    if (!boolean_) return inapplicable(statement::theorem_additional, "table not Boolean");
    const influence_report& rep = report();
    if (rep.theta > 1.0 / 25.0) {
        return inapplicable(statement::theorem_additional, "theta > 1/25");
    }
    const double b1 = ratio_log_bound(rep.theta, 8.0);
    const double b2 = ratio_log_bound(rep.theta, 4.0);

    int hits = 0;
    int hit_coord = 0;
    double best_coeff = 0.0;
    for (int i = 1; i <= rep.n; ++i) {
        const double ci = std::fabs(s_.coeffs[std::size_t{1} << (i - 1)]);
        best_coeff = std::max(best_coeff, ci);
        if (ci >= 1.0 - b1 - ineq_tol) {
            ++hits;
            hit_coord = i;
        }
    }
    const bool branch1 = hits == 1;
    const double max_inf = *std::max_element(rep.influence.begin(), rep.influence.end());
    const bool branch2 = max_inf <= b2 + ineq_tol;

    verdict v;
    v.id = statement::theorem_additional;
    v.pass = branch1 != branch2;  // the dichotomy is exclusive
    if (branch1) {
        v.witness = hit_coord;
        v.lhs = 1.0 - b1;
        v.rhs = std::fabs(s_.coeffs[std::size_t{1} << (hit_coord - 1)]);
        v.slack = v.rhs - v.lhs;
        v.note = branch2 ? "both" : "near_dictator";
    } else if (branch2) {
        v.lhs = max_inf;
        v.rhs = b2;
        v.slack = v.rhs - v.lhs;
        v.note = "low_influence";
    } else {
        v.lhs = 1.0 - b1;
        v.rhs = best_coeff;
        v.slack = v.rhs - v.lhs;
        v.note = "neither";
    }
    return v;
}

namespace {

// Shared conclusion of the main dichotomy: constant clause with bound c*alpha,
// unique-dictator clause with bound c*alpha*ln(n)/n.
verdict main_conclusion(statement id, const spectrum& s, double c, double alpha) {
    const int n = s.n;
    verdict v;
    v.id = id;
    if (std::isinf(alpha)) {
        v.pass = true;
        v.lhs = -inf;
        v.rhs = s.coeffs[0] * s.coeffs[0];
        v.slack = inf;
        v.note = "alpha=inf";
        return v;
    }
    const double const_floor = 1.0 - c * alpha;
    const double dict_floor = 1.0 - c * alpha * std::log(static_cast<double>(n)) / n;
    const double c0sq = s.coeffs[0] * s.coeffs[0];
    const bool clause1 = c0sq >= const_floor - ineq_tol;

    int hits = 0;
    int hit_coord = 0;
    double best = 0.0;
    for (int i = 1; i <= n; ++i) {
        const double ci = s.coeffs[std::size_t{1} << (i - 1)];
        const double cisq = ci * ci;
        best = std::max(best, cisq);
        if (cisq >= dict_floor - ineq_tol) {
            ++hits;
            hit_coord = i;
        }
    }
    const bool clause2 = hits == 1;

    v.pass = clause1 || clause2;  // stated as an inclusive disjunction
    if (clause2) v.witness = hit_coord;
    if (clause1 && clause2) {
        v.note = "clause1+clause2";
    } else if (clause1) {
        v.note = "clause1";
    } else if (clause2) {
        v.note = "clause2";
    } else {
        v.note = "neither";
    }
    if (clause2) {
        v.lhs = dict_floor;
        v.rhs = s.coeffs[std::size_t{1} << (hit_coord - 1)] *
                s.coeffs[std::size_t{1} << (hit_coord - 1)];
    } else {
        v.lhs = const_floor;
        v.rhs = c0sq;
    }
    v.slack = v.rhs - v.lhs;
    return v;
}

}  // namespace

verdict function_checks::theorem_main(double c) const {
    if (c <= 0.0) throw std::invalid_argument("theorem_main constant must be positive");
    if (!boolean_) return inapplicable(statement::theorem_main, "table not Boolean");
    const influence_report& rep = report();
    const double ln = std::log(static_cast<double>(rep.n));
    const double alpha = rep.max_pair() * rep.n * rep.n / (ln * ln);
    return main_conclusion(statement::theorem_main, s_, c, alpha);
}

verdict function_checks::remark_generalized(double c) const {
    if (c <= 0.0) throw std::invalid_argument("remark_generalized constant must be positive");
    if (!boolean_) return inapplicable(statement::remark_generalized, "table not Boolean");
    return main_conclusion(statement::remark_generalized, s_, c, effective_alpha(report()));
}

verdict function_checks::main2_chain() const {
    if (!boolean_) return inapplicable(statement::main2_chain, "table not Boolean");
    verdict v;
    v.id = statement::main2_chain;
    v.pass = true;
    v.slack = inf;
    int checked = 0;
    for (int i = 1; i <= s_.n; ++i) {
        const double ci = std::fabs(s_.coeffs[std::size_t{1} << (i - 1)]);
        const double ii = single_influence(s_, i);
        const double zi = std::max(0.0, ii - ci * ci);
        if (zi >= 0.25) {
            v.flagged.push_back(i);
            continue;
        }
        ++checked;
        const double margin_y = (zi + 4.0 * zi * zi) - ii;
        const double margin_x = ci - (1.0 - zi - 4.0 * zi * zi);
        const double margin = std::max(margin_y, margin_x);
        if (margin < v.slack) {
            v.slack = margin;
            v.witness = i;
            if (margin_y >= margin_x) {
                v.lhs = ii;
                v.rhs = zi + 4.0 * zi * zi;
            } else {
                v.lhs = 1.0 - zi - 4.0 * zi * zi;
                v.rhs = ci;
            }
        }
        if (margin < -ineq_tol) v.pass = false;
    }
    if (checked == 0) {
        verdict out = inapplicable(statement::main2_chain, "all coordinates flagged");
        out.flagged = v.flagged;
        return out;
    }
    return v;
}

verdict check_lemma_above1(const truth_table& f) { return function_checks(f).lemma_above1(); }

verdict check_lemma_estimate(const truth_table& f, int i, int j) {
    return function_checks(f).lemma_estimate(i, j);
}

verdict check_lemma_mi(const truth_table& f, int i) { return function_checks(f).lemma_mi(i); }

verdict check_lemma_estimate2(const truth_table& f, int i, int j) {
    return function_checks(f).lemma_estimate2(i, j);
}

verdict check_lemma_trick(const truth_table& f, int i) {
    return function_checks(f).lemma_trick(i);
}

verdict check_hypercontractivity(const truth_table& g, heat_time t) {
    const double lhs = lp_norm(heat_apply(g, t), 2.0);
    const double rhs = lp_norm(g, 1.0 + std::exp(-2.0 * t.t));
    return bound_verdict(statement::hypercontractivity, lhs, rhs, 1e-10);
}

verdict check_log_sobolev(const truth_table& g) {
    return bound_verdict(statement::log_sobolev, entropy(g), 2.0 * total_influence(g), 1e-10);
}

verdict check_isoperimetry(const truth_table& h) {
    std::size_t ones = 0;
    for (double v : h.values) {
        if (v == 1.0) {
            ++ones;
        } else if (v != 0.0) {
            return inapplicable(statement::isoperimetry, "table not {0,1}-valued");
        }
    }
    const double p = static_cast<double>(ones) / static_cast<double>(h.size());
    const double lhs = p == 0.0 ? 0.0 : 0.5 * p * std::log(1.0 / p);
    return bound_verdict(statement::isoperimetry, lhs, total_influence(h), ineq_tol);
}

verdict check_corollary_3values(const truth_table& g) {
    std::size_t count[3] = {0, 0, 0};  // -1, 0, +1
    for (double v : g.values) {
        if (v == -1.0) {
            ++count[0];
        } else if (v == 0.0) {
            ++count[1];
        } else if (v == 1.0) {
            ++count[2];
        } else {
            return inapplicable(statement::corollary_3values, "table not {-1,0,1}-valued");
        }
    }
    const double ig = total_influence(g);
    if (ig > 1.0 / 25.0) {
        return inapplicable(statement::corollary_3values, "I(g) > 1/25");
    }
    // majority value, ties toward the smaller eta
    int best = 0;
    for (int k = 1; k < 3; ++k) {
        if (count[k] > count[best]) best = k;
    }
    const double p_miss =
        static_cast<double>(g.size() - count[best]) / static_cast<double>(g.size());
    const double bound = ratio_log_bound(ig, 4.0);
    verdict v = bound_verdict(statement::corollary_3values, p_miss, bound, ineq_tol);
    v.witness = best - 1;  // eta
    return v;
}

verdict check_theorem_additional(const truth_table& f) {
    return function_checks(f).theorem_additional();
}

verdict check_theorem_main(const truth_table& f, double c) {
    return function_checks(f).theorem_main(c);
}

verdict check_remark_generalized(const truth_table& f, double c) {
    return function_checks(f).remark_generalized(c);
}

verdict check_main2_chain(const truth_table& f) { return function_checks(f).main2_chain(); }

}  // namespace walsh
