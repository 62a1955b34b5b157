#include "walsh/influences.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "walsh/operators.hpp"
#include "walsh/verdict.hpp"

namespace walsh {

namespace {

constexpr double dual_route_tol = 1e-10;

void check_pair_args(int n, int i, int j) {
    if (i < 1 || i > n || j < 1 || j > n || i == j) {
        throw std::invalid_argument("influence pair needs distinct coordinates in [1,n]");
    }
}

double mean_of_squares(const std::vector<double>& xs, std::vector<double>& scratch) {
    scratch.resize(xs.size());
    for (std::size_t m = 0; m < xs.size(); ++m) scratch[m] = xs[m] * xs[m];
    return pairwise_sum(scratch) / static_cast<double>(xs.size());
}

}  // namespace

std::size_t influence_report::pair_index(int n, int i, int j) {
    if (i > j) std::swap(i, j);
    const std::size_t row = static_cast<std::size_t>(i - 1);
    return row * n - row * (row + 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

double influence_report::pair(int i, int j) const {
    check_pair_args(n, i, j);
    return pair_influence[pair_index(n, i, j)];
}

double influence_report::row_sum_excluding(int i) const {
    double acc = 0.0;
    for (int j = 1; j <= n; ++j) {
        if (j != i) acc += pair(i, j);
    }
    return acc;
}

double influence_report::max_pair() const {
    return *std::max_element(pair_influence.begin(), pair_influence.end());
}

std::string influence_report::to_json() const {
    std::string out = "{\"n\":" + std::to_string(n) + ",\"I\":[";
    for (int i = 0; i < n; ++i) {
        if (i) out += ',';
        out += format_real(influence[i]);
    }
    out += "],\"Iij\":[";
    bool first = true;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (!first) out += ',';
            first = false;
            out += '[' + std::to_string(i) + ',' + std::to_string(j) + ',' +
                   format_real(pair(i, j)) + ']';
        }
    }
    out += "],\"total\":" + format_real(total);
    out += ",\"theta\":" + format_real(theta);
    out += ",\"W\":[";
    for (int k = 0; k <= n; ++k) {
        if (k) out += ',';
        out += format_real(degree_weight[k]);
    }
    out += "]}";
    return out;
}

influence_report make_influence_report(const truth_table& f) {
    const int n = f.n;
    influence_report rep;
    rep.n = n;
    rep.influence.assign(n, 0.0);
    rep.pair_influence.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 0.0);
    rep.degree_weight.assign(n + 1, 0.0);

    // Spectral route: one pass over masks.
    const spectrum s = analyze(f);
    int bits[max_dimension];
    for (std::size_t mask = 0; mask < s.size(); ++mask) {
        const double sq = s.coeffs[mask] * s.coeffs[mask];
        int nb = 0;
        for (std::size_t rest = mask; rest; rest &= rest - 1) {
            bits[nb++] = std::countr_zero(rest) + 1;
        }
        rep.degree_weight[nb] += sq;
        for (int a = 0; a < nb; ++a) {
            rep.influence[bits[a] - 1] += sq;
            for (int b = a + 1; b < nb; ++b) {
                rep.pair_influence[influence_report::pair_index(n, bits[a], bits[b])] += sq;
            }
        }
    }

    // Derivative route: squared L2 norms of d_i and d_pair outputs.
    std::vector<double> scratch;
    for (int i = 1; i <= n; ++i) {
        const double der = mean_of_squares(d_i(f, i).values, scratch);
        if (std::fabs(der - rep.influence[i - 1]) > dual_route_tol) {
            throw std::logic_error("influence_report: spectral and derivative I_i disagree");
        }
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const double der = mean_of_squares(d_pair(f, i, j).values, scratch);
            const double spectral = rep.pair_influence[influence_report::pair_index(n, i, j)];
            if (std::fabs(der - spectral) > dual_route_tol) {
                throw std::logic_error("influence_report: spectral and derivative I_ij disagree");
            }
        }
    }

    rep.total = pairwise_sum(rep.influence);
    double theta = 0.0;
    for (int i = 1; i <= n; ++i) theta = std::max(theta, rep.row_sum_excluding(i));
    rep.theta = theta;

    // Degree-weight consistency: sum W_k = E[f^2], sum k W_k = total influence.
    const double energy = mean_of_squares(f.values, scratch);
    double w_sum = 0.0, kw_sum = 0.0;
    for (int k = 0; k <= n; ++k) {
        w_sum += rep.degree_weight[k];
        kw_sum += k * rep.degree_weight[k];
    }
    if (std::fabs(w_sum - energy) > dual_route_tol ||
        std::fabs(kw_sum - rep.total) > dual_route_tol) {
        throw std::logic_error("influence_report: degree weights inconsistent");
    }
    return rep;
}

double total_influence(const truth_table& f) {
    const spectrum s = analyze(f);
    double acc = 0.0;
    for (std::size_t mask = 0; mask < s.size(); ++mask) {
        acc += std::popcount(mask) * s.coeffs[mask] * s.coeffs[mask];
    }
    return acc;
}

double integral_j1(const spectrum& s, int i, int j) {
    check_pair_args(s.n, i, j);
    const std::size_t need = (std::size_t{1} << (i - 1)) | (std::size_t{1} << (j - 1));
    double acc = 0.0;
    for (std::size_t mask = 0; mask < s.size(); ++mask) {
        if ((mask & need) != need) continue;
        const double k = static_cast<double>(std::popcount(mask));
        acc += s.coeffs[mask] * s.coeffs[mask] / (2.0 * k * (k - 1.0));
    }
    return acc;
}

double integral_j2(const spectrum& s, int i, int j) {
    check_pair_args(s.n, i, j);
    const std::size_t need = (std::size_t{1} << (i - 1)) | (std::size_t{1} << (j - 1));
    double acc = 0.0;
    for (std::size_t mask = 0; mask < s.size(); ++mask) {
        if ((mask & need) != need) continue;
        const double k = static_cast<double>(std::popcount(mask));
        acc += s.coeffs[mask] * s.coeffs[mask] / (2.0 * (k - 1.0));
    }
    return acc;
}

double integral_j1(const truth_table& f, int i, int j) { return integral_j1(analyze(f), i, j); }
double integral_j2(const truth_table& f, int i, int j) { return integral_j2(analyze(f), i, j); }

namespace {

struct simpson_state {
    const truth_table* g;
    weighted_integral which;
    long evals = 0;
    long max_evals = 200000;

    double integrand(double t) {
        if (++evals > max_evals) {
            throw quadrature_error("integral_quadrature: evaluation budget exceeded");
        }
        const truth_table ht = heat_apply(*g, heat_time(t));
        const double nsq = lp_norm(ht, 2.0);
        const double weight =
            which == weighted_integral::j1 ? std::expm1(2.0 * t) : std::exp(2.0 * t);
        return weight * nsq * nsq;
    }

    double recurse(double a, double b, double fa, double fm, double fb, double whole, double tol,
                   int depth) {
        const double m = 0.5 * (a + b);
        const double lm = 0.5 * (a + m);
        const double rm = 0.5 * (m + b);
        const double flm = integrand(lm);
        const double frm = integrand(rm);
        const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        const double delta = left + right - whole;
        if (depth <= 0) {
            throw quadrature_error("integral_quadrature: adaptive Simpson depth exhausted");
        }
        if (std::fabs(delta) <= 15.0 * tol) {
            return left + right + delta / 15.0;
        }
        return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
               recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
    }
};

}  // namespace

double integral_quadrature(const truth_table& f, int i, int j, weighted_integral which) {
    constexpr double t_max = 20.0;
    constexpr double tol = 1e-9;
    // Seed panels resolve the bump near t=0; the integrand decays like
    // e^{-2t} afterwards and a single coarse interval would miss the mass.
    const double panels[] = {0.0, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 4.0, 6.0, 8.0, 12.0, t_max};
    constexpr int n_panels = static_cast<int>(sizeof(panels) / sizeof(panels[0])) - 1;

    const truth_table g = d_pair(f, i, j);
    simpson_state st{&g, which};

    // Tail beyond t_max: the spectrum of d_pair lives on masks of size >= 2,
    // so ||P_t g||_2^2 <= e^{-4t} ||g||_2^2, and both weights are <= e^{2t}.
    std::vector<double> scratch;
    const double gsq = mean_of_squares(g.values, scratch);
    const double tail_bound = gsq * std::exp(-2.0 * t_max) / 2.0;
    if (tail_bound > tol * 0.1) {
        throw quadrature_error("integral_quadrature: truncation tail exceeds tolerance");
    }

    double acc = 0.0;
    for (int p = 0; p < n_panels; ++p) {
        const double a = panels[p];
        const double b = panels[p + 1];
        const double fa = st.integrand(a);
        const double fb = st.integrand(b);
        const double fm = st.integrand(0.5 * (a + b));
        const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        acc += st.recurse(a, b, fa, fm, fb, whole, tol / n_panels, 48);
    }
    return acc;
}

double entropy(const truth_table& f) {
    std::vector<double> sq(f.size());
    std::vector<double> ent(f.size());
    for (std::size_t m = 0; m < f.size(); ++m) {
        const double v2 = f.values[m] * f.values[m];
        sq[m] = v2;
        ent[m] = v2 == 0.0 ? 0.0 : v2 * std::log(v2);
    }
    const double inv = 1.0 / static_cast<double>(f.size());
    const double e_sq = pairwise_sum(sq) * inv;
    const double e_ent = pairwise_sum(ent) * inv;
    return e_sq == 0.0 ? e_ent : e_ent - e_sq * std::log(e_sq);
}

double effective_alpha(const influence_report& rep) {
    const int n = rep.n;
    double sum1 = 0.0;
    for (double iij : rep.pair_influence) {
        if (iij == 0.0) continue;
        const double l = std::log(2.0 / iij);
        sum1 += 2.0 * iij / (l * l);
    }
    double worst_row = 0.0;
    for (int i = 1; i <= n; ++i) {
        double row = 0.0;
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            const double iij = rep.pair(i, j);
            if (iij == 0.0) continue;
            if (iij >= 1.0) {
                row = std::numeric_limits<double>::infinity();
                break;
            }
            row += iij / std::log(1.0 / iij);
        }
        worst_row = std::max(worst_row, row);
    }
    const double term2 = (n / std::log(static_cast<double>(n))) * worst_row;
    return std::max(sum1, term2);
}

double effective_alpha(const truth_table& f) {
    if (!is_boolean(f)) {
        throw std::invalid_argument("effective_alpha requires a Boolean table");
    }
    return effective_alpha(make_influence_report(f));
}

}  // namespace walsh
