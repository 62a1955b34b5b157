#include "walsh/truth_table.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace walsh {

namespace {

void check_dimension(int n) {
    if (n < min_dimension || n > max_dimension) {
        throw std::invalid_argument("dimension n=" + std::to_string(n) +
                                    " outside supported range [2,24]");
    }
}

void check_entries(int n, const std::vector<double>& xs, const char* what) {
    if (xs.size() != (std::size_t{1} << n)) {
        throw std::invalid_argument(std::string(what) + ": expected 2^n entries");
    }
    for (double x : xs) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument(std::string(what) + ": non-finite entry");
        }
    }
}

}  // namespace

truth_table::truth_table(int n_) : n(n_) {
    check_dimension(n);
    values.assign(std::size_t{1} << n, 0.0);
}

truth_table::truth_table(int n_, std::vector<double> values_) : n(n_), values(std::move(values_)) {
    check_dimension(n);
    check_entries(n, values, "truth_table");
}

spectrum::spectrum(int n_) : n(n_) {
    check_dimension(n);
    coeffs.assign(std::size_t{1} << n, 0.0);
}

spectrum::spectrum(int n_, std::vector<double> coeffs_) : n(n_), coeffs(std::move(coeffs_)) {
    check_dimension(n);
    check_entries(n, coeffs, "spectrum");
}

void fwht_inplace(std::span<double> a) {
    const std::size_t sz = a.size();
    for (std::size_t h = 1; h < sz; h <<= 1) {
        for (std::size_t base = 0; base < sz; base += h << 1) {
            for (std::size_t k = base; k < base + h; ++k) {
                const double u = a[k];
                const double v = a[k + h];
                a[k] = u + v;
                a[k + h] = u - v;
            }
        }
    }
}

double pairwise_sum(std::span<const double> xs) {
    if (xs.size() <= 64) {
        double acc = 0.0;
        for (double x : xs) acc += x;
        return acc;
    }
    const std::size_t half = xs.size() / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

spectrum analyze(const truth_table& f) {
    spectrum s(f.n, f.values);
    fwht_inplace(s.coeffs);
    const double scale = 1.0 / static_cast<double>(std::size_t{1} << f.n);
    for (double& c : s.coeffs) c *= scale;
    return s;
}

truth_table synthesize(const spectrum& s) {
    truth_table f(s.n, s.coeffs);
    fwht_inplace(f.values);
    return f;
}

double expectation(const truth_table& f) {
    return pairwise_sum(f.values) / static_cast<double>(f.size());
}

double lp_norm(const truth_table& f, double p) {
    if (!(p >= 1.0)) {
        throw std::invalid_argument("lp_norm: p must be >= 1");
    }
    std::vector<double> powers(f.size());
    for (std::size_t m = 0; m < f.size(); ++m) {
        powers[m] = std::pow(std::fabs(f.values[m]), p);
    }
    const double mean = pairwise_sum(powers) / static_cast<double>(f.size());
    return std::pow(mean, 1.0 / p);
}

bool is_boolean(const truth_table& f) {
    for (double v : f.values) {
        if (v != 1.0 && v != -1.0) return false;
    }
    return true;
}

}  // namespace walsh
