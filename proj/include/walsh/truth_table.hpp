#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace walsh {

// Dimension bounds for all functions on the discrete cube handled by this
// library. The upper bound keeps a dense double table at n=24 within 128 MiB.
inline constexpr int min_dimension = 2;
inline constexpr int max_dimension = 24;

/// Dense real-valued function on {-1,1}^n.
///
/// Entry m holds f(x(m)) where coordinate i of x(m) is -1 iff bit i-1 of m
/// is set (bit clear means +1). With that convention the Walsh character
/// w_A(x(m)) is (-1)^popcount(A & m) and the analysis transform is the
/// plain Hadamard butterfly.
struct truth_table {
    int n = 0;
    std::vector<double> values;

    truth_table() = default;
    explicit truth_table(int n_);                      // zero-filled
    truth_table(int n_, std::vector<double> values_);  // validates size/finiteness

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t m) const { return values[m]; }
    double& operator[](std::size_t m) { return values[m]; }
};

/// Dense Walsh-Fourier coefficients, indexed by subset bitmask A.
struct spectrum {
    int n = 0;
    std::vector<double> coeffs;

    spectrum() = default;
    explicit spectrum(int n_);
    spectrum(int n_, std::vector<double> coeffs_);

    std::size_t size() const { return coeffs.size(); }
    double operator[](std::size_t mask) const { return coeffs[mask]; }
    double& operator[](std::size_t mask) { return coeffs[mask]; }
};

// In-place unnormalized Walsh-Hadamard transform; self-inverse up to 2^n.
void fwht_inplace(std::span<double> a);

// Fixed-order pairwise (cascade) summation; deterministic and O(log n) error.
double pairwise_sum(std::span<const double> xs);

spectrum analyze(const truth_table& f);
truth_table synthesize(const spectrum& s);

double expectation(const truth_table& f);
double lp_norm(const truth_table& f, double p);  // (E|f|^p)^(1/p), p >= 1
bool is_boolean(const truth_table& f);           // every entry exactly +-1

}  // namespace walsh
