#pragma once

#include <optional>

#include "walsh/influences.hpp"
#include "walsh/operators.hpp"
#include "walsh/truth_table.hpp"
#include "walsh/verdict.hpp"

namespace walsh {

/// Constants of the main dichotomy theorem, derived by scanning
/// kappa = min(inf_{n>=2} n/(16 ln n), inf_{n>=2} n/ln^2 n) and
/// C = max(1/kappa, 20).
struct constants {
    double kappa = 0.0;
    double c_main = 0.0;
    int argmin_n1 = 0;  // minimizer of n/(16 ln n)
    int argmin_n2 = 0;  // minimizer of n/ln^2 n
    std::string to_json() const;
};

// Scans n in [2,1000]; both objectives are eventually increasing and the
// scan asserts monotone growth over the last 100 points (std::logic_error
// if the bound were ever too small).
constants compute_constants();

enum class scalar_variant { elementary, asymptota };

// Scalar dichotomy behind the main theorems. Preconditions z in [0,1/4) and
// 0 <= x <= y <= x^2 + z; the variant picks the branch thresholds
// (y <= 2z or x >= 1-2z) vs (y <= z+4z^2 or x >= 1-z-4z^2).
verdict check_scalar_lemma(double x, double y, double z, scalar_variant variant);

verdict check_lemma_above1(const truth_table& f);
verdict check_lemma_estimate(const truth_table& f, int i, int j);
verdict check_lemma_mi(const truth_table& f, int i);
verdict check_lemma_estimate2(const truth_table& f, int i, int j);
verdict check_lemma_trick(const truth_table& f, int i);
verdict check_hypercontractivity(const truth_table& g, heat_time t);
verdict check_log_sobolev(const truth_table& g);
verdict check_isoperimetry(const truth_table& h);   // h must be {0,1}-valued
verdict check_corollary_3values(const truth_table& g);
verdict check_theorem_additional(const truth_table& f);
verdict check_theorem_main(const truth_table& f, double c);
verdict check_remark_generalized(const truth_table& f, double c);
verdict check_main2_chain(const truth_table& f);

/// Shared-state runner for many checks on one function: the spectrum is
/// analyzed once and the influence report is built on first use.
class function_checks {
  public:
    explicit function_checks(const truth_table& f);

    const truth_table& table() const { return *f_; }
    const spectrum& spec() const { return s_; }
    bool boolean() const { return boolean_; }
    const influence_report& report() const;

    verdict lemma_above1() const;
    verdict lemma_mi(int i) const;
    verdict lemma_estimate(int i, int j) const;
    verdict lemma_estimate2(int i, int j) const;
    verdict lemma_trick(int i) const;
    verdict theorem_additional() const;
    verdict theorem_main(double c) const;
    verdict remark_generalized(double c) const;
    verdict main2_chain() const;

  private:
    const truth_table* f_;
    spectrum s_;
    bool boolean_;
    mutable std::optional<influence_report> rep_;
};

}  // namespace walsh
