#pragma once

#include <optional>
#include <string>
#include <vector>

namespace walsh {

/// Every lemma/theorem check this library can run.
enum class statement {
    semigroup_identity,
    lemma_above1,
    lemma_estimate,
    lemma_mi,
    lemma_estimate2,
    scalar_elementary,
    scalar_asymptota,
    lemma_trick,
    hypercontractivity,
    log_sobolev,
    isoperimetry,
    corollary_3values,
    theorem_additional,
    theorem_main,
    remark_generalized,
    main2_chain,
};

inline constexpr int statement_count = 16;

const char* statement_name(statement s);

/// Outcome of one statement check.
///
/// Uniform convention: slack = rhs - lhs, and pass implies slack >= -tol.
/// Identity checks put the two computed routes in lhs/rhs; dichotomies put
/// the winning branch's value/bound there and the branch tag in note.
struct verdict {
    statement id;
    bool applicable = true;
    bool pass = false;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    std::optional<int> witness;  // coordinate or mask payload
    std::vector<int> flagged;    // coordinates skipped by main2_chain
    std::string note;            // violated precondition, or branch tag

    bool failed() const { return applicable && !pass; }
};

// Formats a double with 17 significant digits; infinities and NaN become
// the JSON strings "inf"/"-inf"/"nan" so every line stays machine-readable.
std::string format_real(double x);

// One JSON line per check: fn identifies the function, params is a JSON
// object fragment (may be empty -> "{}").
std::string verdict_json_line(const std::string& fn, const verdict& v,
                              const std::string& params_json = "{}");

}  // namespace walsh
