#include "walsh/verdict.hpp"

#include <cmath>
#include <cstdio>

namespace walsh {

const char* statement_name(statement s) {
    switch (s) {
        case statement::semigroup_identity: return "semigroup_identity";
        case statement::lemma_above1: return "lemma_above1";
        case statement::lemma_estimate: return "lemma_estimate";
        case statement::lemma_mi: return "lemma_mi";
        case statement::lemma_estimate2: return "lemma_estimate2";
        case statement::scalar_elementary: return "scalar_elementary";
        case statement::scalar_asymptota: return "scalar_asymptota";
        case statement::lemma_trick: return "lemma_trick";
        case statement::hypercontractivity: return "hypercontractivity";
        case statement::log_sobolev: return "log_sobolev";
        case statement::isoperimetry: return "isoperimetry";
        case statement::corollary_3values: return "corollary_3values";
        case statement::theorem_additional: return "theorem_additional";
        case statement::theorem_main: return "theorem_main";
        case statement::remark_generalized: return "remark_generalized";
        case statement::main2_chain: return "main2_chain";
    }
    return "unknown";
}

std::string format_real(double x) {
    if (std::isnan(x)) return "\"nan\"";
    if (std::isinf(x)) return x > 0 ? "\"inf\"" : "\"-inf\"";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string verdict_json_line(const std::string& fn, const verdict& v,
                              const std::string& params_json) {
    std::string out;
    out.reserve(256);
    out += "{\"fn\":\"";
    out += fn;
    out += "\",\"statement\":\"";
    out += statement_name(v.id);
    out += "\",\"params\":";
    out += params_json;
    out += ",\"applicable\":";
    out += v.applicable ? "true" : "false";
    out += ",\"pass\":";
    out += (v.applicable && v.pass) ? "true" : "false";
    out += ",\"lhs\":";
    out += format_real(v.lhs);
    out += ",\"rhs\":";
    out += format_real(v.rhs);
    out += ",\"slack\":";
    out += format_real(v.slack);
    out += ",\"witness\":";
    out += v.witness ? std::to_string(*v.witness) : "null";
    if (!v.flagged.empty()) {
        out += ",\"flagged\":[";
        for (std::size_t k = 0; k < v.flagged.size(); ++k) {
            if (k) out += ',';
            out += std::to_string(v.flagged[k]);
        }
        out += ']';
    }
    if (!v.note.empty()) {
        out += ",\"note\":\"";
        out += v.note;
        out += '"';
    }
    out += "}";
    return out;
}

}  // namespace walsh
