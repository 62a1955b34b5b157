#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "walsh/truth_table.hpp"

namespace walsh {

enum class family {
    constant,
    dictator,
    antidictator,
    walsh_char,
    majority,
    and2,
    tribes,
    vee,
    point_indicator,
    random_boolean,
    random_real,
    file,
};

/// Symbolic description of a generated function: family plus its parameters.
/// Parses from "family:key=val,key=val", e.g. "tribes:n=12,w=3" or
/// "file:path=tt.txt".
struct function_spec {
    family fam = family::constant;
    int n = 0;
    int coord = 1;                 // i: dictator/antidictator
    std::uint64_t mask = 0;        // A: walsh_char; point index for point_indicator
    int width = 0;                 // w: tribes
    int sign = +1;                 // constant
    std::optional<std::uint64_t> seed;
    std::string path;              // file

    static function_spec parse(const std::string& text);
    std::string to_string() const;
};

// Deterministic table for the spec. Throws std::invalid_argument on any
// parameter outside the family's constraints.
truth_table generate(const function_spec& spec);

// Divisor w of n nearest to log2(n / ln n), ties toward the smaller divisor.
// Heuristic block width for tribes; requires n >= 4.
int default_tribe_width(int n);

}  // namespace walsh
