#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "walsh/truth_table.hpp"

namespace walsh {

/// Raised on malformed truth-table files.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text format: line 1 is "n=<k>", line 2 is exactly 2^k characters from
// {0,1}; character m encodes f(x(m)) = +1 for '0' and -1 for '1'.
truth_table read_table(std::istream& in);
truth_table read_table_file(const std::string& path);
void write_table(std::ostream& out, const truth_table& f);

}  // namespace walsh
