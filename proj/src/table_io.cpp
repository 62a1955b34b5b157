#include "walsh/table_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace walsh {

truth_table read_table(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) {
        throw parse_error("truth-table file: missing header line");
    }
    if (header.rfind("n=", 0) != 0) {
        throw parse_error("truth-table file: header must be n=<k>");
    }
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(header.substr(2), &used);
        if (used != header.size() - 2) throw parse_error("");
    } catch (...) {
        throw parse_error("truth-table file: malformed dimension in header");
    }
    if (n < min_dimension || n > max_dimension) {
        throw parse_error("truth-table file: dimension outside [2,24]");
    }
    std::string bits;
    if (!std::getline(in, bits)) {
        throw parse_error("truth-table file: missing value line");
    }
    const std::size_t expect = std::size_t{1} << n;
    if (bits.size() != expect) {
        throw parse_error("truth-table file: value line has " + std::to_string(bits.size()) +
                          " characters, expected " + std::to_string(expect));
    }
    truth_table f(n);
    for (std::size_t m = 0; m < expect; ++m) {
        switch (bits[m]) {
            case '0': f.values[m] = 1.0; break;
            case '1': f.values[m] = -1.0; break;
            default: throw parse_error("truth-table file: character not in {0,1}");
        }
    }
    return f;
}

truth_table read_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw parse_error("cannot open truth-table file: " + path);
    }
    return read_table(in);
}

void write_table(std::ostream& out, const truth_table& f) {
    if (!is_boolean(f)) {
        throw std::invalid_argument("write_table: only +-1 valued tables have a text form");
    }
    out << "n=" << f.n << "\n";
    for (double v : f.values) out << (v > 0 ? '0' : '1');
    out << "\n";
}

}  // namespace walsh
