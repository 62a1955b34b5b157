#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "walsh/truth_table.hpp"
#include "walsh/verdict.hpp"
#include "walsh/zoo.hpp"

namespace walsh {

enum class suite_kind { identities, inequalities, theorems, all };
enum class run_mode { exhaustive, sample, examples };

suite_kind suite_from_name(const std::string& name);
run_mode mode_from_name(const std::string& name);

/// One verification run: which checks, over which functions, how parallel.
struct run_config {
    suite_kind suite = suite_kind::all;
    run_mode mode = run_mode::exhaustive;
    int n = 4;
    int count = 1000;                 // sampled functions
    std::uint64_t seed = 0;
    bool seed_set = false;            // sampling requires an explicit seed
    double c_main = 20.0;             // theorem constant
    int workers = 1;
};

struct statement_stats {
    long checked = 0;
    long applicable = 0;
    long passed = 0;
    double min_slack = 0.0;  // over applicable rows; meaningless when applicable == 0
};

struct suite_summary {
    std::array<statement_stats, statement_count> stats{};
    long failures() const;
    long total_checked() const;
    std::string to_text() const;  // one line per exercised statement, then a total line
};

// Runs every check of the suite over the configured function set, writing one
// JSON line per check to verdict_stream. Deterministic: identical configs give
// byte-identical streams, and the worker count never changes the bytes.
suite_summary run_verify(const run_config& cfg, std::ostream& verdict_stream);

// Fixed zoo walked by `--mode examples`.
std::vector<function_spec> example_specs();

// CSV scans of the two scaling examples; headers are part of the format.
void scan_vee(int n_min, int n_max, std::ostream& csv);
void scan_tribes(const std::vector<std::pair<int, int>>& configs, std::ostream& csv);

// Report writers shared by the CLI.
void write_spectrum_csv(const truth_table& f, std::ostream& out);
void write_spectrum_json(const truth_table& f, std::ostream& out);
std::string constants_json();

}  // namespace walsh
