#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "walsh/driver.hpp"
#include "walsh/influences.hpp"
#include "walsh/table_io.hpp"
#include "walsh/verify.hpp"
#include "walsh/zoo.hpp"

namespace {

// exit codes: 0 success, 1 check failure, 2 usage/IO error
constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

struct output_target {
    std::string path;  // empty = stdout
    std::ofstream file;

    std::ostream& open() {
        if (path.empty()) return std::cout;
        file.open(path);
        if (!file) throw std::runtime_error("cannot open output file: " + path);
        return file;
    }
};

walsh::function_spec spec_with_overrides(const std::string& text, std::optional<int> n,
                                         std::optional<int> w, std::optional<int> i) {
    walsh::function_spec spec = walsh::function_spec::parse(text);
    if (n) spec.n = *n;
    if (w) spec.width = *w;
    if (i) spec.coord = *i;
    return spec;
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& text) {
    std::vector<std::pair<int, int>> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(pos, comma - pos);
        pos = comma + 1;
        const std::size_t colon = item.find(':');
        if (colon == std::string::npos) {
            throw std::invalid_argument("tribes config must be n:w, got: " + item);
        }
        out.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
    }
    if (out.empty()) throw std::invalid_argument("empty tribes config list");
    return out;
}

std::pair<int, int> parse_range(const std::string& text) {
    const std::size_t dots = text.find("..");
    if (dots == std::string::npos) {
        const int n = std::stoi(text);
        return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Walsh-Fourier spectra, influences, and theorem checks on the discrete cube"};
    app.require_subcommand(1);

    std::string spec_text;
    std::optional<int> opt_n, opt_w, opt_i;
    output_target out;
    std::string format = "csv";

    CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "Walsh-Fourier coefficients");
    spectrum_cmd->add_option("spec", spec_text, "function spec, e.g. vee:n=4")->required();
    spectrum_cmd->add_option("--n", opt_n, "override dimension");
    spectrum_cmd->add_option("--w", opt_w, "override tribe width");
    spectrum_cmd->add_option("--i", opt_i, "override coordinate");
    spectrum_cmd->add_option("--out", out.path, "output file (default stdout)");
    spectrum_cmd->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI::App* influences_cmd = app.add_subcommand("influences", "influence report as JSON");
    influences_cmd->add_option("spec", spec_text, "function spec")->required();
    influences_cmd->add_option("--n", opt_n, "override dimension");
    influences_cmd->add_option("--w", opt_w, "override tribe width");
    influences_cmd->add_option("--i", opt_i, "override coordinate");
    influences_cmd->add_option("--out", out.path, "output file (default stdout)");

    std::string suite_name = "all";
    std::string mode_name;
    walsh::run_config cfg;
    std::uint64_t seed_arg = 0;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run lemma/theorem checks");
    verify_cmd->add_option("suite", suite_name, "identities|inequalities|theorems|all")
        ->required();
    verify_cmd->add_option("--mode", mode_name, "exhaustive|sample|examples")->required();
    verify_cmd->add_option("--n", cfg.n, "dimension (exhaustive needs n <= 4)");
    verify_cmd->add_option("--count", cfg.count, "sampled function count");
    CLI::Option* seed_opt = verify_cmd->add_option("--seed", seed_arg, "sampling seed");
    verify_cmd->add_option("--c", cfg.c_main, "theorem constant override");
    verify_cmd->add_option("--workers", cfg.workers, "parallel workers");
    verify_cmd->add_option("--out", out.path, "verdict stream file (default stdout)");

    std::string scan_family;
    std::string pairs_text = "8:2,12:3,16:4,20:4";
    std::string range_text = "3..12";
    CLI::App* scan_cmd = app.add_subcommand("scan", "CSV scaling scans");
    scan_cmd->add_option("family", scan_family, "tribes or vee")
        ->required()
        ->check(CLI::IsMember({"tribes", "vee"}));
    scan_cmd->add_option("--pairs", pairs_text, "tribes configs n:w,n:w,...");
    scan_cmd->add_option("--n", range_text, "vee dimension range A..B");
    scan_cmd->add_option("--out", out.path, "output file (default stdout)");

    CLI::App* constants_cmd = app.add_subcommand("constants", "theorem constants as JSON");
    constants_cmd->add_option("--out", out.path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (spectrum_cmd->parsed()) {
            const walsh::truth_table f =
                walsh::generate(spec_with_overrides(spec_text, opt_n, opt_w, opt_i));
            std::ostream& os = out.open();
            if (format == "json") {
                walsh::write_spectrum_json(f, os);
            } else {
                walsh::write_spectrum_csv(f, os);
            }
            return exit_ok;
        }
        if (influences_cmd->parsed()) {
            const walsh::truth_table f =
                walsh::generate(spec_with_overrides(spec_text, opt_n, opt_w, opt_i));
            out.open() << walsh::make_influence_report(f).to_json() << "\n";
            return exit_ok;
        }
        if (verify_cmd->parsed()) {
            cfg.suite = walsh::suite_from_name(suite_name);
            cfg.mode = walsh::mode_from_name(mode_name);
            if (seed_opt->count() > 0) {
                cfg.seed = seed_arg;
                cfg.seed_set = true;
            }
            const walsh::suite_summary summary = walsh::run_verify(cfg, out.open());
            std::cout << summary.to_text();
            return summary.failures() == 0 ? exit_ok : exit_check_failed;
        }
        if (scan_cmd->parsed()) {
            std::ostream& os = out.open();
            if (scan_family == "tribes") {
                walsh::scan_tribes(parse_pairs(pairs_text), os);
            } else {
                const auto [lo, hi] = parse_range(range_text);
                walsh::scan_vee(lo, hi, os);
            }
            return exit_ok;
        }
        if (constants_cmd->parsed()) {
            out.open() << walsh::constants_json() << "\n";
            return exit_ok;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
