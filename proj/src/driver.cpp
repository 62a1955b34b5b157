#include "walsh/driver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "walsh/influences.hpp"
#include "walsh/operators.hpp"
#include "walsh/rng.hpp"
#include "walsh/verify.hpp"

namespace walsh {

namespace {

constexpr int suite_identities = 1;
constexpr int suite_inequalities = 2;
constexpr int suite_theorems = 4;

int suite_mask(suite_kind s) {
    switch (s) {
        case suite_kind::identities: return suite_identities;
        case suite_kind::inequalities: return suite_inequalities;
        case suite_kind::theorems: return suite_theorems;
        case suite_kind::all: return suite_identities | suite_inequalities | suite_theorems;
    }
    return 0;
}

const double semigroup_times[] = {0.0, 0.37, 1.5};
const double hyper_times[] = {0.0, 0.1, 0.5, 1.0, 2.0, 10.0};
const double scalar_z_grid[] = {0.01, 0.05, 0.1, 0.2, 0.249};

std::string param_i(int i) { return "{\"i\":" + std::to_string(i) + "}"; }

std::string param_ij(int i, int j) {
    return "{\"i\":" + std::to_string(i) + ",\"j\":" + std::to_string(j) + "}";
}

std::string param_ijt(int i, int j, double t) {
    return "{\"i\":" + std::to_string(i) + ",\"j\":" + std::to_string(j) +
           ",\"t\":" + format_real(t) + "}";
}

std::string param_t(double t) { return "{\"t\":" + format_real(t) + "}"; }

std::string param_c(double c) { return "{\"c\":" + format_real(c) + "}"; }

struct collector {
    std::string lines;
    suite_summary sum;

    void add(const std::string& fn, const verdict& v, const std::string& params = "{}") {
        lines += verdict_json_line(fn, v, params);
        lines += '\n';
        statement_stats& st = sum.stats[static_cast<std::size_t>(v.id)];
        ++st.checked;
        if (v.applicable) {
            if (st.applicable == 0 || v.slack < st.min_slack) st.min_slack = v.slack;
            ++st.applicable;
            if (v.pass) ++st.passed;
        }
    }
};

void merge(suite_summary& into, const suite_summary& from) {
    for (int k = 0; k < statement_count; ++k) {
        statement_stats& a = into.stats[k];
        const statement_stats& b = from.stats[k];
        if (b.applicable > 0 && (a.applicable == 0 || b.min_slack < a.min_slack)) {
            a.min_slack = b.min_slack;
        }
        a.checked += b.checked;
        a.applicable += b.applicable;
        a.passed += b.passed;
    }
}

truth_table table_from_index(int n, std::uint64_t idx) {
    truth_table f(n);
    for (std::size_t m = 0; m < f.size(); ++m) {
        f.values[m] = (idx >> m) & 1 ? -1.0 : 1.0;
    }
    return f;
}

bool is_zero_one(const truth_table& f) {
    for (double v : f.values) {
        if (v != 0.0 && v != 1.0) return false;
    }
    return true;
}

truth_table recode(const truth_table& f, double sign) {
    truth_table h(f.n);
    for (std::size_t m = 0; m < f.size(); ++m) h.values[m] = (1.0 + sign * f.values[m]) / 2.0;
    return h;
}

// Aggregates the full x,y grid for one (variant, z) into a single verdict;
// the worst-margin triple supplies lhs/rhs and the triple count lands in note.
verdict scalar_grid_verdict(scalar_variant variant, double z) {
    verdict agg;
    agg.id = variant == scalar_variant::elementary ? statement::scalar_elementary
                                                   : statement::scalar_asymptota;
    agg.pass = true;
    agg.slack = std::numeric_limits<double>::infinity();
    long triples = 0;
    std::string worst_note;
    for (int xi = 0; xi <= 1300; ++xi) {
        const double x = xi / 1000.0;
        for (int yi = xi; yi <= 1300; ++yi) {
            const double y = yi / 1000.0;
            if (y > x * x + z) break;
            const verdict v = check_scalar_lemma(x, y, z, variant);
            if (!v.applicable) continue;
            ++triples;
            if (v.slack < agg.slack) {
                agg.slack = v.slack;
                agg.lhs = v.lhs;
                agg.rhs = v.rhs;
                worst_note = v.note;
            }
            if (!v.pass) agg.pass = false;
        }
    }
    agg.note = worst_note + ";triples=" + std::to_string(triples);
    return agg;
}

// Runs every structurally applicable check of the masked suites on one table.
// Boolean-only checks are invoked only on Boolean tables; statement-level
// preconditions still produce inapplicable rows.
void run_checks_on(collector& out, const std::string& label, const truth_table& f, int mask,
                   const run_config& cfg) {
    const function_checks fc(f);
    const int n = f.n;

    if (mask & suite_identities) {
        out.add(label, fc.lemma_above1());
        for (int i = 1; i <= n; ++i) out.add(label, fc.lemma_mi(i), param_i(i));
        for (int j : {2, n}) {
            if (j == n && n == 2) continue;
            for (double t : semigroup_times) {
                out.add(label, check_semigroup_derivative_identity(f, 1, j, heat_time(t)),
                        param_ijt(1, j, t));
            }
        }
    }

    if (mask & suite_inequalities) {
        if (fc.boolean()) {
            for (int i = 1; i <= n; ++i) {
                for (int j = i + 1; j <= n; ++j) {
                    out.add(label, fc.lemma_estimate(i, j), param_ij(i, j));
                    out.add(label, fc.lemma_estimate2(i, j), param_ij(i, j));
                }
            }
            for (int i = 1; i <= n; ++i) out.add(label, fc.lemma_trick(i), param_i(i));
            out.add(label, check_isoperimetry(recode(f, -1.0)), "{\"recoding\":\"minus\"}");
            out.add(label, check_isoperimetry(recode(f, 1.0)), "{\"recoding\":\"plus\"}");
            for (int i = 1; i <= n; ++i) {
                out.add(label, check_corollary_3values(partial_i(f, i)), param_i(i));
            }
        } else if (is_zero_one(f)) {
            out.add(label, check_isoperimetry(f));
        }
        for (double t : hyper_times) {
            out.add(label, check_hypercontractivity(f, heat_time(t)), param_t(t));
        }
        out.add(label, check_log_sobolev(f));
    }

    if ((mask & suite_theorems) && fc.boolean()) {
        out.add(label, fc.theorem_main(cfg.c_main), param_c(cfg.c_main));
        out.add(label, fc.remark_generalized(cfg.c_main), param_c(cfg.c_main));
        out.add(label, fc.theorem_additional());
        out.add(label, fc.main2_chain());
    }
}

void run_one_job(collector& out, const run_config& cfg, int mask, std::uint64_t idx) {
    switch (cfg.mode) {
        case run_mode::exhaustive: {
            const std::string label =
                "exhaustive:n=" + std::to_string(cfg.n) + ",idx=" + std::to_string(idx);
            run_checks_on(out, label, table_from_index(cfg.n, idx), mask, cfg);
            break;
        }
        case run_mode::sample: {
            const std::string stem = "sample:seed=" + std::to_string(cfg.seed) +
                                     ",n=" + std::to_string(cfg.n) +
                                     ",idx=" + std::to_string(idx);
            // real tables carry the identity and semigroup-side checks,
            // Boolean tables everything requiring +-1 values
            const int real_mask = mask & (suite_identities | suite_inequalities);
            const int bool_mask = mask & (suite_inequalities | suite_theorems);
            if (real_mask) {
                function_spec spec;
                spec.fam = family::random_real;
                spec.n = cfg.n;
                spec.seed = derive_seed(cfg.seed, 2 * idx + 1);
                run_checks_on(out, stem + ",kind=real", generate(spec), real_mask, cfg);
            }
            if (bool_mask) {
                function_spec spec;
                spec.fam = family::random_boolean;
                spec.n = cfg.n;
                spec.seed = derive_seed(cfg.seed, 2 * idx);
                run_checks_on(out, stem + ",kind=bool", generate(spec), bool_mask, cfg);
            }
            break;
        }
        case run_mode::examples: {
            const function_spec spec = example_specs()[idx];
            run_checks_on(out, spec.to_string(), generate(spec), mask, cfg);
            break;
        }
    }
}

}  // namespace

suite_kind suite_from_name(const std::string& name) {
    if (name == "identities") return suite_kind::identities;
    if (name == "inequalities") return suite_kind::inequalities;
    if (name == "theorems") return suite_kind::theorems;
    if (name == "all") return suite_kind::all;
    throw std::invalid_argument("unknown suite: " + name);
}

run_mode mode_from_name(const std::string& name) {
    if (name == "exhaustive") return run_mode::exhaustive;
    if (name == "sample") return run_mode::sample;
    if (name == "examples") return run_mode::examples;
    throw std::invalid_argument("unknown mode: " + name);
}

long suite_summary::failures() const {
    long acc = 0;
    for (const statement_stats& st : stats) acc += st.applicable - st.passed;
    return acc;
}

long suite_summary::total_checked() const {
    long acc = 0;
    for (const statement_stats& st : stats) acc += st.checked;
    return acc;
}

std::string suite_summary::to_text() const {
    std::string out;
    long checked = 0, applicable = 0, passed = 0;
    for (int k = 0; k < statement_count; ++k) {
        const statement_stats& st = stats[k];
        if (st.checked == 0) continue;
        checked += st.checked;
        applicable += st.applicable;
        passed += st.passed;
        out += "statement=";
        out += statement_name(static_cast<statement>(k));
        out += " checked=" + std::to_string(st.checked);
        out += " applicable=" + std::to_string(st.applicable);
        out += " pass=" + std::to_string(st.passed);
        out += " min_slack=";
        out += st.applicable > 0 ? format_real(st.min_slack) : "n/a";
        out += '\n';
    }
    out += "total checked=" + std::to_string(checked) +
           " applicable=" + std::to_string(applicable) + " pass=" + std::to_string(passed) +
           " failures=" + std::to_string(applicable - passed) + '\n';
    return out;
}

std::vector<function_spec> example_specs() {
    std::vector<function_spec> specs;
    auto push = [&specs](const std::string& text) { specs.push_back(function_spec::parse(text)); };
    push("constant:n=4,sign=1");
    push("constant:n=4,sign=-1");
    push("dictator:n=5,i=2");
    push("antidictator:n=4,i=1");
    push("walsh:n=2,A=3");
    push("walsh:n=4,A=3");
    push("majority:n=3");
    push("majority:n=5");
    push("and2:n=4");
    for (int n = 3; n <= 12; ++n) push("vee:n=" + std::to_string(n));
    push("tribes:n=8,w=2");
    push("tribes:n=12,w=3");
    push("tribes:n=16,w=4");
    push("point_indicator:n=8,A=0");
    push("random_boolean:n=8,seed=1");
    push("random_real:n=8,seed=2");
    return specs;
}

suite_summary run_verify(const run_config& cfg, std::ostream& verdict_stream) {
    if (cfg.workers < 1) throw std::invalid_argument("workers must be >= 1");
    if (cfg.c_main <= 0.0) throw std::invalid_argument("theorem constant must be positive");
    std::uint64_t jobs = 0;
    switch (cfg.mode) {
        case run_mode::exhaustive:
            if (cfg.n < min_dimension || cfg.n > 4) {
                throw std::invalid_argument("exhaustive mode requires 2 <= n <= 4");
            }
            jobs = std::uint64_t{1} << (std::size_t{1} << cfg.n);
            break;
        case run_mode::sample:
            if (!cfg.seed_set) throw std::invalid_argument("sample mode requires a seed");
            if (cfg.count < 1) throw std::invalid_argument("sample count must be >= 1");
            if (cfg.n < min_dimension || cfg.n > max_dimension) {
                throw std::invalid_argument("n outside [2,24]");
            }
            jobs = static_cast<std::uint64_t>(cfg.count);
            break;
        case run_mode::examples:
            jobs = example_specs().size();
            break;
    }
    const int mask = suite_mask(cfg.suite);

    // The scalar grid is function-independent; it leads the stream.
    collector head;
    if (mask & suite_inequalities) {
        for (scalar_variant variant : {scalar_variant::elementary, scalar_variant::asymptota}) {
            for (double z : scalar_z_grid) {
                head.add("scalar_grid", scalar_grid_verdict(variant, z),
                         "{\"z\":" + format_real(z) + "}");
            }
        }
    }

    const int nworkers = static_cast<int>(std::min<std::uint64_t>(cfg.workers, jobs ? jobs : 1));
    std::vector<collector> parts(nworkers);
    std::vector<std::exception_ptr> errors(nworkers);
    std::vector<std::thread> threads;
    threads.reserve(nworkers);
    for (int w = 0; w < nworkers; ++w) {
        const std::uint64_t begin = jobs * w / nworkers;
        const std::uint64_t end = jobs * (w + 1) / nworkers;
        threads.emplace_back([&, w, begin, end]() {
            try {
                for (std::uint64_t idx = begin; idx < end; ++idx) {
                    run_one_job(parts[w], cfg, mask, idx);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (std::thread& t : threads) t.join();
    for (const std::exception_ptr& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    verdict_stream << head.lines;
    suite_summary total = head.sum;
    for (const collector& part : parts) {
        verdict_stream << part.lines;
        merge(total, part.sum);
    }
    return total;
}

void scan_vee(int n_min, int n_max, std::ostream& csv) {
    if (n_min < 3 || n_min > n_max || n_max > max_dimension) {
        throw std::invalid_argument("vee scan needs 3 <= n_min <= n_max <= 24");
    }
    csv << "n,theta,theta_times_2n_over_n,fhat_1,i1\n";
    for (int n = n_min; n <= n_max; ++n) {
        function_spec spec;
        spec.fam = family::vee;
        spec.n = n;
        const truth_table f = generate(spec);
        const influence_report rep = make_influence_report(f);
        const spectrum s = analyze(f);
        const double pow2n = static_cast<double>(std::size_t{1} << n);
        csv << n << ',' << format_real(rep.theta) << ','
            << format_real(rep.theta * pow2n / n) << ',' << format_real(s.coeffs[1]) << ','
            << format_real(rep.influence[0]) << '\n';
    }
}

void scan_tribes(const std::vector<std::pair<int, int>>& configs, std::ostream& csv) {
    csv << "n,w,same_iij,cross_iij,same_iij_norm,cross_iij_norm,same_to_cross_ratio\n";
    for (const auto& [n, w] : configs) {
        if (w < 2 || n / w < 2) {
            throw std::invalid_argument("tribes scan needs width >= 2 and >= 2 tribes");
        }
        function_spec spec;
        spec.fam = family::tribes;
        spec.n = n;
        spec.width = w;
        const influence_report rep = make_influence_report(generate(spec));
        const double same = rep.pair(1, 2);
        const double cross = rep.pair(1, w + 1);
        const double ln = std::log(static_cast<double>(n));
        csv << n << ',' << w << ',' << format_real(same) << ',' << format_real(cross) << ','
            << format_real(same * n / ln) << ',' << format_real(cross * n * n / (ln * ln)) << ','
            << format_real(same / cross) << '\n';
    }
}

void write_spectrum_csv(const truth_table& f, std::ostream& out) {
    const spectrum s = analyze(f);
    out << "mask,coeff\n";
    for (std::size_t mask = 0; mask < s.size(); ++mask) {
        out << mask << ',' << format_real(s.coeffs[mask]) << '\n';
    }
}

void write_spectrum_json(const truth_table& f, std::ostream& out) {
    const spectrum s = analyze(f);
    out << "{\"n\":" << s.n << ",\"coeffs\":[";
    for (std::size_t mask = 0; mask < s.size(); ++mask) {
        if (mask) out << ',';
        out << format_real(s.coeffs[mask]);
    }
    out << "]}\n";
}

std::string constants_json() { return compute_constants().to_json(); }

}  // namespace walsh
