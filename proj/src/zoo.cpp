#include "walsh/zoo.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "walsh/rng.hpp"
#include "walsh/table_io.hpp"

namespace walsh {

namespace {

const char* family_name(family f) {
    switch (f) {
        case family::constant: return "constant";
        case family::dictator: return "dictator";
        case family::antidictator: return "antidictator";
        case family::walsh_char: return "walsh";
        case family::majority: return "majority";
        case family::and2: return "and2";
        case family::tribes: return "tribes";
        case family::vee: return "vee";
        case family::point_indicator: return "point_indicator";
        case family::random_boolean: return "random_boolean";
        case family::random_real: return "random_real";
        case family::file: return "file";
    }
    return "?";
}

family family_from_name(const std::string& name) {
    for (family f : {family::constant, family::dictator, family::antidictator,
                     family::walsh_char, family::majority, family::and2, family::tribes,
                     family::vee, family::point_indicator, family::random_boolean,
                     family::random_real, family::file}) {
        if (name == family_name(f)) return f;
    }
    throw std::invalid_argument("unknown function family: " + name);
}

std::uint64_t parse_u64(const std::string& text, const std::string& key) {
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(text, &used);
        if (used != text.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::invalid_argument("bad integer for " + key + ": " + text);
    }
}

long parse_long(const std::string& text, const std::string& key) {
    try {
        std::size_t used = 0;
        const long v = std::stol(text, &used);
        if (used != text.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw std::invalid_argument("bad integer for " + key + ": " + text);
    }
}

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

}  // namespace

function_spec function_spec::parse(const std::string& text) {
    function_spec spec;
    const std::size_t colon = text.find(':');
    spec.fam = family_from_name(text.substr(0, colon));
    if (colon == std::string::npos) return spec;

    std::string rest = text.substr(colon + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
        std::size_t comma = rest.find(',', pos);
        if (comma == std::string::npos) comma = rest.size();
        const std::string item = rest.substr(pos, comma - pos);
        pos = comma + 1;
        if (item.empty()) continue;
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("function spec item lacks '=': " + item);
        }
        const std::string key = item.substr(0, eq);
        const std::string val = item.substr(eq + 1);
        if (key == "n") {
            spec.n = static_cast<int>(parse_long(val, key));
        } else if (key == "i") {
            spec.coord = static_cast<int>(parse_long(val, key));
        } else if (key == "A") {
            spec.mask = parse_u64(val, key);
        } else if (key == "w") {
            spec.width = static_cast<int>(parse_long(val, key));
        } else if (key == "sign") {
            spec.sign = static_cast<int>(parse_long(val, key));
        } else if (key == "seed") {
            spec.seed = parse_u64(val, key);
        } else if (key == "path") {
            spec.path = val;
        } else {
            throw std::invalid_argument("unknown function spec key: " + key);
        }
    }
    return spec;
}

std::string function_spec::to_string() const {
    std::string out = family_name(fam);
    if (fam == family::file) {
        return out + ":path=" + path;
    }
    out += ":n=" + std::to_string(n);
    switch (fam) {
        case family::constant: out += ",sign=" + std::to_string(sign); break;
        case family::dictator:
        case family::antidictator: out += ",i=" + std::to_string(coord); break;
        case family::walsh_char:
        case family::point_indicator: out += ",A=" + std::to_string(mask); break;
        case family::tribes: out += ",w=" + std::to_string(width); break;
        case family::random_boolean:
        case family::random_real:
            if (seed) out += ",seed=" + std::to_string(*seed);
            break;
        default: break;
    }
    return out;
}

truth_table generate(const function_spec& spec) {
    if (spec.fam == family::file) {
        require(!spec.path.empty(), "file family needs path=");
        return read_table_file(spec.path);
    }
    const int n = spec.n;
    truth_table f(n);  // validates the dimension range
    const std::size_t size = f.size();

    switch (spec.fam) {
        case family::constant: {
            require(spec.sign == 1 || spec.sign == -1, "constant needs sign=+-1");
            for (std::size_t m = 0; m < size; ++m) f.values[m] = spec.sign;
            break;
        }
        case family::dictator:
        case family::antidictator: {
            require(spec.coord >= 1 && spec.coord <= n, "coordinate i outside [1,n]");
            const std::size_t bit = std::size_t{1} << (spec.coord - 1);
            const double flip = spec.fam == family::antidictator ? -1.0 : 1.0;
            for (std::size_t m = 0; m < size; ++m) {
                f.values[m] = flip * ((m & bit) ? -1.0 : 1.0);
            }
            break;
        }
        case family::walsh_char: {
            require(spec.mask < size, "walsh mask A outside [0,2^n)");
            for (std::size_t m = 0; m < size; ++m) {
                f.values[m] = (std::popcount(m & spec.mask) & 1) ? -1.0 : 1.0;
            }
            break;
        }
        case family::majority: {
            require(n % 2 == 1, "majority requires odd n");
            for (std::size_t m = 0; m < size; ++m) {
                // popcount(m) counts -1 coordinates
                f.values[m] = 2 * std::popcount(m) < n ? 1.0 : -1.0;
            }
            break;
        }
        case family::and2: {
            for (std::size_t m = 0; m < size; ++m) f.values[m] = (m & 3) == 0 ? 1.0 : -1.0;
            break;
        }
        case family::tribes: {
            require(spec.width >= 1 && n % spec.width == 0, "tribes needs w >= 1 dividing n");
            const int blocks = n / spec.width;
            const std::size_t block_mask = (std::size_t{1} << spec.width) - 1;
            for (std::size_t m = 0; m < size; ++m) {
                double v = -1.0;
                for (int b = 0; b < blocks; ++b) {
                    if (((m >> (b * spec.width)) & block_mask) == 0) {
                        v = 1.0;
                        break;
                    }
                }
                f.values[m] = v;
            }
            break;
        }
        case family::vee: {
            // x_1 * (1 - 2 prod_{k>=2} (1+x_k)/2): a dictator flipped on the
            // two points where x_2..x_n are all +1.
            for (std::size_t m = 0; m < size; ++m) {
                const double x1 = (m & 1) ? -1.0 : 1.0;
                const bool rest_all_one = (m & ~std::size_t{1}) == 0;
                f.values[m] = rest_all_one ? -x1 : x1;
            }
            break;
        }
        case family::point_indicator: {
            require(spec.mask < size, "point_indicator point outside [0,2^n)");
            f.values[spec.mask] = 1.0;
            break;
        }
        case family::random_boolean: {
            require(spec.seed.has_value(), "random_boolean requires a seed");
            splitmix64 rng(*spec.seed);
            for (std::size_t m = 0; m < size; ++m) f.values[m] = rng.sign();
            break;
        }
        case family::random_real: {
            require(spec.seed.has_value(), "random_real requires a seed");
            splitmix64 rng(*spec.seed);
            for (std::size_t m = 0; m < size; ++m) f.values[m] = rng.pm1();
            break;
        }
        case family::file:
            break;  // handled above
    }
    return f;
}

int default_tribe_width(int n) {
    if (n < 4) {
        throw std::invalid_argument("default_tribe_width requires n >= 4");
    }
    const double target = std::log2(n / std::log(static_cast<double>(n)));
    int best = 1;
    double best_dist = std::fabs(1.0 - target);
    for (int w = 2; w <= n; ++w) {
        if (n % w != 0) continue;
        const double dist = std::fabs(w - target);
        if (dist < best_dist) {  // ties keep the smaller divisor
            best = w;
            best_dist = dist;
        }
    }
    return best;
}

}  // namespace walsh
