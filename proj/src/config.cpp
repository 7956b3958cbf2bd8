#include "orlapprox/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <numbers>
#include <sstream>

#include "orlapprox/errors.hpp"

namespace orlapprox {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
    return out;
}

double plain_real(std::string_view s, std::string_view whole) {
    double v = 0.0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end) throw ConfigError("not a number: '" + std::string(whole) + "'");
    return v;
}

// "name[k]" -> (name, k)
std::pair<std::string, std::optional<int>> split_index(std::string_view key) {
    const auto open = key.find('[');
    if (open == std::string_view::npos) return {std::string(key), std::nullopt};
    if (key.back() != ']') throw ConfigError("malformed key '" + std::string(key) + "'");
    return {std::string(trim(key.substr(0, open))), parse_int(key.substr(open + 1, key.size() - open - 2))};
}

}  // namespace

IniDocument IniDocument::parse(std::string_view text) {
    IniDocument doc;
    std::string section;
    doc.sections_[section];
    int line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const auto c = line.find_first_of("#;"); c != std::string_view::npos) line = line.substr(0, c);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError("line " + std::to_string(line_no) + ": unterminated section");
            section = lower(trim(line.substr(1, line.size() - 2)));
            doc.sections_[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        }
        const std::string key = lower(trim(line.substr(0, eq)));
        if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key");
        auto& sec = doc.sections_[section];
        if (sec.count(key)) throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
        sec[key] = std::string(trim(line.substr(eq + 1)));
    }
    return doc;
}

IniDocument IniDocument::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::optional<std::string> IniDocument::get(std::string_view section, std::string_view key) const {
    const auto s = sections_.find(section);
    if (s == sections_.end()) return std::nullopt;
    const auto k = s->second.find(key);
    if (k == s->second.end()) return std::nullopt;
    return k->second;
}

double parse_real(std::string_view text) {
    const auto s = lower(trim(text));
    const auto pos = s.find("pi");
    if (pos == std::string::npos) return plain_real(s, text);
    std::string_view head = trim(std::string_view(s).substr(0, pos));
    std::string_view rest = trim(std::string_view(s).substr(pos + 2));
    double factor = 1.0;
    if (!head.empty() && head.back() == '*') head = trim(head.substr(0, head.size() - 1));
    if (head == "-") {
        factor = -1.0;
    } else if (head == "+") {
        factor = 1.0;
    } else if (!head.empty()) {
        factor = plain_real(head, text);
    }
    double divisor = 1.0;
    if (!rest.empty()) {
        if (rest.front() != '/') throw ConfigError("not a number: '" + std::string(text) + "'");
        divisor = plain_real(trim(rest.substr(1)), text);
        if (divisor == 0.0) throw ConfigError("division by zero in '" + std::string(text) + "'");
    }
    return factor * std::numbers::pi / divisor;
}

int parse_int(std::string_view text) {
    const auto s = trim(text);
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw ConfigError("not an integer: '" + std::string(text) + "'");
    return v;
}

std::vector<double> parse_list(std::string_view text) {
    std::vector<double> out;
    std::string token;
    auto flush = [&] {
        if (!token.empty()) out.push_back(parse_real(token));
        token.clear();
    };
    for (char c : text) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            flush();
        } else {
            token.push_back(c);
        }
    }
    flush();
    return out;
}

std::pair<int, int> parse_range(std::string_view text) {
    const auto s = trim(text);
    const auto dots = s.find("..");
    if (dots == std::string_view::npos) {
        const int v = parse_int(s);
        return {v, v};
    }
    const int a = parse_int(s.substr(0, dots));
    const int b = parse_int(s.substr(dots + 2));
    if (b < a) throw ConfigError("empty range '" + std::string(text) + "'");
    return {a, b};
}

std::vector<std::pair<double, double>> parse_points(std::string_view text) {
    std::vector<std::pair<double, double>> out;
    std::string_view rest = text;
    while (!trim(rest).empty()) {
        const auto comma = rest.find(',');
        const auto item = trim(rest.substr(0, comma));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        const auto colon = item.find(':');
        if (colon == std::string_view::npos) throw ConfigError("expected u:M pair, got '" + std::string(item) + "'");
        out.emplace_back(parse_real(item.substr(0, colon)), parse_real(item.substr(colon + 1)));
    }
    return out;
}

RunConfig parse_config(const IniDocument& doc, const std::filesystem::path& base_dir) {
    RunConfig cfg;
    for (const auto& [name, section] : doc.sections()) {
        for (const auto& [raw_key, value] : section) {
            const auto [key, index] = split_index(raw_key);
            auto unknown = [&] { throw ConfigError("unknown key '" + raw_key + "' in section [" + name + "]"); };
            if (name == "function") {
                if (index) {
                    if (key != "c") unknown();
                    const auto v = parse_list(value);
                    if (v.empty() || v.size() > 2) throw ConfigError("c[k] takes re or re, im");
                    cfg.function.coefficients[*index] = Complex(v[0], v.size() > 1 ? v[1] : 0.0);
                } else if (key == "rule") {
                    cfg.function.rule = lower(value);
                } else if (key == "radius") {
                    cfg.function.radius = parse_int(value);
                } else if (key == "samples") {
                    std::filesystem::path p(value);
                    cfg.function.samples = p.is_relative() && !base_dir.empty() ? base_dir / p : p;
                } else {
                    cfg.function.params[key] = parse_list(value);
                }
            } else if (name == "family") {
                if (key == "kind" && !index) {
                    cfg.family.kind = lower(value);
                } else if (key == "p" || key == "exponent") {
                    (index ? cfg.family.exponent_at[*index] : cfg.family.exponent) = parse_real(value);
                } else if (key == "weight") {
                    (index ? cfg.family.weight_at[*index] : cfg.family.weight) = parse_real(value);
                } else if (key == "points") {
                    (index ? cfg.family.points_at[*index] : cfg.family.points) = parse_points(value);
                } else {
                    unknown();
                }
            } else if (name == "multiplier") {
                if (index) unknown();
                if (key == "kind") {
                    cfg.multiplier.kind = lower(value);
                } else if (key == "alpha") {
                    cfg.multiplier.alpha = parse_real(value);
                } else if (key == "points") {
                    cfg.multiplier.points = parse_points(value);
                } else if (key == "periodic") {
                    const auto v = lower(value);
                    if (v != "true" && v != "false") throw ConfigError("periodic must be true or false");
                    cfg.multiplier.periodic = v == "true";
                } else {
                    unknown();
                }
            } else if (name == "run") {
                if (index) unknown();
                if (key == "norm") {
                    cfg.norm = parse_norm_kind(lower(value));
                } else if (key == "mode") {
                    cfg.mode = lower(value);
                    if (cfg.mode != "general" && cfg.mode != "sp") throw ConfigError("mode must be general or sp");
                } else if (key == "n") {
                    std::tie(cfg.n_first, cfg.n_last) = parse_range(value);
                } else if (key == "tau") {
                    cfg.tau = parse_real(value);
                } else if (key == "p") {
                    cfg.p = parse_real(value);
                } else if (key == "delta") {
                    cfg.delta = parse_real(value);
                } else if (key == "grid") {
                    cfg.grid = parse_int(value);
                } else if (key == "j_max") {
                    cfg.j_max = parse_int(value);
                } else if (key == "h_grid") {
                    cfg.h_grid = parse_int(value);
                } else if (key == "sensitivity") {
                    const auto v = lower(value);
                    if (v != "true" && v != "false") throw ConfigError("sensitivity must be true or false");
                    cfg.sensitivity = v == "true";
                } else if (key == "seed") {
                    cfg.seed = std::stoull(value);
                } else if (key == "output") {
                    cfg.output = value;
                } else {
                    unknown();
                }
            } else if (!section.empty()) {
                throw ConfigError("unknown section [" + name + "]");
            }
        }
    }
    if (cfg.function.radius < 0) throw ConfigError("radius must be >= 0");
    if (cfg.n_first < 1) throw ConfigError("n must be >= 1");
    if (!(cfg.tau > 0.0)) throw ConfigError("tau must be positive");
    if (!(cfg.p >= 1.0)) throw ConfigError("p must be >= 1");
    if (cfg.h_grid < 2) throw ConfigError("h_grid must be >= 2");
    if (!cfg.function.samples.empty() && !std::filesystem::exists(cfg.function.samples)) {
        throw ConfigError("samples file '" + cfg.function.samples.string() + "' does not exist");
    }
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    return parse_config(IniDocument::load(path), path.parent_path());
}

Spectrum build_spectrum(const FunctionSpec& spec) {
    if (spec.rule == "explicit") {
        Spectrum s(spec.radius);
        for (const auto& [k, c] : spec.coefficients) s.set(k, c);
        return s;
    }
    if (!spec.coefficients.empty()) throw ConfigError("c[k] entries need rule = explicit");
    if (spec.rule == "samples") {
        if (spec.samples.empty()) throw ConfigError("rule = samples needs a samples path");
        return spectrum_from_samples(read_samples(spec.samples), spec.radius);
    }
    return spectrum_from_rule(make_rule(spec.rule, spec.params), spec.radius);
}

OrliczFamily build_family(const FamilySpec& spec, int radius) {
    const std::size_t size = static_cast<std::size_t>(2 * radius + 1);
    auto check_index = [&](int k) {
        if (std::abs(k) > radius) throw ConfigError("family override index " + std::to_string(k) + " outside window");
    };
    if (spec.kind == "power" || spec.kind == "linear") {
        const double base = spec.kind == "linear" ? 1.0 : spec.exponent;
        std::vector<double> exps(size, base), weights(size, spec.weight);
        for (const auto& [k, v] : spec.exponent_at) {
            check_index(k);
            exps[static_cast<std::size_t>(k + radius)] = v;
        }
        for (const auto& [k, v] : spec.weight_at) {
            check_index(k);
            weights[static_cast<std::size_t>(k + radius)] = v;
        }
        return OrliczFamily::power(radius, std::move(exps), std::move(weights));
    }
    if (spec.kind == "scaled_power") {
        if (!spec.exponent_at.empty() || !spec.weight_at.empty()) {
            throw ConfigError("scaled_power takes a single exponent");
        }
        return OrliczFamily::scaled_power(radius, spec.exponent);
    }
    if (spec.kind == "tabulated") {
        if (spec.points.empty() && spec.points_at.empty()) throw ConfigError("tabulated family needs points");
        std::vector<OrliczFunction> fns;
        fns.reserve(size);
        std::optional<OrliczFunction> shared;
        if (!spec.points.empty()) shared = OrliczFunction::tabulated(spec.points);
        for (int k = -radius; k <= radius; ++k) {
            if (auto it = spec.points_at.find(k); it != spec.points_at.end()) {
                fns.push_back(OrliczFunction::tabulated(it->second));
            } else if (shared) {
                fns.push_back(*shared);
            } else {
                throw ConfigError("tabulated family has no points for k=" + std::to_string(k));
            }
        }
        for (const auto& [k, pts] : spec.points_at) check_index(k);
        return OrliczFamily::custom(radius, std::move(fns));
    }
    throw ConfigError("unknown family kind '" + spec.kind + "'");
}

Multiplier build_multiplier(const MultiplierSpec& spec) {
    if (spec.kind == "classical") return Multiplier::classical(spec.alpha);
    if (spec.kind == "tabulated") return Multiplier::tabulated(spec.points, spec.periodic);
    throw ConfigError("unknown multiplier kind '" + spec.kind + "'");
}

std::vector<std::string> describe(const RunConfig& cfg) {
    std::vector<std::string> out;
    auto add = [&](const std::string& k, const std::string& v) { out.push_back(k + " = " + v); };
    auto real = [](double v) {
        std::ostringstream os;
        os.precision(17);
        os << v;
        return os.str();
    };
    add("function.rule", cfg.function.rule);
    add("function.radius", std::to_string(cfg.function.radius));
    for (const auto& [k, v] : cfg.function.params) {
        std::string s;
        for (double x : v) s += (s.empty() ? "" : ",") + real(x);
        add("function." + k, s);
    }
    if (!cfg.function.samples.empty()) add("function.samples", cfg.function.samples.string());
    add("family.kind", cfg.family.kind);
    add("family.p", real(cfg.family.exponent));
    add("family.weight", real(cfg.family.weight));
    add("multiplier.kind", cfg.multiplier.kind);
    add("multiplier.alpha", real(cfg.multiplier.alpha));
    add("run.norm", std::string(to_string(cfg.norm)));
    add("run.mode", cfg.mode);
    add("run.n", std::to_string(cfg.n_first) + ".." + std::to_string(cfg.n_last));
    add("run.tau", real(cfg.tau));
    add("run.p", real(cfg.p));
    add("run.delta", cfg.delta > 0.0 ? real(cfg.delta) : "tau/n");
    add("run.grid", std::to_string(cfg.grid));
    add("run.j_max", cfg.j_max > 0 ? std::to_string(cfg.j_max) : "64n");
    add("run.h_grid", std::to_string(cfg.h_grid));
    add("run.sensitivity", cfg.sensitivity ? "true" : "false");
    add("run.seed", std::to_string(cfg.seed));
    return out;
}

}  // namespace orlapprox
