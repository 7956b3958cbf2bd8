#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orlapprox/orlicz.hpp"
#include "orlapprox/smoothness.hpp"
#include "orlapprox/spectrum.hpp"

namespace orlapprox {

/// "key = value" lines grouped under "[section]" headers. Keys before the
/// first header land in section "". '#' and ';' start comments.
class IniDocument {
public:
    using Section = std::map<std::string, std::string, std::less<>>;

    static IniDocument parse(std::string_view text);
    static IniDocument load(const std::filesystem::path& path);

    const std::map<std::string, Section, std::less<>>& sections() const { return sections_; }
    std::optional<std::string> get(std::string_view section, std::string_view key) const;

private:
    std::map<std::string, Section, std::less<>> sections_;
};

/// Real number, or a multiple of pi: "pi", "-pi", "2pi", "2*pi", "pi/2".
double parse_real(std::string_view text);
int parse_int(std::string_view text);
/// Comma- or whitespace-separated reals.
std::vector<double> parse_list(std::string_view text);
/// "a..b" or a single integer.
std::pair<int, int> parse_range(std::string_view text);
/// "u:M, u:M, ..." pairs.
std::vector<std::pair<double, double>> parse_points(std::string_view text);

struct FunctionSpec {
    /// delta, geometric, power, lacunary, explicit or samples.
    std::string rule = "geometric";
    RuleParams params;
    std::map<int, Complex> coefficients;  ///< explicit rule: c[k] = re[, im]
    std::filesystem::path samples;
    int radius = 64;
};

struct FamilySpec {
    /// power, scaled_power, linear or tabulated.
    std::string kind = "power";
    double exponent = 2.0;
    double weight = 1.0;
    std::map<int, double> exponent_at;
    std::map<int, double> weight_at;
    std::vector<std::pair<double, double>> points;
    std::map<int, std::vector<std::pair<double, double>>> points_at;
};

struct MultiplierSpec {
    /// classical or tabulated.
    std::string kind = "classical";
    double alpha = 1.0;
    std::vector<std::pair<double, double>> points;
    bool periodic = false;
};

struct RunConfig {
    FunctionSpec function;
    FamilySpec family;
    MultiplierSpec multiplier;
    NormKind norm = NormKind::orlicz;
    /// general (Musielak-Orlicz constant) or sp (l_p constant).
    std::string mode = "general";
    int n_first = 1;
    int n_last = 1;
    double tau = 3.141592653589793;
    double p = 2.0;
    double delta = 0.0;  ///< modulus step bound; 0 selects tau / n
    int grid = 512;
    int j_max = 0;
    int h_grid = kDefaultHGrid;
    bool sensitivity = true;
    std::uint64_t seed = 20240607;
    std::filesystem::path output;
};

/// Sections [function], [family], [multiplier], [run]. Unknown sections or
/// keys raise ConfigError. Per-index overrides use "key[k] = value".
/// A relative samples path is resolved against `base_dir`.
RunConfig parse_config(const IniDocument& doc, const std::filesystem::path& base_dir = {});
RunConfig load_config(const std::filesystem::path& path);

Spectrum build_spectrum(const FunctionSpec& spec);
OrliczFamily build_family(const FamilySpec& spec, int radius);
Multiplier build_multiplier(const MultiplierSpec& spec);

/// "key = value" lines listing every knob, defaults included.
std::vector<std::string> describe(const RunConfig& cfg);

}  // namespace orlapprox
