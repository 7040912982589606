#pragma once

#include "abring/classical.hpp"
#include "abring/quantized.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace abring {

// Bad configuration text, unknown names, invalid grids (CLI exit code 2).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Filesystem trouble: unreadable config, unwritable output (CLI exit code 3).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ScenarioKind { Standard, ClassicalAB, QuantizedAB };

std::string to_string(ScenarioKind kind);
ScenarioKind scenario_kind_from_string(const std::string& text);

struct MeasureSpec {
    std::string name;
    double base = 2.0;
    std::size_t normalization_dim = 2;

    friend bool operator==(const MeasureSpec&, const MeasureSpec&) = default;
};

struct GridSpec {
    double start = 0.0;
    double end = 3.14159265358979323846;
    std::size_t count = 1001;
    double exclusion = 1e-9;  // half-width of the window dodged around pi/2

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

// Everything a sweep needs, parsed from the flat key-value format described
// in the shipped configs/ examples: [scenario], [grid], [measures], [output]
// sections with one key = value pair per line.
struct RunConfig {
    ScenarioKind kind = ScenarioKind::Standard;

    // classical / standard parameters
    PhaseProfile f = PhaseProfile::zero();
    double phi_ab = 0.0;
    GaugeChoice gauge;

    // quantized parameters
    int ell = 1;
    std::vector<std::pair<int, Complex>> coeffs;  // (m, amplitude)
    double qk = 0.0;

    GridSpec grid;
    std::vector<MeasureSpec> measures;
    std::string out_csv;

    ClassicalScenario classical_scenario() const;
    QuantizedScenario quantized_scenario() const;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config_file(const std::string& path);
std::string serialize_config(const RunConfig& config);

}  // namespace abring
