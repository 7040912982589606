#include "abring/sweep.hpp"

#include "abring/measures.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

namespace abring {

namespace {

constexpr double kPi = std::numbers::pi;

// "name" or "name:arg"; returns true and fills arg when the suffix is there.
bool split_arg(const std::string& spec, const std::string& name, std::string& arg) {
    if (spec == name) {
        arg.clear();
        return true;
    }
    if (spec.size() > name.size() + 1 && spec.compare(0, name.size(), name) == 0 &&
        spec[name.size()] == ':') {
        arg = spec.substr(name.size() + 1);
        return true;
    }
    return false;
}

double parse_arg_double(const std::string& arg, const std::string& spec) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(arg, &pos);
        if (pos != arg.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad numeric argument in measure '" + spec + "'");
    }
}

int parse_arg_int(const std::string& arg, const std::string& spec) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(arg, &pos);
        if (pos != arg.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("bad integer argument in measure '" + spec + "'");
    }
}

ResolvedMeasure resolve_classical(const MeasureSpec& spec, const ClassicalScenario& scenario) {
    const MeasureContext ctx{spec.base, spec.normalization_dim};
    std::string arg;

    auto realism_of_g = [scenario, ctx](const OperatorPhase& g) {
        return [scenario, ctx, g](double theta) {
            return realism(charge_state(theta, scenario), sigma_g(theta, g),
                           DephasingScope::Whole, ctx);
        };
    };
    auto realism_of_gA = [scenario, ctx](const OperatorPhase& g) {
        return [scenario, ctx, g](double theta) {
            return realism(charge_state(theta, scenario), sigma_gA(theta, g, scenario),
                           DephasingScope::Whole, ctx);
        };
    };

    if (spec.name == "sigma_z") {
        return {spec.name, false, [scenario, ctx](double theta) {
                    return realism(charge_state(theta, scenario), sigma_z(),
                                   DephasingScope::Whole, ctx);
                }};
    }
    if (spec.name == "sigma_x") return {spec.name, false, realism_of_g({PhaseProfile::zero(), 0.0})};
    if (spec.name == "sigma_y") {
        return {spec.name, false, realism_of_g({PhaseProfile::zero(), kPi / 2.0})};
    }
    if (split_arg(spec.name, "sigma_g", arg)) {
        if (arg.empty()) throw ConfigError("measure 'sigma_g' needs a constant phase: sigma_g:<c>");
        return {spec.name, false,
                realism_of_g({PhaseProfile::zero(), parse_arg_double(arg, spec.name)})};
    }
    if (split_arg(spec.name, "sigma_f", arg)) {
        const double delta = arg.empty() ? 0.0 : parse_arg_double(arg, spec.name);
        return {spec.name, false, realism_of_g({scenario.f, delta})};
    }
    if (spec.name == "sigma_xA") return {spec.name, true, realism_of_gA({scenario.f, 0.0})};
    if (spec.name == "sigma_yA") {
        return {spec.name, true, realism_of_gA({scenario.f, kPi / 2.0})};
    }
    if (split_arg(spec.name, "sigma_fA", arg)) {
        const double delta = arg.empty() ? 0.0 : parse_arg_double(arg, spec.name);
        return {spec.name, true, realism_of_gA({scenario.f, delta})};
    }
    if (split_arg(spec.name, "sigma_gA", arg)) {
        if (arg.empty()) throw ConfigError("measure 'sigma_gA' needs a constant phase: sigma_gA:<c>");
        return {spec.name, true,
                realism_of_gA({PhaseProfile::zero(), parse_arg_double(arg, spec.name)})};
    }
    throw ConfigError("measure '" + spec.name + "' is not available in a " +
                      (scenario.phi_ab == 0.0 ? std::string("standard") : std::string("classical-ab")) +
                      " scenario");
}

ResolvedMeasure resolve_quantized(const MeasureSpec& spec, const QuantizedScenario& scenario) {
    const MeasureContext ctx{spec.base, spec.normalization_dim};
    std::string arg;

    auto reduced_realism_of = [scenario, ctx](double delta) {
        return [scenario, ctx, delta](double theta) {
            const DensityMatrix reduced =
                partial_trace(joint_state(theta, scenario), Keep::S);
            return realism(reduced, sigma_g(theta, {PhaseProfile::zero(), delta}),
                           DephasingScope::Whole, ctx);
        };
    };

    if (spec.name == "sigma_z") {
        return {spec.name, false, [scenario, ctx](double theta) {
                    const DensityMatrix reduced =
                        partial_trace(joint_state(theta, scenario), Keep::S);
                    return realism(reduced, sigma_z(), DephasingScope::Whole, ctx);
                }};
    }
    if (spec.name == "sigma_x") return {spec.name, false, reduced_realism_of(0.0)};
    if (spec.name == "sigma_y") return {spec.name, false, reduced_realism_of(kPi / 2.0)};
    if (split_arg(spec.name, "sigma_xA_branch", arg) || split_arg(spec.name, "sigma_yA_branch", arg)) {
        if (arg.empty()) {
            throw ConfigError("branch measures need an index: " + spec.name + ":<m>");
        }
        const int m = parse_arg_int(arg, spec.name);
        if (m < -scenario.cylinder.ell() || m > scenario.cylinder.ell()) {
            throw ConfigError("branch index in '" + spec.name + "' outside the cutoff");
        }
        const bool x_axis = spec.name[6] == 'x';
        return {spec.name, true, [scenario, ctx, m, x_axis](double theta) {
                    const DensityMatrix reduced =
                        partial_trace(joint_state(theta, scenario), Keep::S);
                    const Observable obs = x_axis ? sigma_xA_branch(theta, m, scenario)
                                                  : sigma_yA_branch(theta, m, scenario);
                    return realism(reduced, obs, DephasingScope::Whole, ctx);
                }};
    }
    if (spec.name == "Sigma_x" || spec.name == "Sigma_y") {
        const bool x_axis = spec.name == "Sigma_x";
        return {spec.name, true, [scenario, ctx, x_axis](double theta) {
                    const DensityMatrix joint = joint_state(theta, scenario);
                    const Observable obs =
                        x_axis ? joint_sigma_x(theta, scenario) : joint_sigma_y(theta, scenario);
                    return realism(joint, obs, DephasingScope::Whole, ctx);
                }};
    }
    if (spec.name == "sigma_z_joint") {
        return {spec.name, false, [scenario, ctx](double theta) {
                    return realism(joint_state(theta, scenario), sigma_z(),
                                   DephasingScope::SubsystemS, ctx);
                }};
    }
    throw ConfigError("measure '" + spec.name + "' is not available in a quantized-ab scenario");
}

}  // namespace

std::vector<ResolvedMeasure> resolve_measures(const RunConfig& config) {
    std::vector<ResolvedMeasure> out;
    if (config.kind == ScenarioKind::QuantizedAB) {
        const QuantizedScenario scenario = config.quantized_scenario();
        for (const MeasureSpec& spec : config.measures) {
            out.push_back(resolve_quantized(spec, scenario));
        }
    } else {
        const ClassicalScenario scenario = config.classical_scenario();
        for (const MeasureSpec& spec : config.measures) {
            out.push_back(resolve_classical(spec, scenario));
        }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const ResolvedMeasure& a, const ResolvedMeasure& b) { return a.name < b.name; });
    return out;
}

std::vector<SweepRecord> run_sweep(const RunConfig& config) {
    const std::vector<ResolvedMeasure> measures = resolve_measures(config);
    std::vector<double> grid;
    try {
        grid = make_theta_grid(config.grid.start, config.grid.end, config.grid.count,
                               config.grid.exclusion);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("invalid grid: ") + e.what());
    }

    std::vector<SweepRecord> records;
    records.reserve(grid.size() * measures.size());
    for (double theta : grid) {
        for (const ResolvedMeasure& m : measures) {
            SweepRecord rec;
            rec.theta = theta;
            rec.measure = m.name;
            rec.value = m.eval(theta);
            rec.branch = m.crossing_sensitive ? (theta < kPi / 2.0 ? "pre" : "post") : "n/a";
            records.push_back(std::move(rec));
        }
    }
    return records;
}

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string format_csv(const std::vector<SweepRecord>& records,
                       const std::vector<std::string>& metadata) {
    std::ostringstream out;
    for (const std::string& line : metadata) out << "# " << line << "\n";
    out << "theta,measure,value,branch\n";
    for (const SweepRecord& rec : records) {
        out << format_value(rec.theta) << "," << rec.measure << "," << format_value(rec.value)
            << "," << rec.branch << "\n";
    }
    return out.str();
}

void write_csv_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
    if (!out) throw IoError("cannot open output file '" + path + "'");
    out << content;
    if (!out) throw IoError("failed writing output file '" + path + "'");
}

}  // namespace abring
