#include "abring/config.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace abring {

namespace {

std::string trim(const std::string& s) {
    std::size_t lo = 0, hi = s.size();
    while (lo < hi && std::isspace(static_cast<unsigned char>(s[lo]))) ++lo;
    while (hi > lo && std::isspace(static_cast<unsigned char>(s[hi - 1]))) --hi;
    return s.substr(lo, hi - lo);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string current;
    for (char c : s) {
        if (c == sep) {
            out.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    out.push_back(current);
    return out;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

double parse_double(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("cannot parse " + what + " from '" + s + "'");
    }
}

long parse_long(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("cannot parse " + what + " from '" + s + "'");
    }
}

std::vector<double> parse_double_list(const std::string& s, const std::string& what) {
    std::vector<double> out;
    for (const std::string& tok : split_ws(s)) out.push_back(parse_double(tok, what));
    return out;
}

PhaseProfile parse_profile(const std::string& value) {
    const std::vector<std::string> tokens = split_ws(value);
    if (tokens.empty()) throw ConfigError("empty phase profile");
    if (tokens[0] == "zero") {
        if (tokens.size() != 1) throw ConfigError("phase profile 'zero' takes no arguments");
        return PhaseProfile::zero();
    }
    if (tokens[0] == "linear") {
        if (tokens.size() != 2) throw ConfigError("phase profile 'linear' needs one slope");
        return PhaseProfile::linear(parse_double(tokens[1], "profile slope"));
    }
    if (tokens[0] == "tabulated") {
        if (tokens.size() != 2) {
            throw ConfigError("phase profile 'tabulated' needs theta:value,theta:value,...");
        }
        std::vector<double> thetas, values;
        for (const std::string& pair : split(tokens[1], ',')) {
            const std::vector<std::string> parts = split(pair, ':');
            if (parts.size() != 2) throw ConfigError("bad tabulated node '" + pair + "'");
            thetas.push_back(parse_double(parts[0], "tabulated theta"));
            values.push_back(parse_double(parts[1], "tabulated value"));
        }
        try {
            return PhaseProfile::tabulated(std::move(thetas), std::move(values));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
    throw ConfigError("unknown phase profile kind '" + tokens[0] + "'");
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string serialize_profile(const PhaseProfile& f) {
    switch (f.kind()) {
        case PhaseProfile::Kind::Zero:
            return "zero";
        case PhaseProfile::Kind::Linear:
            return "linear " + format_double(f.slope());
        case PhaseProfile::Kind::Tabulated: {
            std::string out = "tabulated ";
            for (std::size_t i = 0; i < f.grid().size(); ++i) {
                if (i) out += ",";
                out += format_double(f.grid()[i]) + ":" + format_double(f.values()[i]);
            }
            return out;
        }
    }
    return "zero";
}

MeasureSpec parse_measure(const std::string& value) {
    const std::vector<std::string> tokens = split_ws(value);
    if (tokens.empty()) throw ConfigError("empty measure spec");
    MeasureSpec spec;
    spec.name = tokens[0];
    for (std::size_t i = 1; i < tokens.size(); ++i) {
        const std::vector<std::string> kv = split(tokens[i], '=');
        if (kv.size() != 2) throw ConfigError("bad measure option '" + tokens[i] + "'");
        if (kv[0] == "base") {
            spec.base = parse_double(kv[1], "measure base");
        } else if (kv[0] == "dim") {
            const long d = parse_long(kv[1], "measure dim");
            if (d < 2) throw ConfigError("measure dim must be at least 2");
            spec.normalization_dim = static_cast<std::size_t>(d);
        } else {
            throw ConfigError("unknown measure option '" + kv[0] + "'");
        }
    }
    if (!(spec.base > 1.0)) throw ConfigError("measure base must exceed 1");
    return spec;
}

}  // namespace

std::string to_string(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::Standard:
            return "standard";
        case ScenarioKind::ClassicalAB:
            return "classical-ab";
        case ScenarioKind::QuantizedAB:
            return "quantized-ab";
    }
    return "standard";
}

ScenarioKind scenario_kind_from_string(const std::string& text) {
    if (text == "standard") return ScenarioKind::Standard;
    if (text == "classical-ab") return ScenarioKind::ClassicalAB;
    if (text == "quantized-ab") return ScenarioKind::QuantizedAB;
    throw ConfigError("unknown scenario kind '" + text + "'");
}

ClassicalScenario RunConfig::classical_scenario() const {
    if (kind == ScenarioKind::QuantizedAB) {
        throw ConfigError("quantized-ab config has no classical scenario");
    }
    return {f, kind == ScenarioKind::Standard ? 0.0 : phi_ab, gauge};
}

QuantizedScenario RunConfig::quantized_scenario() const {
    if (kind != ScenarioKind::QuantizedAB) {
        throw ConfigError("scenario kind '" + to_string(kind) + "' has no quantized scenario");
    }
    std::vector<Complex> amplitudes(static_cast<std::size_t>(2 * ell + 1));
    for (const auto& [m, c] : coeffs) {
        if (m < -ell || m > ell) {
            std::ostringstream msg;
            msg << "coefficient index m = " << m << " outside cutoff ell = " << ell;
            throw ConfigError(msg.str());
        }
        amplitudes[static_cast<std::size_t>(m + ell)] = c;
    }
    try {
        return {CylinderState(ell, std::move(amplitudes)), qk, f, {}};
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::string section;
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    bool have_kind = false;

    while (std::getline(in, raw)) {
        ++line_no;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ConfigError("line " + std::to_string(line_no) + ": unterminated section header");
            }
            section = trim(line.substr(1, line.size() - 2));
            if (section != "scenario" && section != "grid" && section != "measures" &&
                section != "output") {
                throw ConfigError("line " + std::to_string(line_no) + ": unknown section [" +
                                  section + "]");
            }
            continue;
        }

        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (section.empty()) {
            throw ConfigError("line " + std::to_string(line_no) + ": key outside any section");
        }

        try {
            if (section == "scenario") {
                if (key == "kind") {
                    cfg.kind = scenario_kind_from_string(value);
                    have_kind = true;
                } else if (key == "f") {
                    cfg.f = parse_profile(value);
                } else if (key == "phi_ab") {
                    cfg.phi_ab = parse_double(value, "phi_ab");
                } else if (key == "gauge_cos") {
                    cfg.gauge = GaugeChoice(parse_double_list(value, "gauge_cos"),
                                            cfg.gauge.fourier_sin());
                } else if (key == "gauge_sin") {
                    cfg.gauge = GaugeChoice(cfg.gauge.fourier_cos(),
                                            parse_double_list(value, "gauge_sin"));
                } else if (key == "ell") {
                    const long ell = parse_long(value, "ell");
                    if (ell < 1) throw ConfigError("ell must be positive");
                    cfg.ell = static_cast<int>(ell);
                } else if (key == "qk") {
                    cfg.qk = parse_double(value, "qk");
                } else if (key == "coeffs") {
                    cfg.coeffs.clear();
                    for (const std::string& entry : split(value, ',')) {
                        const std::vector<std::string> parts = split(entry, ':');
                        if (parts.size() != 2 && parts.size() != 3) {
                            throw ConfigError("bad coefficient '" + entry + "', want m:re[:im]");
                        }
                        const int m = static_cast<int>(parse_long(trim(parts[0]), "coefficient m"));
                        const double re = parse_double(trim(parts[1]), "coefficient re");
                        const double im =
                            parts.size() == 3 ? parse_double(trim(parts[2]), "coefficient im") : 0.0;
                        cfg.coeffs.emplace_back(m, Complex(re, im));
                    }
                } else {
                    throw ConfigError("unknown scenario key '" + key + "'");
                }
            } else if (section == "grid") {
                if (key == "start") {
                    cfg.grid.start = parse_double(value, "grid start");
                } else if (key == "end") {
                    cfg.grid.end = parse_double(value, "grid end");
                } else if (key == "count") {
                    const long c = parse_long(value, "grid count");
                    if (c < 2) throw ConfigError("grid count must be at least 2");
                    cfg.grid.count = static_cast<std::size_t>(c);
                } else if (key == "exclusion") {
                    cfg.grid.exclusion = parse_double(value, "grid exclusion");
                } else {
                    throw ConfigError("unknown grid key '" + key + "'");
                }
            } else if (section == "measures") {
                if (key != "measure") throw ConfigError("unknown measures key '" + key + "'");
                cfg.measures.push_back(parse_measure(value));
            } else {  // output
                if (key != "csv") throw ConfigError("unknown output key '" + key + "'");
                cfg.out_csv = value;
            }
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }

    if (!have_kind) throw ConfigError("missing [scenario] kind");
    if (cfg.measures.empty()) throw ConfigError("no measures configured");
    if (!(cfg.grid.end > cfg.grid.start)) throw ConfigError("grid end must exceed grid start");
    if (cfg.grid.exclusion < 0.0) throw ConfigError("grid exclusion must be nonnegative");
    if (cfg.kind == ScenarioKind::QuantizedAB) {
        if (cfg.coeffs.empty()) throw ConfigError("quantized-ab needs coeffs");
        cfg.quantized_scenario();  // validates cutoff and normalization
    }
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string serialize_config(const RunConfig& config) {
    std::ostringstream out;
    out << "[scenario]\n";
    out << "kind = " << to_string(config.kind) << "\n";
    out << "f = " << serialize_profile(config.f) << "\n";
    if (config.kind != ScenarioKind::QuantizedAB) {
        out << "phi_ab = " << format_double(config.phi_ab) << "\n";
    }
    if (!config.gauge.fourier_cos().empty()) {
        out << "gauge_cos =";
        for (double c : config.gauge.fourier_cos()) out << " " << format_double(c);
        out << "\n";
    }
    if (!config.gauge.fourier_sin().empty()) {
        out << "gauge_sin =";
        for (double s : config.gauge.fourier_sin()) out << " " << format_double(s);
        out << "\n";
    }
    if (config.kind == ScenarioKind::QuantizedAB) {
        out << "ell = " << config.ell << "\n";
        out << "qk = " << format_double(config.qk) << "\n";
        out << "coeffs = ";
        for (std::size_t i = 0; i < config.coeffs.size(); ++i) {
            if (i) out << ",";
            out << config.coeffs[i].first << ":" << format_double(config.coeffs[i].second.real());
            if (config.coeffs[i].second.imag() != 0.0) {
                out << ":" << format_double(config.coeffs[i].second.imag());
            }
        }
        out << "\n";
    }
    out << "\n[grid]\n";
    out << "start = " << format_double(config.grid.start) << "\n";
    out << "end = " << format_double(config.grid.end) << "\n";
    out << "count = " << config.grid.count << "\n";
    out << "exclusion = " << format_double(config.grid.exclusion) << "\n";
    out << "\n[measures]\n";
    for (const MeasureSpec& m : config.measures) {
        out << "measure = " << m.name << " base=" << format_double(m.base)
            << " dim=" << m.normalization_dim << "\n";
    }
    if (!config.out_csv.empty()) {
        out << "\n[output]\n";
        out << "csv = " << config.out_csv << "\n";
    }
    return out.str();
}

}  // namespace abring
