#include "abring/figures.hpp"

#include "abring/measures.hpp"
#include "abring/quantized.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <map>
#include <numbers>
#include <sstream>

namespace abring {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kQk = 2.0 * kPi / 25.0;

struct Curve {
    std::string name;
    bool crossing_sensitive = false;
    std::function<double(double)> eval;
};

struct FigureData {
    std::vector<std::string> metadata;
    std::vector<SweepRecord> records;
};

std::vector<double> default_grid() { return make_theta_grid(0.0, kPi, 1001, 1e-9); }

std::vector<SweepRecord> tabulate(const std::vector<Curve>& curves, const std::vector<double>& xs,
                                  bool theta_axis) {
    std::vector<Curve> sorted = curves;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Curve& a, const Curve& b) { return a.name < b.name; });
    std::vector<SweepRecord> records;
    records.reserve(xs.size() * sorted.size());
    for (double x : xs) {
        for (const Curve& c : sorted) {
            SweepRecord rec;
            rec.theta = x;
            rec.measure = c.name;
            rec.value = c.eval(x);
            rec.branch = (theta_axis && c.crossing_sensitive) ? (x < kPi / 2.0 ? "pre" : "post")
                                                              : "n/a";
            records.push_back(std::move(rec));
        }
    }
    return records;
}

// The Fig. 3 / Fig. 4 cylinder preparations: even superpositions with mean
// angular momentum 5/2 inside the ell = 6 cutoff, matching the classical
// comparison flux.
const std::vector<std::pair<std::string, std::vector<int>>>& figure_sets() {
    static const std::vector<std::pair<std::string, std::vector<int>>> sets = {
        {"m=2|3", {2, 3}},
        {"m=1|4", {1, 4}},
        {"m=0|5", {0, 5}},
        {"m=-1|6", {-1, 6}},
    };
    return sets;
}

QuantizedScenario figure_scenario(const std::vector<int>& ms) {
    return {CylinderState::even_superposition(6, ms), kQk, PhaseProfile::zero(), {}};
}

FigureData make_fig2a() {
    const ClassicalScenario sc{PhaseProfile::linear(1.0 / 3.0), 0.0, {}};
    const MeasureContext ctx{2.0, 2};
    std::vector<Curve> curves;
    curves.push_back({"sigma_z", false, [sc, ctx](double theta) {
                          return realism(charge_state(theta, sc), sigma_z(), DephasingScope::Whole,
                                         ctx);
                      }});
    const std::vector<std::pair<std::string, double>> phases = {{"sigma_x", 0.0},
                                                                {"sigma_y", kPi / 2.0}};
    for (const auto& [name, delta] : phases) {
        curves.push_back({name, false, [sc, ctx, delta = delta](double theta) {
                              return realism(charge_state(theta, sc),
                                             sigma_g(theta, {PhaseProfile::zero(), delta}),
                                             DephasingScope::Whole, ctx);
                          }});
    }
    curves.push_back({"sigma_f", false, [sc, ctx](double theta) {
                          return realism(charge_state(theta, sc), sigma_g(theta, {sc.f, 0.0}),
                                         DephasingScope::Whole, ctx);
                      }});
    return {{"scenario = standard, f = theta/3"}, tabulate(curves, default_grid(), true)};
}

FigureData make_fig2b() {
    const ClassicalScenario sc{PhaseProfile::linear(1.0 / 3.0), kPi / 5.0, {}};
    const MeasureContext ctx{2.0, 2};
    std::vector<Curve> curves;
    curves.push_back({"sigma_z", false, [sc, ctx](double theta) {
                          return realism(charge_state(theta, sc), sigma_z(), DephasingScope::Whole,
                                         ctx);
                      }});
    const std::vector<std::pair<std::string, double>> phases = {{"sigma_xA", 0.0},
                                                                {"sigma_yA", kPi / 2.0}};
    for (const auto& [name, delta] : phases) {
        curves.push_back({name, true, [sc, ctx, delta = delta](double theta) {
                              return realism(charge_state(theta, sc),
                                             sigma_gA(theta, {sc.f, delta}, sc),
                                             DephasingScope::Whole, ctx);
                          }});
    }
    return {{"scenario = classical-ab, f = theta/3, phi_ab = pi/5"},
            tabulate(curves, default_grid(), true)};
}

FigureData make_fig2c() {
    const double phi = kPi / 5.0;
    std::vector<double> deltas;
    for (int k = 0; k <= 200; ++k) {
        deltas.push_back((kPi / 2.0) * static_cast<double>(k) / 200.0);
    }
    std::vector<Curve> curves = {
        {"realism_jump", false, [phi](double delta) { return realism_jump(delta, phi); }}};
    return {{"x = delta (operator offset), phi_ab = pi/5", "zero crossing at delta = phi_ab/2"},
            tabulate(curves, deltas, false)};
}

FigureData make_fig3(char panel) {
    const MeasureContext ctx{2.0, 2};
    const ClassicalScenario classical{PhaseProfile::zero(), kPi / 5.0, {}};
    std::vector<Curve> curves;

    for (const auto& [tag, ms] : figure_sets()) {
        const QuantizedScenario sc = figure_scenario(ms);
        switch (panel) {
            case 'a':
                curves.push_back({"sigma_z[" + tag + "]", false, [sc](double theta) {
                                      return binary_entropy(lambda0(theta, sc));
                                  }});
                break;
            case 'b':
                curves.push_back({"sigma_x[" + tag + "]", false, [sc](double theta) {
                                      return realism_sigma_x_reduced(theta, sc);
                                  }});
                break;
            case 'c':
                curves.push_back({"sigma_y[" + tag + "]", false, [sc](double theta) {
                                      return realism_sigma_y_reduced(theta, sc);
                                  }});
                break;
            case 'd':
                curves.push_back({"sigma_xA_branch(-1)[" + tag + "]", true, [sc, ctx](double theta) {
                                      const DensityMatrix reduced =
                                          partial_trace(joint_state(theta, sc), Keep::S);
                                      return realism(reduced, sigma_xA_branch(theta, -1, sc),
                                                     DephasingScope::Whole, ctx);
                                  }});
                break;
        }
    }
    switch (panel) {
        case 'a':
            curves.push_back({"sigma_z[classical]", false, [](double) { return 0.0; }});
            break;
        case 'b':
            curves.push_back({"sigma_x[classical]", false, [classical](double theta) {
                                  return realism_closed_form_sigma_g(theta, classical,
                                                                     {PhaseProfile::zero(), 0.0});
                              }});
            break;
        case 'c':
            curves.push_back({"sigma_y[classical]", false, [classical](double theta) {
                                  return realism_closed_form_sigma_g(
                                      theta, classical, {PhaseProfile::zero(), kPi / 2.0});
                              }});
            break;
        case 'd':
            curves.push_back({"sigma_xA[classical]", true, [classical](double theta) {
                                  return realism_closed_form(theta, classical, {classical.f, 0.0});
                              }});
            break;
    }
    return {{"quantized flux: ell = 6, qK = 2pi/25, even superpositions with mean flux 5K hbar/2",
             "classical comparison: phi_ab = pi/5"},
            tabulate(curves, default_grid(), true)};
}

FigureData make_fig4(JointAxis axis) {
    std::vector<Curve> curves;
    for (const auto& [tag, ms] : figure_sets()) {
        const QuantizedScenario sc = figure_scenario(ms);
        const std::string name = (axis == JointAxis::X ? "Sigma_x[" : "Sigma_y[") + tag + "]";
        curves.push_back({name, true, [sc, axis](double theta) {
                              return realism_joint_sigma_closed_form(theta, sc, axis);
                          }});
    }
    std::ostringstream floor_note;
    floor_note << "local_realism_floor = " << format_value(std::log(13.0) / std::log(26.0))
               << " (log_26 13, the sigma_z value)";
    return {{"quantized flux: ell = 6, qK = 2pi/25, base-26 logarithms", floor_note.str()},
            tabulate(curves, default_grid(), true)};
}

FigureData make_figure(const std::string& name) {
    if (name == "fig2a") return make_fig2a();
    if (name == "fig2b") return make_fig2b();
    if (name == "fig2c") return make_fig2c();
    if (name == "fig3a") return make_fig3('a');
    if (name == "fig3b") return make_fig3('b');
    if (name == "fig3c") return make_fig3('c');
    if (name == "fig3d") return make_fig3('d');
    if (name == "fig4a") return make_fig4(JointAxis::X);
    if (name == "fig4b") return make_fig4(JointAxis::Y);
    throw ConfigError("unknown figure name '" + name + "'");
}

// ---------------------------------------------------------------------------
// Minimal SVG line plot: one polyline per (measure, branch) run so the pi/2
// discontinuity is drawn as separate segments.

std::string render_svg(const FigureData& data, const std::string& title) {
    const double width = 860, height = 540;
    const double ml = 70, mr = 210, mt = 50, mb = 55;

    double x_min = 1e300, x_max = -1e300, y_min = 1e300, y_max = -1e300;
    for (const SweepRecord& r : data.records) {
        x_min = std::min(x_min, r.theta);
        x_max = std::max(x_max, r.theta);
        y_min = std::min(y_min, r.value);
        y_max = std::max(y_max, r.value);
    }
    if (y_max - y_min < 1e-12) {
        y_min -= 0.5;
        y_max += 0.5;
    }
    const double pad = 0.05 * (y_max - y_min);
    y_min -= pad;
    y_max += pad;

    auto px = [&](double x) { return ml + (x - x_min) / (x_max - x_min) * (width - ml - mr); };
    auto py = [&](double y) { return height - mb - (y - y_min) / (y_max - y_min) * (height - mt - mb); };

    // Group into measure -> branch-runs.
    std::map<std::string, std::vector<std::vector<const SweepRecord*>>> series;
    for (const SweepRecord& r : data.records) {
        auto& runs = series[r.measure];
        if (runs.empty() || runs.back().back()->branch != r.branch) runs.emplace_back();
        runs.back().push_back(&r);
    }

    const std::vector<std::string> palette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                              "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << ml << "\" y=\"28\" font-family=\"sans-serif\" font-size=\"16\">" << title
        << "</text>\n";

    // Axes and ticks.
    svg << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\"" << width - mr
        << "\" y2=\"" << height - mb << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
        << height - mb << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double xv = x_min + (x_max - x_min) * i / 4.0;
        const double yv = y_min + (y_max - y_min) * i / 4.0;
        svg << "<line x1=\"" << px(xv) << "\" y1=\"" << height - mb << "\" x2=\"" << px(xv)
            << "\" y2=\"" << height - mb + 5 << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << px(xv) << "\" y=\"" << height - mb + 20
            << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">"
            << format_value(xv).substr(0, 6) << "</text>\n";
        svg << "<line x1=\"" << ml - 5 << "\" y1=\"" << py(yv) << "\" x2=\"" << ml << "\" y2=\""
            << py(yv) << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << ml - 8 << "\" y=\"" << py(yv) + 4
            << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">"
            << format_value(yv).substr(0, 6) << "</text>\n";
    }

    std::size_t color_index = 0;
    double legend_y = mt + 10;
    for (const auto& [measure, runs] : series) {
        const std::string& color = palette[color_index % palette.size()];
        for (const auto& run : runs) {
            svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
            for (const SweepRecord* r : run) svg << px(r->theta) << "," << py(r->value) << " ";
            svg << "\"/>\n";
        }
        svg << "<line x1=\"" << width - mr + 10 << "\" y1=\"" << legend_y << "\" x2=\""
            << width - mr + 34 << "\" y2=\"" << legend_y << "\" stroke=\"" << color
            << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << width - mr + 40 << "\" y=\"" << legend_y + 4
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << measure << "</text>\n";
        legend_y += 18;
        ++color_index;
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace

const std::vector<std::string>& figure_names() {
    static const std::vector<std::string> names = {"fig2a", "fig2b", "fig2c", "fig3a", "fig3b",
                                                   "fig3c", "fig3d", "fig4a", "fig4b"};
    return names;
}

bool is_figure_name(const std::string& name) {
    const auto& names = figure_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

FigureOutput write_figure(const std::string& name, const std::string& outdir, bool plot) {
    const FigureData data = make_figure(name);

    std::error_code ec;
    std::filesystem::create_directories(outdir, ec);
    if (ec) throw IoError("cannot create output directory '" + outdir + "': " + ec.message());

    FigureOutput out;
    out.csv_path = (std::filesystem::path(outdir) / (name + ".csv")).string();
    write_csv_file(out.csv_path, format_csv(data.records, data.metadata));
    if (plot) {
        const std::string svg_path = (std::filesystem::path(outdir) / (name + ".svg")).string();
        write_csv_file(svg_path, render_svg(data, name));
        out.svg_path = svg_path;
    }
    return out;
}

}  // namespace abring
