// Command-line front end: theta sweeps from config files, figure-data
// regeneration, and the numerical verification suites.

#include "abring/config.hpp"
#include "abring/figures.hpp"
#include "abring/sweep.hpp"
#include "abring/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>

namespace {

// 0 success, 1 verification failure, 2 configuration error, 3 I/O error.
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitIoError = 3;

int run_sweep_command(const std::string& config_path, const std::string& out_path) {
    abring::RunConfig config = abring::load_config_file(config_path);
    std::string path = out_path.empty() ? config.out_csv : out_path;
    if (path.empty()) {
        throw abring::ConfigError("no output path: pass --out or set [output] csv");
    }
    const std::vector<abring::SweepRecord> records = abring::run_sweep(config);
    abring::write_csv_file(path, abring::format_csv(records));
    std::cout << "wrote " << records.size() << " rows to " << path << "\n";
    return kExitOk;
}

int run_verify_command(const std::string& suite, std::uint64_t seed) {
    if (!abring::is_verify_suite(suite)) {
        std::cerr << "error: unknown suite '" << suite << "' (available:";
        for (const std::string& name : abring::verify_suite_names()) std::cerr << " " << name;
        std::cerr << " all)\n";
        return kExitConfigError;
    }
    const std::vector<abring::CheckResult> results = abring::run_verify_suite(suite, seed);
    bool all_pass = true;
    for (const abring::CheckResult& r : results) {
        char line[256];
        std::snprintf(line, sizeof(line), "[%s] %-38s tol %-8.3g worst %-12.4g", r.pass ? "PASS" : "FAIL",
                      r.name.c_str(), r.tolerance, r.worst);
        std::cout << line;
        if (!r.note.empty()) std::cout << "  " << r.note;
        std::cout << "\n";
        all_pass = all_pass && r.pass;
    }
    std::cout << (all_pass ? "all checks passed" : "CHECKS FAILED") << " (" << results.size()
              << " checks, seed " << seed << ")\n";
    return all_pass ? kExitOk : kExitVerifyFailure;
}

int run_figure_command(const std::string& name, const std::string& outdir, bool plot) {
    const abring::FigureOutput out = abring::write_figure(name, outdir, plot);
    std::cout << "wrote " << out.csv_path;
    if (out.svg_path) std::cout << " and " << *out.svg_path;
    std::cout << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entropic realism diagnostics for flux-threaded two-arm interferometers"};
    app.require_subcommand(1);

    std::string config_path, out_path;
    CLI::App* sweep = app.add_subcommand("sweep", "evaluate configured measures over a theta grid");
    sweep->add_option("--config", config_path, "run configuration file")->required();
    sweep->add_option("--out", out_path, "output CSV path (overrides [output] csv)");

    std::string suite = "all";
    std::uint64_t seed = 20240915;
    CLI::App* verify = app.add_subcommand("verify", "run the numerical verification suites");
    verify->add_option("suite", suite, "suite name or 'all'");
    verify->add_option("--seed", seed, "seed for the randomized suites");

    std::string figure_name, outdir = ".";
    bool plot = false;
    CLI::App* figure = app.add_subcommand("figure", "regenerate a figure dataset");
    figure->add_option("name", figure_name, "one of: fig2a fig2b fig2c fig3a..fig3d fig4a fig4b")
        ->required();
    figure->add_option("--outdir", outdir, "output directory");
    figure->add_flag("--plot", plot, "also write an SVG plot");

    try {
        app.parse(argc, argv);
        if (sweep->parsed()) return run_sweep_command(config_path, out_path);
        if (verify->parsed()) return run_verify_command(suite, seed);
        if (figure->parsed()) return run_figure_command(figure_name, outdir, plot);
        return kExitConfigError;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfigError;
    } catch (const abring::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoError;
    } catch (const abring::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    }
}
