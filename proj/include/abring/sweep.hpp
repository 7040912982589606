#pragma once

#include "abring/config.hpp"

#include <functional>
#include <string>
#include <vector>

namespace abring {

struct SweepRecord {
    double theta = 0.0;
    std::string measure;
    double value = 0.0;
    std::string branch;  // "pre" | "post" | "n/a"
};

// A measure spec resolved against its scenario: a realism curve evaluated
// through the generic dephasing path. crossing_sensitive marks operators that
// carry the chord term and therefore jump at pi/2.
struct ResolvedMeasure {
    std::string name;
    bool crossing_sensitive = false;
    std::function<double(double)> eval;
};

// Throws ConfigError for measure names the scenario cannot build.
std::vector<ResolvedMeasure> resolve_measures(const RunConfig& config);

// Evaluates every measure over the configured grid. Rows come out sorted by
// theta ascending, then measure name; points shadowed by the pi/2 exclusion
// window are replaced by the one-sided pair.
std::vector<SweepRecord> run_sweep(const RunConfig& config);

// 12 significant digits, LF line endings, header "theta,measure,value,branch".
std::string format_csv(const std::vector<SweepRecord>& records,
                       const std::vector<std::string>& metadata = {});
void write_csv_file(const std::string& path, const std::string& content);

std::string format_value(double v);  // %.12g

}  // namespace abring
