#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace abring {

// One named numerical check: the worst deviation seen against its tolerance.
struct CheckResult {
    std::string name;
    double tolerance = 0.0;
    double worst = 0.0;
    bool pass = false;
    std::string note;
};

// Suite names accepted by run_suite (plus "all").
const std::vector<std::string>& verify_suite_names();
bool is_verify_suite(const std::string& name);

std::vector<CheckResult> run_verify_suite(const std::string& name, std::uint64_t seed);
std::vector<CheckResult> run_all_verify_suites(std::uint64_t seed);

}  // namespace abring
