#pragma once

#include "report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cli {

struct VerifyOptions {
    int k;
    int n;
    uint64_t seed;
    std::size_t samples;
};

std::vector<std::string> suite_names(); // excludes "all"

// Runs one named suite ("all" runs every suite) and returns its result rows.
// Throws std::invalid_argument for an unknown suite name.
std::vector<Row> run_suite(const std::string& suite, const VerifyOptions& opt);

} // namespace cli
