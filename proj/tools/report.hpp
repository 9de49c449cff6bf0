#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cli {

inline constexpr const char* tool_version = "1.0.0";

// One result line. The JSON schema is fixed for CI diffing:
// {name, status, value, expected, tolerance, std_error, detail} with null
// for fields that do not apply; scan subcommands put the classification in
// `detail` and exact integers are carried there as strings.
struct Row {
    std::string name;
    std::string status; // "pass", "fail", or "ok" (informational)
    std::optional<double> value;
    std::optional<double> expected;
    std::optional<double> tolerance;
    std::optional<double> std_error;
    std::string detail;
};

struct Report {
    nlohmann::json config;
    std::vector<Row> rows;

    bool any_fail() const;
    std::string to_json() const;
    std::string to_csv() const;
    std::string to_latex() const;
};

// Renders in the requested format and writes to `output_path`, or to stdout
// when the path is empty. Returns 0, or throws on I/O failure.
int emit(const Report& report, const std::string& format, const std::string& output_path);

} // namespace cli
