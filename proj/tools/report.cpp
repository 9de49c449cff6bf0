#include "report.hpp"

#include <fstream>
#include <iostream>
#include <stdexcept>

namespace cli {

namespace {

// shortest round-trip representation, same in every output format
std::string num(const std::optional<double>& v)
{
    return v ? nlohmann::json(*v).dump() : std::string();
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n\r") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string latex_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '_': case '%': case '&': case '#': case '$': case '{': case '}':
            out += '\\';
            out += c;
            break;
        case '^':
            out += "\\textasciicircum{}";
            break;
        case '\\':
            out += "\\textbackslash{}";
            break;
        default:
            out += c;
        }
    }
    return out;
}

nlohmann::json opt_json(const std::optional<double>& v)
{
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

} // namespace

bool Report::any_fail() const
{
    for (const Row& r : rows)
        if (r.status == "fail")
            return true;
    return false;
}

std::string Report::to_json() const
{
    nlohmann::json doc;
    doc["tool_version"] = tool_version;
    doc["config"] = config;
    nlohmann::json results = nlohmann::json::array();
    for (const Row& r : rows) {
        nlohmann::json row;
        row["name"] = r.name;
        row["status"] = r.status;
        row["value"] = opt_json(r.value);
        row["expected"] = opt_json(r.expected);
        row["tolerance"] = opt_json(r.tolerance);
        row["std_error"] = opt_json(r.std_error);
        row["detail"] = r.detail.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.detail);
        results.push_back(std::move(row));
    }
    doc["results"] = std::move(results);
    return doc.dump(2);
}

std::string Report::to_csv() const
{
    std::string out = "name,status,value,expected,tolerance,std_error,detail\n";
    for (const Row& r : rows) {
        out += csv_field(r.name) + ',' + csv_field(r.status) + ',' + num(r.value) + ','
             + num(r.expected) + ',' + num(r.tolerance) + ',' + num(r.std_error) + ','
             + csv_field(r.detail) + '\n';
    }
    return out;
}

std::string Report::to_latex() const
{
    std::string out = "\\begin{tabular}{llrrrrl}\n"
                      "name & status & value & expected & tolerance & std.\\ error & detail \\\\\n"
                      "\\hline\n";
    for (const Row& r : rows) {
        out += latex_escape(r.name) + " & " + r.status + " & " + num(r.value) + " & "
             + num(r.expected) + " & " + num(r.tolerance) + " & " + num(r.std_error) + " & "
             + latex_escape(r.detail) + " \\\\\n";
    }
    out += "\\end{tabular}\n";
    return out;
}

int emit(const Report& report, const std::string& format, const std::string& output_path)
{
    std::string body;
    if (format == "json")
        body = report.to_json() + "\n";
    else if (format == "csv")
        body = report.to_csv();
    else if (format == "latex")
        body = report.to_latex();
    else
        throw std::invalid_argument("unknown output format: " + format);

    if (output_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(output_path, std::ios::binary);
        if (!f)
            throw std::runtime_error("cannot open output file: " + output_path);
        f << body;
    }
    return 0;
}

} // namespace cli
