#pragma once

#include "degenlab/sharpness.hpp"

#include <map>
#include <string>
#include <vector>

namespace degenlab {

struct VerdictEntry {
    std::string experiment;
    bool pass;
    std::vector<std::pair<std::string, double>> details;
    std::vector<std::string> notes;
};

// Structured result of one harness command. Serialization is byte-stable:
// insertion-ordered keys, floats at 12 significant digits.
struct ExperimentReport {
    static constexpr int schema_version = 1;

    std::string command;
    std::vector<std::pair<std::string, std::string>> config_echo;
    std::vector<std::pair<std::string, double>> metrics;
    std::vector<VerdictEntry> verdicts;
    std::vector<Curve> curves;      // written as <name>.csv next to report.json
    std::vector<std::string> notes;

    bool all_pass() const;

    void add_metric(const std::string& name, double value);
    void add_verdict(const SharpnessVerdict& v);
};

// 12-significant-digit float formatting shared by JSON and CSV output.
std::string format_number(double v);

// JSON bytes of the report (deterministic). Fails with schema_violation if
// any metric or curve entry is not finite.
std::string report_json(const ExperimentReport& report);

// CSV bytes of one curve (header row + format_number cells).
std::string curve_csv(const Curve& curve);

// Writes report.json and one CSV per curve into out_dir (created if
// needed); returns the file names written. Fails with io_failure.
std::vector<std::string> write_report(const ExperimentReport& report, const std::string& out_dir);

} // namespace degenlab
