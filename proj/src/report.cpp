#include "degenlab/report.hpp"

#include "degenlab/errors.hpp"
#include "degenlab/version.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace degenlab {

bool ExperimentReport::all_pass() const {
    for (const auto& v : verdicts)
        if (!v.pass) return false;
    return true;
}

void ExperimentReport::add_metric(const std::string& name, double value) {
    metrics.emplace_back(name, value);
}

void ExperimentReport::add_verdict(const SharpnessVerdict& v) {
    VerdictEntry e;
    e.experiment = v.experiment;
    e.pass = v.pass;
    for (const auto& [k, val] : v.details) e.details.emplace_back(k, val);
    e.notes = v.notes;
    verdicts.push_back(std::move(e));
    for (const auto& c : v.curves) curves.push_back(c);
}

std::string format_number(double v) {
    if (v == 0.0) return "0";
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

void require_finite(double v, const std::string& where) {
    if (!std::isfinite(v))
        throw Error(ErrorCode::schema_violation, "non-finite value in " + where);
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

std::string provenance_timestamp(const ExperimentReport& report) {
    for (const auto& [k, v] : report.config_echo)
        if (k == "timestamp") return v;
    if (const char* env = std::getenv("SOURCE_DATE_EPOCH")) return env;
    return "unset";
}

} // namespace

std::string report_json(const ExperimentReport& report) {
    std::string j;
    j += "{\n";
    j += "  \"schema_version\": " + std::to_string(ExperimentReport::schema_version) + ",\n";
    j += "  \"command\": \"" + json_escape(report.command) + "\",\n";
    j += "  \"provenance\": {\"artifact_version\": \"" + std::string(kVersion) +
         "\", \"timestamp\": \"" + json_escape(provenance_timestamp(report)) + "\"},\n";

    j += "  \"config\": {";
    for (std::size_t i = 0; i < report.config_echo.size(); ++i) {
        if (i) j += ", ";
        j += "\"" + json_escape(report.config_echo[i].first) + "\": \"" +
             json_escape(report.config_echo[i].second) + "\"";
    }
    j += "},\n";

    j += "  \"metrics\": {";
    for (std::size_t i = 0; i < report.metrics.size(); ++i) {
        require_finite(report.metrics[i].second, "metric " + report.metrics[i].first);
        if (i) j += ", ";
        j += "\"" + json_escape(report.metrics[i].first) +
             "\": " + format_number(report.metrics[i].second);
    }
    j += "},\n";

    j += "  \"verdicts\": [";
    for (std::size_t i = 0; i < report.verdicts.size(); ++i) {
        const auto& v = report.verdicts[i];
        if (i) j += ", ";
        j += "{\"experiment\": \"" + json_escape(v.experiment) + "\", \"pass\": ";
        j += v.pass ? "true" : "false";
        j += ", \"details\": {";
        for (std::size_t k = 0; k < v.details.size(); ++k) {
            require_finite(v.details[k].second, "verdict detail " + v.details[k].first);
            if (k) j += ", ";
            j += "\"" + json_escape(v.details[k].first) +
                 "\": " + format_number(v.details[k].second);
        }
        j += "}, \"notes\": [";
        for (std::size_t k = 0; k < v.notes.size(); ++k) {
            if (k) j += ", ";
            j += "\"" + json_escape(v.notes[k]) + "\"";
        }
        j += "]}";
    }
    j += "],\n";

    j += "  \"files\": [\"report.json\"";
    for (const auto& c : report.curves) j += ", \"" + json_escape(c.name) + ".csv\"";
    j += "],\n";

    j += "  \"notes\": [";
    for (std::size_t i = 0; i < report.notes.size(); ++i) {
        if (i) j += ", ";
        j += "\"" + json_escape(report.notes[i]) + "\"";
    }
    j += "],\n";

    j += std::string("  \"all_pass\": ") + (report.all_pass() ? "true" : "false") + "\n";
    j += "}\n";
    return j;
}

std::string curve_csv(const Curve& curve) {
    std::string out;
    for (std::size_t i = 0; i < curve.columns.size(); ++i) {
        if (i) out += ",";
        out += curve.columns[i];
    }
    out += "\n";
    for (const auto& row : curve.rows) {
        if (row.size() != curve.columns.size())
            throw Error(ErrorCode::schema_violation, "curve row width mismatch in " + curve.name);
        for (std::size_t i = 0; i < row.size(); ++i) {
            require_finite(row[i], "curve " + curve.name);
            if (i) out += ",";
            out += format_number(row[i]);
        }
        out += "\n";
    }
    return out;
}

std::vector<std::string> write_report(const ExperimentReport& report,
                                      const std::string& out_dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw Error(ErrorCode::io_failure, "cannot create " + out_dir + ": " + ec.message());

    const auto write_file = [&](const std::string& name, const std::string& bytes) {
        const auto path = fs::path(out_dir) / name;
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        if (!f) throw Error(ErrorCode::io_failure, "cannot open " + path.string());
        f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!f) throw Error(ErrorCode::io_failure, "short write to " + path.string());
    };

    std::vector<std::string> names;
    write_file("report.json", report_json(report));
    names.push_back("report.json");
    for (const auto& c : report.curves) {
        write_file(c.name + ".csv", curve_csv(c));
        names.push_back(c.name + ".csv");
    }
    return names;
}

} // namespace degenlab
