#include "degenlab/config.hpp"

#include "degenlab/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace degenlab {

namespace {
std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}
} // namespace

void RunConfig::set(const std::string& key, const std::string& value) {
    const std::string k = trim(key);
    if (k.empty()) throw Error(ErrorCode::config_invalid, "empty config key");
    for (auto& [ek, ev] : entries_)
        if (ek == k) { // last assignment wins
            ev = trim(value);
            return;
        }
    entries_.emplace_back(k, trim(value));
}

void RunConfig::load_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(ErrorCode::io_failure, "cannot read config file " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        const std::string t = trim(line);
        if (t.empty()) continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorCode::config_invalid,
                        path + ":" + std::to_string(lineno) + ": expected key=value");
        set(t.substr(0, eq), t.substr(eq + 1));
    }
}

const std::string* RunConfig::find(const std::string& key) const {
    for (const auto& [k, v] : entries_)
        if (k == key) return &v;
    return nullptr;
}

bool RunConfig::has(const std::string& key) const { return find(key) != nullptr; }

std::string RunConfig::get_string(const std::string& key, const std::string& fallback) const {
    const auto* v = find(key);
    return v ? *v : fallback;
}

double RunConfig::get_double(const std::string& key, double fallback) const {
    const auto* v = find(key);
    if (!v) return fallback;
    char* end = nullptr;
    const double out = std::strtod(v->c_str(), &end);
    if (end == v->c_str() || *end != '\0')
        throw Error(ErrorCode::config_invalid, "key '" + key + "': '" + *v + "' is not a number");
    return out;
}

int RunConfig::get_int(const std::string& key, int fallback) const {
    const auto* v = find(key);
    if (!v) return fallback;
    char* end = nullptr;
    const long out = std::strtol(v->c_str(), &end, 10);
    if (end == v->c_str() || *end != '\0')
        throw Error(ErrorCode::config_invalid,
                    "key '" + key + "': '" + *v + "' is not an integer");
    return static_cast<int>(out);
}

std::vector<double> RunConfig::get_double_list(const std::string& key,
                                               const std::vector<double>& fallback) const {
    const auto* v = find(key);
    if (!v) return fallback;
    std::vector<double> out;
    std::stringstream ss(*v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const std::string t = trim(item);
        if (t.empty())
            throw Error(ErrorCode::config_invalid, "key '" + key + "': empty list entry");
        char* end = nullptr;
        const double d = std::strtod(t.c_str(), &end);
        if (end == t.c_str() || *end != '\0')
            throw Error(ErrorCode::config_invalid,
                        "key '" + key + "': '" + t + "' is not a number");
        out.push_back(d);
    }
    if (out.empty()) throw Error(ErrorCode::config_invalid, "key '" + key + "': empty list");
    return out;
}

void RunConfig::require_known_keys(const std::vector<std::string>& allowed) const {
    for (const auto& [k, v] : entries_) {
        if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
            throw Error(ErrorCode::config_invalid, "unknown config key '" + k + "'");
    }
}

} // namespace degenlab
