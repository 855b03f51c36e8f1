#pragma once

#include <string>
#include <vector>

namespace degenlab {

// Flat key=value configuration: file lines plus command-line overrides,
// last assignment wins. '#' starts a comment. Values are strings until a
// command parses them; unknown keys are rejected at dispatch time.
class RunConfig {
public:
    void set(const std::string& key, const std::string& value);
    void load_file(const std::string& path); // config_invalid / io_failure

    bool has(const std::string& key) const;
    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

    // typed getters; config_invalid on parse failure
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;
    std::vector<double> get_double_list(const std::string& key,
                                        const std::vector<double>& fallback) const;

    // dispatch-time validation: every present key must be in allowed
    void require_known_keys(const std::vector<std::string>& allowed) const;

private:
    const std::string* find(const std::string& key) const;
    std::vector<std::pair<std::string, std::string>> entries_; // insertion order, unique keys
};

} // namespace degenlab
