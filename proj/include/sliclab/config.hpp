#pragma once

#include <map>
#include <string>
#include <vector>

namespace slic {

/// Flat key-value config with [section] headers; '#' starts a comment.
/// Keys are addressed as "section.key".
class Config {
public:
    static Config parse_file(const std::string& path);
    static Config parse_string(const std::string& text);

    bool has(const std::string& key) const;
    std::string get(const std::string& key) const;
    std::string get_or(const std::string& key, const std::string& fallback) const;
    double get_number(const std::string& key) const;
    double get_number_or(const std::string& key, double fallback) const;
    std::vector<int> get_int_list(const std::string& key) const;   // comma separated

    const std::map<std::string, std::string>& entries() const { return values_; }

private:
    std::map<std::string, std::string> values_;
};

} // namespace slic
