// Copyright 2026 the forecastlab authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace forecastlab {

// Flat `key = value` configuration files: one assignment per line, '#' starts
// a comment, values are scalars or comma-separated lists. The full key set is
// documented in docs/config_schema.md; any key outside the schema a command
// declares is a hard error.
class ConfigMap {
  public:
    static ConfigMap parse(std::istream& in, const std::string& source_name);
    static ConfigMap parse_file(const std::string& path);

    bool has(const std::string& key) const;

    std::string get_string(const std::string& key, const std::string& fallback) const;
    std::string require_string(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;
    std::uint64_t get_uint64(const std::string& key, std::uint64_t fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::vector<double> get_double_list(const std::string& key,
                                        const std::vector<double>& fallback) const;
    std::vector<int> get_int_list(const std::string& key, const std::vector<int>& fallback) const;

    // Throws input_error naming the offending keys (with line numbers) when
    // the file contains anything outside `allowed`.
    void reject_unknown_keys(const std::vector<std::string>& allowed) const;

  private:
    struct Entry {
        std::string value;
        std::size_t line_no;
    };
    std::string source_name_;
    std::map<std::string, Entry> entries_;
};

}  // namespace forecastlab
