// Copyright 2026 the forecastlab authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
#include "forecastlab/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "forecastlab/errors.hpp"

namespace forecastlab {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> items;
    std::string item;
    std::istringstream stream(value);
    while (std::getline(stream, item, ',')) {
        items.push_back(trim(item));
    }
    return items;
}

double parse_double(const std::string& text, const std::string& context) {
    try {
        std::size_t used = 0;
        const double value = std::stod(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument(text);
        }
        return value;
    } catch (const std::exception&) {
        throw input_error(context + ": expected a number, got '" + text + "'");
    }
}

}  // namespace

ConfigMap ConfigMap::parse(std::istream& in, const std::string& source_name) {
    ConfigMap config;
    config.source_name_ = source_name;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw input_error(source_name + ":" + std::to_string(line_no) +
                              ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw input_error(source_name + ":" + std::to_string(line_no) + ": empty key");
        }
        if (config.entries_.contains(key)) {
            throw input_error(source_name + ":" + std::to_string(line_no) + ": duplicate key '" +
                              key + "'");
        }
        config.entries_[key] = Entry{value, line_no};
    }
    return config;
}

ConfigMap ConfigMap::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw input_error("cannot open config file: " + path);
    }
    return parse(in, path);
}

bool ConfigMap::has(const std::string& key) const { return entries_.contains(key); }

std::string ConfigMap::get_string(const std::string& key, const std::string& fallback) const {
    const auto it = entries_.find(key);
    return it == entries_.end() ? fallback : it->second.value;
}

std::string ConfigMap::require_string(const std::string& key) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) {
        throw input_error(source_name_ + ": missing required key '" + key + "'");
    }
    return it->second.value;
}

double ConfigMap::get_double(const std::string& key, double fallback) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) {
        return fallback;
    }
    return parse_double(it->second.value, source_name_ + ": key '" + key + "'");
}

int ConfigMap::get_int(const std::string& key, int fallback) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) {
        return fallback;
    }
    const std::string& text = it->second.value;
    int value = 0;
    const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
    if (result.ec != std::errc{} || result.ptr != text.data() + text.size()) {
        throw input_error(source_name_ + ": key '" + key + "': expected an integer, got '" + text +
                          "'");
    }
    return value;
}

std::uint64_t ConfigMap::get_uint64(const std::string& key, std::uint64_t fallback) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) {
        return fallback;
    }
    const std::string& text = it->second.value;
    std::uint64_t value = 0;
    const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
    if (result.ec != std::errc{} || result.ptr != text.data() + text.size()) {
        throw input_error(source_name_ + ": key '" + key + "': expected an unsigned integer, got '" +
                          text + "'");
    }
    return value;
}

bool ConfigMap::get_bool(const std::string& key, bool fallback) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) {
        return fallback;
    }
    const std::string& text = it->second.value;
    if (text == "true" || text == "1" || text == "yes") {
        return true;
    }
    if (text == "false" || text == "0" || text == "no") {
        return false;
    }
    throw input_error(source_name_ + ": key '" + key + "': expected a boolean, got '" + text + "'");
}

std::vector<double> ConfigMap::get_double_list(const std::string& key,
                                               const std::vector<double>& fallback) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) {
        return fallback;
    }
    std::vector<double> values;
    for (const std::string& item : split_list(it->second.value)) {
        values.push_back(parse_double(item, source_name_ + ": key '" + key + "'"));
    }
    return values;
}

std::vector<int> ConfigMap::get_int_list(const std::string& key,
                                         const std::vector<int>& fallback) const {
    const auto it = entries_.find(key);
    if (it == entries_.end()) {
        return fallback;
    }
    std::vector<int> values;
    for (const std::string& item : split_list(it->second.value)) {
        int value = 0;
        const auto result = std::from_chars(item.data(), item.data() + item.size(), value);
        if (result.ec != std::errc{} || result.ptr != item.data() + item.size()) {
            throw input_error(source_name_ + ": key '" + key + "': expected integers, got '" + item +
                              "'");
        }
        values.push_back(value);
    }
    return values;
}

void ConfigMap::reject_unknown_keys(const std::vector<std::string>& allowed) const {
    std::string unknown;
    for (const auto& [key, entry] : entries_) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            if (!unknown.empty()) {
                unknown += ", ";
            }
            unknown += "'" + key + "' (line " + std::to_string(entry.line_no) + ")";
        }
    }
    if (!unknown.empty()) {
        throw input_error(source_name_ + ": unknown keys: " + unknown);
    }
}

}  // namespace forecastlab
