// Copyright 2026 the forecastlab authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
#include "forecastlab/csv.hpp"

#include <charconv>
#include <ostream>
#include <sstream>
#include <system_error>

#include "forecastlab/errors.hpp"

namespace forecastlab {

std::string format_double(double value) {
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (result.ec != std::errc{}) {
        throw std::runtime_error("format_double: conversion failed");
    }
    return std::string(buffer, result.ptr);
}

namespace {

std::vector<std::string> split_line(const std::string& line, std::size_t line_no) {
    std::vector<std::string> cells;
    std::string cell;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(cell);
            cell.clear();
        } else {
            cell.push_back(c);
        }
    }
    cells.push_back(cell);
    for (const std::string& c : cells) {
        if (c.find_first_of("#\n\r") != std::string::npos) {
            throw input_error("csv line " + std::to_string(line_no) + ": cell contains reserved character");
        }
    }
    return cells;
}

}  // namespace

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {
    if (header_.empty()) {
        throw std::invalid_argument("CsvTable: empty header");
    }
}

void CsvTable::add_row(std::vector<std::string> cells) {
    if (cells.size() != header_.size()) {
        throw std::invalid_argument("CsvTable: row width does not match header");
    }
    rows_.push_back(std::move(cells));
}

void CsvTable::add_comment(const std::string& key, const std::string& value) {
    comments_.push_back("# " + key + ": " + value);
}

void CsvTable::emit(std::ostream& out) const {
    for (std::size_t i = 0; i < header_.size(); ++i) {
        out << (i ? "," : "") << header_[i];
    }
    out << '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << row[i];
        }
        out << '\n';
    }
    out << "# rows: " << rows_.size() << '\n';
    for (const std::string& comment : comments_) {
        out << comment << '\n';
    }
}

std::string CsvTable::to_string() const {
    std::ostringstream out;
    emit(out);
    return out.str();
}

CsvTable CsvTable::parse(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) {
        throw input_error("csv: missing header line");
    }
    ++line_no;
    CsvTable table(split_line(line, line_no));

    bool saw_row_count = false;
    std::size_t stated_rows = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        if (line[0] == '#') {
            const std::string rows_prefix = "# rows: ";
            if (line.rfind(rows_prefix, 0) == 0) {
                const std::string count = line.substr(rows_prefix.size());
                const auto result =
                    std::from_chars(count.data(), count.data() + count.size(), stated_rows);
                if (result.ec != std::errc{} || result.ptr != count.data() + count.size()) {
                    throw input_error("csv line " + std::to_string(line_no) + ": bad row count");
                }
                saw_row_count = true;
            } else {
                table.comments_.push_back(line);
            }
            continue;
        }
        if (saw_row_count) {
            throw input_error("csv line " + std::to_string(line_no) + ": data after row count");
        }
        auto cells = split_line(line, line_no);
        if (cells.size() != table.header_.size()) {
            throw input_error("csv line " + std::to_string(line_no) + ": ragged row");
        }
        table.rows_.push_back(std::move(cells));
    }
    if (saw_row_count && stated_rows != table.rows_.size()) {
        throw input_error("csv: stated row count " + std::to_string(stated_rows) +
                          " does not match actual " + std::to_string(table.rows_.size()));
    }
    return table;
}

}  // namespace forecastlab
