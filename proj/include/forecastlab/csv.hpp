// Copyright 2026 the forecastlab authors. All rights reserved.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace forecastlab {

// Shortest decimal string that parses back to exactly the same double.
// Re-emitting a parsed table therefore reproduces it byte for byte.
std::string format_double(double value);

// A rectangular CSV table: one header line, comma-separated rows, and
// '#'-prefixed trailing metadata lines. "# rows: N" is always emitted first
// among the trailing comments.
class CsvTable {
  public:
    explicit CsvTable(std::vector<std::string> header);

    void add_row(std::vector<std::string> cells);
    void add_comment(const std::string& key, const std::string& value);

    const std::vector<std::string>& header() const { return header_; }
    const std::vector<std::vector<std::string>>& rows() const { return rows_; }
    const std::vector<std::string>& comments() const { return comments_; }

    void emit(std::ostream& out) const;
    std::string to_string() const;

    // Throws input_error on ragged rows, a stated row count that does not
    // match, or cells containing separators.
    static CsvTable parse(std::istream& in);

  private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
    std::vector<std::string> comments_;  // full "# ..." lines, minus the row count
};

}  // namespace forecastlab
