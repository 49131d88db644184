#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace opmine {

// Minimal RFC-4180-style CSV reader: quoted fields may contain commas,
// doubled quotes and newlines. Tracks the file line each row starts on.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in) : in_(in) {}

  // Reads one row into `fields`; returns false at end of input.
  bool next_row(std::vector<std::string>& fields);

  // 1-based line number of the row last returned by next_row.
  int row_line() const { return row_line_; }

 private:
  std::istream& in_;
  int line_ = 1;
  int row_line_ = 0;
};

// Quotes a field if it contains a comma, quote or newline.
std::string csv_escape(std::string_view field);

}  // namespace opmine
