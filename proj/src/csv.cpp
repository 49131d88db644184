#include "opmine/csv.hpp"

namespace opmine {

bool CsvReader::next_row(std::vector<std::string>& fields) {
  fields.clear();
  int c = in_.get();
  if (c == std::istream::traits_type::eof()) return false;

  row_line_ = line_;
  std::string field;
  bool quoted = false;
  bool row_done = false;
  while (!row_done) {
    if (c == std::istream::traits_type::eof()) {
      break;
    }
    char ch = static_cast<char>(c);
    if (ch == '\n') ++line_;
    if (quoted) {
      if (ch == '"') {
        int peek = in_.peek();
        if (peek == '"') {
          field.push_back('"');
          in_.get();
        } else {
          quoted = false;
        }
      } else {
        field.push_back(ch);
      }
    } else {
      switch (ch) {
        case '"':
          quoted = true;
          break;
        case ',':
          fields.push_back(std::move(field));
          field.clear();
          break;
        case '\r':
          if (in_.peek() == '\n') {
            in_.get();
            ++line_;
          }
          row_done = true;
          break;
        case '\n':
          row_done = true;
          break;
        default:
          field.push_back(ch);
      }
    }
    if (!row_done) c = in_.get();
  }
  fields.push_back(std::move(field));
  return true;
}

std::string csv_escape(std::string_view field) {
  bool needs_quotes = field.find_first_of(",\"\r\n") != std::string_view::npos;
  if (!needs_quotes) return std::string(field);
  std::string out;
  out.reserve(field.size() + 2);
  out.push_back('"');
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace opmine
