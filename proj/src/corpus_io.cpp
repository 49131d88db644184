#include "opmine/corpus_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "opmine/csv.hpp"
#include "opmine/random.hpp"

#include <json.hpp>

namespace opmine {

namespace {

constexpr const char* kCsvHeader = "id,timestamp,dataset_tag,label,text";

std::optional<Sentiment> parse_label(const std::string& value, int line_no) {
  if (value.empty()) return std::nullopt;
  auto label = sentiment_from_string(value);
  if (!label) {
    throw std::runtime_error(
        "line " + std::to_string(line_no) + ": unknown label '" + value +
        "' (expected positive, neutral or negative)");
  }
  return label;
}

std::vector<PostRecord> load_jsonl(std::istream& in, std::vector<int>& lines) {
  std::vector<PostRecord> records;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": invalid JSON: " + e.what());
    }
    auto field = [&](const char* key) -> std::string {
      if (!obj.contains(key) || !obj[key].is_string()) {
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": missing string key '" + key + "'");
      }
      return obj[key].get<std::string>();
    };
    PostRecord rec;
    rec.id = field("id");
    try {
      rec.timestamp = parse_timestamp_utc(field("timestamp"));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": " +
                               e.what());
    }
    rec.text = field("text");
    rec.dataset_tag = field("dataset_tag");
    if (obj.contains("label")) {
      if (!obj["label"].is_string()) {
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": label must be a string");
      }
      rec.gold_label = parse_label(obj["label"].get<std::string>(), line_no);
    }
    records.push_back(std::move(rec));
    lines.push_back(line_no);
  }
  return records;
}

std::vector<PostRecord> load_csv(std::istream& in, std::vector<int>& lines) {
  CsvReader reader(in);
  std::vector<std::string> fields;
  if (!reader.next_row(fields)) {
    return {};  // empty file: no header, no records
  }
  // Tolerate a UTF-8 BOM in front of the header.
  if (!fields.empty() && fields[0].rfind("\xef\xbb\xbf", 0) == 0) {
    fields[0].erase(0, 3);
  }
  std::string header;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) header.push_back(',');
    header += fields[i];
  }
  if (header != kCsvHeader) {
    throw std::runtime_error("line 1: expected CSV header '" +
                             std::string(kCsvHeader) + "', got '" + header +
                             "'");
  }
  std::vector<PostRecord> records;
  while (reader.next_row(fields)) {
    int line_no = reader.row_line();
    if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
    if (fields.size() != 5) {
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": expected 5 fields, got " +
                               std::to_string(fields.size()));
    }
    PostRecord rec;
    rec.id = fields[0];
    try {
      rec.timestamp = parse_timestamp_utc(fields[1]);
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": " +
                               e.what());
    }
    rec.dataset_tag = fields[2];
    rec.gold_label = parse_label(fields[3], line_no);
    rec.text = fields[4];
    records.push_back(std::move(rec));
    lines.push_back(line_no);
  }
  return records;
}

void check_unique_ids(const std::vector<PostRecord>& records,
                      const std::vector<int>& record_lines) {
  std::map<std::string, std::vector<int>> lines_by_id;
  for (std::size_t i = 0; i < records.size(); ++i) {
    lines_by_id[records[i].id].push_back(record_lines[i]);
  }
  std::string offenders;
  for (const auto& [id, lines] : lines_by_id) {
    if (lines.size() < 2) continue;
    if (!offenders.empty()) offenders += "; ";
    offenders += "'" + id + "' (lines ";
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (i) offenders += ", ";
      offenders += std::to_string(lines[i]);
    }
    offenders += ")";
  }
  if (!offenders.empty()) {
    throw std::runtime_error("duplicate post ids: " + offenders);
  }
  for (const auto& rec : records) {
    if (rec.id.empty()) throw std::runtime_error("empty post id");
  }
}

}  // namespace

std::vector<PostRecord> load_posts(const std::string& path, PostFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open posts file: " + path);
  std::vector<int> record_lines;
  std::vector<PostRecord> records = format == PostFormat::jsonl
                                        ? load_jsonl(in, record_lines)
                                        : load_csv(in, record_lines);
  check_unique_ids(records, record_lines);
  return records;
}

void save_posts(const std::string& path, const std::vector<PostRecord>& records,
                PostFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  if (format == PostFormat::jsonl) {
    for (const auto& rec : records) {
      nlohmann::json obj = {
          {"id", rec.id},
          {"timestamp", format_timestamp_utc(rec.timestamp)},
          {"text", rec.text},
          {"dataset_tag", rec.dataset_tag},
      };
      if (rec.gold_label) obj["label"] = std::string(to_string(*rec.gold_label));
      out << obj.dump() << '\n';
    }
  } else {
    out << kCsvHeader << '\n';
    for (const auto& rec : records) {
      out << csv_escape(rec.id) << ',' << format_timestamp_utc(rec.timestamp)
          << ',' << csv_escape(rec.dataset_tag) << ','
          << (rec.gold_label ? to_string(*rec.gold_label) : "") << ','
          << csv_escape(rec.text) << '\n';
    }
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

DatasetSplit split_train_test(const std::vector<PostRecord>& records,
                              double ratio, std::uint64_t seed) {
  if (records.size() < 2) {
    throw std::invalid_argument("split requires at least two records, got " +
                                std::to_string(records.size()));
  }
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw std::invalid_argument("split ratio must be in (0,1)");
  }
  std::vector<std::size_t> order(records.size());
  std::iota(order.begin(), order.end(), 0);
  SplitMix64 rng(seed);
  shuffle(order, rng);

  // Round half up.
  auto train_size = static_cast<std::size_t>(
      std::floor(ratio * static_cast<double>(records.size()) + 0.5));
  DatasetSplit split;
  split.seed = seed;
  split.ratio = ratio;
  split.train.reserve(train_size);
  split.test.reserve(records.size() - train_size);
  for (std::size_t i = 0; i < order.size(); ++i) {
    (i < train_size ? split.train : split.test).push_back(records[order[i]]);
  }
  return split;
}

}  // namespace opmine
