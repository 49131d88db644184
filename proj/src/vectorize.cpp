#include "opmine/vectorize.hpp"

#include <algorithm>
#include <stdexcept>

#include "opmine/csv.hpp"

#include <json.hpp>

namespace opmine {

std::uint32_t CountVector::at(std::uint32_t k) const {
  auto it = std::lower_bound(
      entries.begin(), entries.end(), k,
      [](const auto& entry, std::uint32_t key) { return entry.first < key; });
  if (it == entries.end() || it->first != k) return 0;
  return it->second;
}

std::uint64_t CountVector::token_total() const {
  std::uint64_t total = 0;
  for (const auto& [k, c] : entries) total += c;
  return total;
}

std::vector<std::uint32_t> CountVector::dense() const {
  std::vector<std::uint32_t> out(dim, 0);
  for (const auto& [k, c] : entries) out[k] = c;
  return out;
}

std::uint64_t squared_distance(const CountVector& a, const CountVector& b) {
  if (a.dim != b.dim) {
    throw std::invalid_argument("count vector dimension mismatch: " +
                                std::to_string(a.dim) + " vs " +
                                std::to_string(b.dim));
  }
  std::uint64_t sum = 0;
  std::size_t i = 0, j = 0;
  auto add = [&sum](std::int64_t d) { sum += static_cast<std::uint64_t>(d * d); };
  while (i < a.entries.size() && j < b.entries.size()) {
    if (a.entries[i].first == b.entries[j].first) {
      add(static_cast<std::int64_t>(a.entries[i].second) -
          static_cast<std::int64_t>(b.entries[j].second));
      ++i;
      ++j;
    } else if (a.entries[i].first < b.entries[j].first) {
      add(a.entries[i].second);
      ++i;
    } else {
      add(b.entries[j].second);
      ++j;
    }
  }
  for (; i < a.entries.size(); ++i) add(a.entries[i].second);
  for (; j < b.entries.size(); ++j) add(b.entries[j].second);
  return sum;
}

CountVector vectorize_doc(const TokenList& tokens, const Vocabulary& vocab) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> counts;
  for (const auto& token : tokens) {
    if (auto k = vocab.find(token)) counts.emplace_back(*k, 1);
  }
  std::sort(counts.begin(), counts.end());
  CountVector vec;
  vec.dim = static_cast<std::uint32_t>(vocab.size());
  for (const auto& [k, c] : counts) {
    if (!vec.entries.empty() && vec.entries.back().first == k) {
      vec.entries.back().second += c;
    } else {
      vec.entries.emplace_back(k, c);
    }
  }
  return vec;
}

TermDocumentMatrix build_tdm(const std::vector<TokenList>& docs,
                             const Vocabulary& vocab) {
  TermDocumentMatrix tdm;
  tdm.vocabulary = vocab;
  tdm.columns.reserve(docs.size());
  for (const auto& doc : docs) tdm.columns.push_back(vectorize_doc(doc, vocab));
  return tdm;
}

void write_tdm_csv(const TermDocumentMatrix& tdm,
                   const std::vector<std::string>& doc_ids, std::ostream& out) {
  if (doc_ids.size() != tdm.doc_count()) {
    throw std::invalid_argument("document id count does not match matrix");
  }
  out << "word";
  for (const auto& id : doc_ids) out << ',' << csv_escape(id);
  out << '\n';
  // Dense export, intended for inspection at desk scale.
  std::vector<std::vector<std::uint32_t>> dense_cols;
  dense_cols.reserve(tdm.columns.size());
  for (const auto& col : tdm.columns) dense_cols.push_back(col.dense());
  for (std::size_t w = 0; w < tdm.word_count(); ++w) {
    out << csv_escape(tdm.vocabulary.words[w]);
    for (const auto& col : dense_cols) out << ',' << col[w];
    out << '\n';
  }
}

void write_tdm_sparse_json(const TermDocumentMatrix& tdm, std::ostream& out) {
  nlohmann::json triples = nlohmann::json::array();
  for (std::size_t j = 0; j < tdm.columns.size(); ++j) {
    for (const auto& [k, c] : tdm.columns[j].entries) {
      triples.push_back({{"word", tdm.vocabulary.words[k]},
                         {"doc_index", j},
                         {"count", c}});
    }
  }
  out << triples.dump(2) << '\n';
}

}  // namespace opmine
