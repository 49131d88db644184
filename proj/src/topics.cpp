#include "opmine/topics.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace opmine {

TermFrequencyTable term_frequencies(const TermDocumentMatrix& tdm) {
  std::vector<std::uint64_t> row_sums(tdm.word_count(), 0);
  for (const auto& col : tdm.columns) {
    for (const auto& [k, c] : col.entries) row_sums[k] += c;
  }
  TermFrequencyTable table;
  table.reserve(tdm.word_count());
  for (std::size_t w = 0; w < tdm.word_count(); ++w) {
    table.push_back({tdm.vocabulary.words[w], row_sums[w]});
  }
  std::sort(table.begin(), table.end(),
            [](const TermFrequencyRow& a, const TermFrequencyRow& b) {
              if (a.total_count != b.total_count) {
                return a.total_count > b.total_count;
              }
              return a.word < b.word;
            });
  return table;
}

TermFrequencyTable top_k(const TermFrequencyTable& table, std::size_t k) {
  if (k < 1) throw std::invalid_argument("top_k requires k >= 1");
  TermFrequencyTable out(table.begin(),
                         table.begin() + static_cast<std::ptrdiff_t>(
                                             std::min(k, table.size())));
  return out;
}

void write_wordcloud_json(const TermFrequencyTable& table, std::ostream& out) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table) {
    rows.push_back({{"word", row.word}, {"count", row.total_count}});
  }
  out << rows.dump(2) << '\n';
}

}  // namespace opmine
