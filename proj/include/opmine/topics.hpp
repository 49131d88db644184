#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "opmine/vectorize.hpp"

namespace opmine {

struct TermFrequencyRow {
  std::string word;
  std::uint64_t total_count = 0;

  bool operator==(const TermFrequencyRow&) const = default;
};

// Sorted by count descending, then word ascending.
using TermFrequencyTable = std::vector<TermFrequencyRow>;

// One row per vocabulary word; counts are exact TDM row sums.
TermFrequencyTable term_frequencies(const TermDocumentMatrix& tdm);

// First min(k, |table|) rows. k >= 1.
TermFrequencyTable top_k(const TermFrequencyTable& table, std::size_t k);

// JSON array of {"word", "count"}, descending, for external renderers.
void write_wordcloud_json(const TermFrequencyTable& table, std::ostream& out);

}  // namespace opmine
