#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "opmine/preprocess.hpp"

namespace opmine {

// Sparse nonnegative integer count vector over a vocabulary of size dim.
// Entries are (word index, count) pairs, index-sorted, counts > 0.
struct CountVector {
  std::uint32_t dim = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> entries;

  std::uint32_t at(std::uint32_t k) const;
  std::uint64_t token_total() const;
  std::vector<std::uint32_t> dense() const;

  bool operator==(const CountVector&) const = default;
};

// Exact squared Euclidean distance between two count vectors.
std::uint64_t squared_distance(const CountVector& a, const CountVector& b);

// Words x documents count matrix; column j is the count vector of document j.
struct TermDocumentMatrix {
  Vocabulary vocabulary;
  std::vector<CountVector> columns;

  std::size_t word_count() const { return vocabulary.size(); }
  std::size_t doc_count() const { return columns.size(); }
};

// Out-of-vocabulary tokens are ignored.
CountVector vectorize_doc(const TokenList& tokens, const Vocabulary& vocab);

TermDocumentMatrix build_tdm(const std::vector<TokenList>& docs,
                             const Vocabulary& vocab);

// Dense CSV: header row of document ids, first column of words.
void write_tdm_csv(const TermDocumentMatrix& tdm,
                   const std::vector<std::string>& doc_ids, std::ostream& out);

// Sparse JSON array of {"word", "doc_index", "count"} triples.
void write_tdm_sparse_json(const TermDocumentMatrix& tdm, std::ostream& out);

}  // namespace opmine
