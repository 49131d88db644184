#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "opmine/post.hpp"
#include "opmine/preprocess.hpp"

namespace opmine {

struct LexiconEntry {
  double polarity = 0.0;      // [-1, 1]
  double subjectivity = 0.0;  // [0, 1]
};

// word -> (polarity, subjectivity); keys are lowercase preprocessed-form words.
struct Lexicon {
  std::unordered_map<std::string, LexiconEntry> entries;
};

// TSV "word<TAB>polarity<TAB>subjectivity", '#' comments. Throws on
// out-of-range values or duplicate words, naming the line.
Lexicon load_lexicon(const std::string& path);

struct SentimentScore {
  double polarity = 0.0;
  double subjectivity = 0.0;
  std::uint32_t scored_word_count = 0;
  Sentiment label = Sentiment::neutral;
};

// Polarity within this band of zero counts as neutral (floating-point guard).
inline constexpr double kNeutralTolerance = 1e-12;

// Mean polarity/subjectivity over the token occurrences present in the
// lexicon; words the lexicon does not score are excluded from the
// denominators. No scored words at all yields the all-zero neutral score.
SentimentScore score_document(const TokenList& tokens, const Lexicon& lexicon);

struct LabelCounts {
  std::uint64_t positive = 0;
  std::uint64_t neutral = 0;
  std::uint64_t negative = 0;

  std::uint64_t total() const { return positive + neutral + negative; }
  bool operator==(const LabelCounts&) const = default;
};

LabelCounts label_distribution(const std::vector<SentimentScore>& scores);

// CSV "doc_id,polarity,subjectivity,label,scored_word_count".
void write_scores_csv(const std::vector<std::string>& doc_ids,
                      const std::vector<SentimentScore>& scores,
                      std::ostream& out);

}  // namespace opmine
