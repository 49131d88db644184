#include "opmine/lexicon.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "opmine/csv.hpp"

namespace opmine {

namespace {

double parse_real(const std::string& field, int line_no, const char* what) {
  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(field, &consumed);
  } catch (const std::exception&) {
    consumed = 0;
  }
  if (consumed != field.size() || field.empty()) {
    throw std::runtime_error("lexicon line " + std::to_string(line_no) +
                             ": cannot parse " + what + " '" + field + "'");
  }
  return value;
}

}  // namespace

Lexicon load_lexicon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lexicon file: " + path);
  Lexicon lexicon;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto tab1 = line.find('\t');
    auto tab2 = tab1 == std::string::npos ? std::string::npos
                                          : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos) {
      throw std::runtime_error("lexicon line " + std::to_string(line_no) +
                               ": expected word<TAB>polarity<TAB>subjectivity");
    }
    std::string word = line.substr(0, tab1);
    double polarity =
        parse_real(line.substr(tab1 + 1, tab2 - tab1 - 1), line_no, "polarity");
    double subjectivity =
        parse_real(line.substr(tab2 + 1), line_no, "subjectivity");
    if (!(polarity >= -1.0 && polarity <= 1.0)) {
      throw std::runtime_error("lexicon line " + std::to_string(line_no) +
                               ": polarity out of [-1,1] for '" + word + "'");
    }
    if (!(subjectivity >= 0.0 && subjectivity <= 1.0)) {
      throw std::runtime_error("lexicon line " + std::to_string(line_no) +
                               ": subjectivity out of [0,1] for '" + word + "'");
    }
    auto [it, inserted] =
        lexicon.entries.try_emplace(word, LexiconEntry{polarity, subjectivity});
    if (!inserted) {
      throw std::runtime_error("lexicon line " + std::to_string(line_no) +
                               ": duplicate word '" + word + "'");
    }
  }
  return lexicon;
}

SentimentScore score_document(const TokenList& tokens, const Lexicon& lexicon) {
  double polarity_sum = 0.0;
  double subjectivity_sum = 0.0;
  std::uint32_t scored = 0;
  for (const auto& token : tokens) {
    auto it = lexicon.entries.find(token);
    if (it == lexicon.entries.end()) continue;
    polarity_sum += it->second.polarity;
    subjectivity_sum += it->second.subjectivity;
    ++scored;
  }
  SentimentScore score;
  if (scored == 0) return score;
  score.scored_word_count = scored;
  score.polarity = polarity_sum / scored;
  score.subjectivity = subjectivity_sum / scored;
  if (score.polarity > kNeutralTolerance) {
    score.label = Sentiment::positive;
  } else if (score.polarity < -kNeutralTolerance) {
    score.label = Sentiment::negative;
  } else {
    score.label = Sentiment::neutral;
  }
  return score;
}

LabelCounts label_distribution(const std::vector<SentimentScore>& scores) {
  LabelCounts counts;
  for (const auto& s : scores) {
    switch (s.label) {
      case Sentiment::positive: ++counts.positive; break;
      case Sentiment::neutral: ++counts.neutral; break;
      case Sentiment::negative: ++counts.negative; break;
    }
  }
  return counts;
}

void write_scores_csv(const std::vector<std::string>& doc_ids,
                      const std::vector<SentimentScore>& scores,
                      std::ostream& out) {
  if (doc_ids.size() != scores.size()) {
    throw std::invalid_argument("doc id count does not match score count");
  }
  out << "doc_id,polarity,subjectivity,label,scored_word_count\n";
  char buf[64];
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const auto& s = scores[i];
    std::snprintf(buf, sizeof(buf), "%.6f,%.6f", s.polarity, s.subjectivity);
    out << csv_escape(doc_ids[i]) << ',' << buf << ',' << to_string(s.label)
        << ',' << s.scored_word_count << '\n';
  }
}

}  // namespace opmine
