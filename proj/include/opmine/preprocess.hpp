#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace opmine {

// Ordered lowercase alphabetic tokens, duplicates allowed.
using TokenList = std::vector<std::string>;

// Ordered set of unique tokens in first-occurrence order, with the inverse
// word -> 0-based index map. Its size N is the feature dimension.
struct Vocabulary {
  std::vector<std::string> words;
  std::unordered_map<std::string, std::uint32_t> index;

  std::size_t size() const { return words.size(); }

  std::optional<std::uint32_t> find(const std::string& word) const {
    auto it = index.find(word);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  // Order-sensitive fingerprint; models record it to detect feature-space
  // mismatches at load time.
  std::string checksum_hex() const;
};

struct PreprocessConfig {
  std::unordered_set<std::string> stopwords;
  // Whole-text substitution table; empty means identity.
  std::unordered_map<std::string, std::string> translation;
};

// Removes https?://... URLs, bare t.co/... shortlinks, #hashtags and
// @mentions, then collapses whitespace. Total function.
std::string strip_entities(std::string_view text);

// Whole-text table lookup; identity when no entry exists.
std::string translate_hook(const std::string& text,
                           const std::unordered_map<std::string, std::string>& table);

// Lowercases, transliterates accented Latin letters to their base letter,
// replaces everything non-alphabetic by spaces, collapses runs of 3+
// identical characters to 2 and squeezes whitespace. Idempotent.
std::string normalize(std::string_view text);

// Whitespace split; empty strings dropped.
TokenList tokenize(std::string_view normalized);

// Order-preserving filter.
TokenList remove_stopwords(const TokenList& tokens,
                           const std::unordered_set<std::string>& stoplist);

// strip_entities -> translate_hook -> normalize -> tokenize -> remove_stopwords
TokenList preprocess_post(std::string_view raw, const PreprocessConfig& config);

// Unique words in first-occurrence order, scanning documents in sequence
// order and tokens left to right.
Vocabulary build_vocabulary(const std::vector<TokenList>& docs);

// Built-in list of common English function words.
const std::unordered_set<std::string>& default_stopwords();

// One word per line, '#' comments, UTF-8. Words are lowercased on load.
std::unordered_set<std::string> load_stopwords(const std::string& path);

// TSV "source<TAB>target" per line, whole-string match entries.
std::unordered_map<std::string, std::string> load_translation_table(
    const std::string& path);

}  // namespace opmine
