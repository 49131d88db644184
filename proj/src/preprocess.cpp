#include "opmine/preprocess.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "opmine/hash.hpp"

namespace opmine {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool is_word_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

// Consume the \S+ tail of a URL starting at pos.
std::size_t skip_non_space(std::string_view s, std::size_t pos) {
  while (pos < s.size() && !is_space(s[pos])) ++pos;
  return pos;
}

bool starts_with(std::string_view s, std::size_t pos, std::string_view prefix) {
  return s.compare(pos, prefix.size(), prefix) == 0;
}

// Decodes one UTF-8 codepoint at `pos`; advances `pos`. Invalid sequences
// yield U+FFFD and advance one byte.
std::uint32_t decode_utf8(std::string_view s, std::size_t& pos) {
  unsigned char b0 = static_cast<unsigned char>(s[pos]);
  if (b0 < 0x80) {
    ++pos;
    return b0;
  }
  int len = 0;
  std::uint32_t cp = 0;
  if ((b0 & 0xe0) == 0xc0) {
    len = 2;
    cp = b0 & 0x1f;
  } else if ((b0 & 0xf0) == 0xe0) {
    len = 3;
    cp = b0 & 0x0f;
  } else if ((b0 & 0xf8) == 0xf0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++pos;
    return 0xfffd;
  }
  if (pos + static_cast<std::size_t>(len) > s.size()) {
    ++pos;
    return 0xfffd;
  }
  for (int i = 1; i < len; ++i) {
    unsigned char b = static_cast<unsigned char>(s[pos + static_cast<std::size_t>(i)]);
    if ((b & 0xc0) != 0x80) {
      ++pos;
      return 0xfffd;
    }
    cp = (cp << 6) | (b & 0x3f);
  }
  pos += static_cast<std::size_t>(len);
  return cp;
}

// Base Latin letter for precomposed accented letters with a canonical
// decomposition (Latin-1 Supplement and Latin Extended-A). 0 = none.
char base_letter(std::uint32_t cp) {
  // Latin-1 Supplement.
  if (cp >= 0xc0 && cp <= 0xff) {
    switch (cp) {
      case 0xc0: case 0xc1: case 0xc2: case 0xc3: case 0xc4: case 0xc5:
      case 0xe0: case 0xe1: case 0xe2: case 0xe3: case 0xe4: case 0xe5:
        return 'a';
      case 0xc7: case 0xe7: return 'c';
      case 0xc8: case 0xc9: case 0xca: case 0xcb:
      case 0xe8: case 0xe9: case 0xea: case 0xeb:
        return 'e';
      case 0xcc: case 0xcd: case 0xce: case 0xcf:
      case 0xec: case 0xed: case 0xee: case 0xef:
        return 'i';
      case 0xd1: case 0xf1: return 'n';
      case 0xd2: case 0xd3: case 0xd4: case 0xd5: case 0xd6:
      case 0xf2: case 0xf3: case 0xf4: case 0xf5: case 0xf6:
        return 'o';
      case 0xd9: case 0xda: case 0xdb: case 0xdc:
      case 0xf9: case 0xfa: case 0xfb: case 0xfc:
        return 'u';
      case 0xdd: case 0xfd: case 0xff: return 'y';
      default: return 0;  // AE, eth, stroked O, thorn, sharp s, math signs
    }
  }
  // Latin Extended-A: contiguous blocks per base letter, skipping the
  // codepoints without a canonical decomposition (stroked/ligature forms).
  if (cp >= 0x100 && cp <= 0x17f) {
    struct Range {
      std::uint32_t lo, hi;
      char base;
    };
    static constexpr Range ranges[] = {
        {0x100, 0x105, 'a'}, {0x106, 0x10d, 'c'}, {0x10e, 0x10f, 'd'},
        {0x112, 0x11b, 'e'}, {0x11c, 0x123, 'g'}, {0x124, 0x125, 'h'},
        {0x128, 0x130, 'i'}, {0x134, 0x135, 'j'}, {0x136, 0x137, 'k'},
        {0x139, 0x13e, 'l'}, {0x143, 0x148, 'n'}, {0x14c, 0x151, 'o'},
        {0x154, 0x159, 'r'}, {0x15a, 0x161, 's'}, {0x162, 0x165, 't'},
        {0x168, 0x171, 'u'}, {0x174, 0x175, 'w'}, {0x176, 0x178, 'y'},
        {0x179, 0x17e, 'z'},
    };
    for (const auto& r : ranges) {
      if (cp >= r.lo && cp <= r.hi) return r.base;
    }
  }
  return 0;
}

bool is_combining_mark(std::uint32_t cp) { return cp >= 0x300 && cp <= 0x36f; }

std::string trim_lower(std::string_view line) {
  std::size_t b = 0, e = line.size();
  while (b < e && is_space(line[b])) ++b;
  while (e > b && is_space(line[e - 1])) --e;
  std::string out(line.substr(b, e - b));
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

}  // namespace

std::string Vocabulary::checksum_hex() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& w : words) {
    h = fnv1a64(w, h);
    h = fnv1a64("\n", h);
  }
  return to_hex64(h);
}

std::string strip_entities(std::string_view text) {
  std::string kept;
  kept.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (starts_with(text, i, "http://") || starts_with(text, i, "https://")) {
      i = skip_non_space(text, i);
      continue;
    }
    if (starts_with(text, i, "t.co/") &&
        (i == 0 || !is_word_char(text[i - 1]))) {
      i = skip_non_space(text, i);
      continue;
    }
    if ((c == '#' || c == '@') && i + 1 < text.size() &&
        is_word_char(text[i + 1])) {
      ++i;
      while (i < text.size() && is_word_char(text[i])) ++i;
      continue;
    }
    kept.push_back(c);
    ++i;
  }

  // Collapse whitespace runs and trim the ends.
  std::string out;
  out.reserve(kept.size());
  bool pending_space = false;
  for (char c : kept) {
    if (is_space(c)) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out.push_back(' ');
      pending_space = false;
      out.push_back(c);
    }
  }
  return out;
}

std::string translate_hook(
    const std::string& text,
    const std::unordered_map<std::string, std::string>& table) {
  auto it = table.find(text);
  return it == table.end() ? text : it->second;
}

std::string normalize(std::string_view text) {
  // Pass 1: lowercase ASCII letters, transliterate accented Latin letters,
  // drop combining marks, turn everything else into a space.
  std::string flat;
  flat.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    std::uint32_t cp = decode_utf8(text, i);
    if (cp < 0x80) {
      char c = static_cast<char>(cp);
      if (c >= 'a' && c <= 'z') {
        flat.push_back(c);
      } else if (c >= 'A' && c <= 'Z') {
        flat.push_back(static_cast<char>(c - 'A' + 'a'));
      } else {
        flat.push_back(' ');
      }
    } else if (char base = base_letter(cp); base != 0) {
      flat.push_back(base);
    } else if (!is_combining_mark(cp)) {
      flat.push_back(' ');
    }
  }

  // Pass 2: collapse 3+ runs to 2 and squeeze whitespace.
  std::string out;
  out.reserve(flat.size());
  bool pending_space = false;
  std::size_t run = 0;
  for (char c : flat) {
    if (c == ' ') {
      pending_space = !out.empty();
      run = 0;
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
      run = 0;
    }
    if (!out.empty() && out.back() == c) {
      if (run >= 2) continue;
      ++run;
    } else {
      run = 1;
    }
    out.push_back(c);
  }
  return out;
}

TokenList tokenize(std::string_view normalized) {
  TokenList tokens;
  std::size_t i = 0;
  while (i < normalized.size()) {
    while (i < normalized.size() && is_space(normalized[i])) ++i;
    std::size_t start = i;
    while (i < normalized.size() && !is_space(normalized[i])) ++i;
    if (i > start) tokens.emplace_back(normalized.substr(start, i - start));
  }
  return tokens;
}

TokenList remove_stopwords(const TokenList& tokens,
                           const std::unordered_set<std::string>& stoplist) {
  TokenList kept;
  kept.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (!stoplist.contains(t)) kept.push_back(t);
  }
  return kept;
}

TokenList preprocess_post(std::string_view raw, const PreprocessConfig& config) {
  std::string stripped = strip_entities(raw);
  std::string translated = translate_hook(stripped, config.translation);
  std::string normalized = normalize(translated);
  return remove_stopwords(tokenize(normalized), config.stopwords);
}

Vocabulary build_vocabulary(const std::vector<TokenList>& docs) {
  Vocabulary vocab;
  for (const auto& doc : docs) {
    for (const auto& token : doc) {
      auto [it, inserted] = vocab.index.try_emplace(
          token, static_cast<std::uint32_t>(vocab.words.size()));
      if (inserted) vocab.words.push_back(token);
    }
  }
  return vocab;
}

std::unordered_set<std::string> load_stopwords(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open stopword file: " + path);
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::string word = trim_lower(line);
    if (!word.empty()) words.insert(std::move(word));
  }
  return words;
}

std::unordered_map<std::string, std::string> load_translation_table(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open translation table: " + path);
  std::unordered_map<std::string, std::string> table;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw std::runtime_error("malformed translation table line " +
                               std::to_string(line_no) + ": missing tab");
    }
    table[line.substr(0, tab)] = line.substr(tab + 1);
  }
  return table;
}

}  // namespace opmine
