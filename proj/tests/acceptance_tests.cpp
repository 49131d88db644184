// Acceptance suite: one self-contained check per shipping criterion,
// printed as a single pass/fail line each. Returns the failure count.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "opmine/corpus_io.hpp"
#include "opmine/lexicon.hpp"
#include "opmine/metrics.hpp"
#include "opmine/model_io.hpp"
#include "opmine/random.hpp"
#include "opmine/run.hpp"
#include "opmine/topics.hpp"
#include "test_support.hpp"

#include <json.hpp>

using namespace opmine;

namespace {

// ---------------------------------------------------------------------------
// Exact nonnegative big integer, just enough for rational posterior
// comparison: multiply by small factors, full multiply, compare.
class BigUInt {
 public:
  explicit BigUInt(std::uint64_t value = 0) {
    while (value) {
      limbs_.push_back(static_cast<std::uint32_t>(value));
      value >>= 32;
    }
  }

  BigUInt& operator*=(std::uint32_t m) {
    if (m == 0) {
      limbs_.clear();
      return *this;
    }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
      std::uint64_t prod = static_cast<std::uint64_t>(limb) * m + carry;
      limb = static_cast<std::uint32_t>(prod);
      carry = prod >> 32;
    }
    while (carry) {
      limbs_.push_back(static_cast<std::uint32_t>(carry));
      carry >>= 32;
    }
    return *this;
  }

  BigUInt times(const BigUInt& other) const {
    BigUInt out;
    if (limbs_.empty() || other.limbs_.empty()) return out;
    out.limbs_.assign(limbs_.size() + other.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < other.limbs_.size(); ++j) {
        std::uint64_t acc = static_cast<std::uint64_t>(limbs_[i]) *
                                other.limbs_[j] +
                            out.limbs_[i + j] + carry;
        out.limbs_[i + j] = static_cast<std::uint32_t>(acc);
        carry = acc >> 32;
      }
      std::size_t pos = i + other.limbs_.size();
      while (carry) {
        std::uint64_t acc = out.limbs_[pos] + carry;
        out.limbs_[pos] = static_cast<std::uint32_t>(acc);
        carry = acc >> 32;
        ++pos;
      }
    }
    while (!out.limbs_.empty() && out.limbs_.back() == 0) out.limbs_.pop_back();
    return out;
  }

  // -1, 0, +1
  int compare(const BigUInt& other) const {
    if (limbs_.size() != other.limbs_.size()) {
      return limbs_.size() < other.limbs_.size() ? -1 : 1;
    }
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      if (limbs_[i] != other.limbs_[i]) {
        return limbs_[i] < other.limbs_[i] ? -1 : 1;
      }
    }
    return 0;
  }

 private:
  std::vector<std::uint32_t> limbs_;  // little-endian, trimmed
};

BigUInt pow_small(std::uint32_t base, std::uint32_t exponent) {
  BigUInt out(1);
  for (std::uint32_t i = 0; i < exponent; ++i) out *= base;
  return out;
}

// ---------------------------------------------------------------------------

CountVector cv(const std::vector<std::uint32_t>& dense) {
  CountVector v;
  v.dim = static_cast<std::uint32_t>(dense.size());
  for (std::uint32_t k = 0; k < dense.size(); ++k) {
    if (dense[k]) v.entries.emplace_back(k, dense[k]);
  }
  return v;
}

struct CheckContext {
  bool ok = true;
  std::string detail;

  void expect(bool condition, const std::string& message) {
    if (!condition && ok) {
      ok = false;
      detail = message;
    }
  }
};

// Exact-arithmetic posterior argmax with alpha = 1, ties to the first class.
std::uint32_t nb_oracle(const LabeledDataset& data, const CountVector& query) {
  const std::size_t n_classes = data.class_set.size();
  const std::uint32_t n = data.n_features();
  std::vector<std::uint64_t> docs_per_class(n_classes, 0);
  std::vector<std::uint64_t> tokens_per_class(n_classes, 0);
  std::vector<std::vector<std::uint64_t>> counts(
      n_classes, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < data.size(); ++i) {
    std::uint32_t c = data.labels[i];
    ++docs_per_class[c];
    for (const auto& [k, count] : data.vectors[i].entries) {
      counts[c][k] += count;
      tokens_per_class[c] += count;
    }
  }
  std::uint32_t query_total = 0;
  for (const auto& [k, count] : query.entries) query_total += count;

  // Posterior_c  ~  n_c * prod_k (count_ck + 1)^{x_k}  /  (T_c + N)^{X}
  std::vector<BigUInt> numerator;
  std::vector<BigUInt> denominator;
  for (std::size_t c = 0; c < n_classes; ++c) {
    BigUInt num(docs_per_class[c]);
    for (const auto& [k, count] : query.entries) {
      BigUInt factor = pow_small(static_cast<std::uint32_t>(counts[c][k] + 1),
                                 count);
      num = num.times(factor);
    }
    numerator.push_back(std::move(num));
    denominator.push_back(pow_small(
        static_cast<std::uint32_t>(tokens_per_class[c] + n), query_total));
  }
  std::uint32_t best = 0;
  for (std::uint32_t c = 1; c < n_classes; ++c) {
    // candidate beats best iff num_c/den_c > num_best/den_best
    BigUInt lhs = numerator[c].times(denominator[best]);
    BigUInt rhs = numerator[best].times(denominator[c]);
    if (lhs.compare(rhs) > 0) best = c;
  }
  return best;
}

LabeledDataset random_small_dataset(SplitMix64& rng) {
  LabeledDataset data;
  std::size_t n_classes = 2 + rng.below(2);
  std::uint32_t dim = 1 + static_cast<std::uint32_t>(rng.below(5));
  std::size_t n_docs = n_classes + rng.below(11 - n_classes);
  for (std::size_t c = 0; c < n_classes; ++c) {
    data.class_set.push_back("c" + std::to_string(c));
  }
  for (std::size_t i = 0; i < n_docs; ++i) {
    std::vector<std::uint32_t> dense(dim);
    for (auto& x : dense) x = static_cast<std::uint32_t>(rng.below(4));
    data.vectors.push_back(cv(dense));
    data.labels.push_back(static_cast<std::uint32_t>(
        i < n_classes ? i : rng.below(n_classes)));
  }
  return data;
}

// --------------------------- criterion bodies -----------------------------

bool table3_replication(CheckContext& ctx) {
  PreprocessConfig config;
  config.stopwords = default_stopwords();
  TokenList t1 = preprocess_post(
      "Authorities wait to declare a mandatory quarantine in Colombia!",
      config);
  TokenList t2 = preprocess_post(
      "Control measures: Italy! Colombia trapped, Italy outside Colombia...",
      config);
  ctx.expect(t1 == TokenList{"authorities", "wait", "declare", "mandatory",
                             "quarantine", "colombia"},
             "tweet 1 tokens differ");
  ctx.expect(t2 == TokenList{"control", "measures", "italy", "colombia",
                             "trapped", "italy", "outside", "colombia"},
             "tweet 2 tokens differ");
  Vocabulary vocab = build_vocabulary({t1, t2});
  ctx.expect(vocab.size() == 11, "vocabulary size != 11");
  std::vector<std::uint32_t> v1 = vectorize_doc(t1, vocab).dense();
  std::vector<std::uint32_t> v2 = vectorize_doc(t2, vocab).dense();
  ctx.expect(v1 == std::vector<std::uint32_t>{1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0},
             "vect(T1) differs");
  ctx.expect(v2 == std::vector<std::uint32_t>{0, 0, 0, 0, 0, 2, 1, 1, 2, 1, 1},
             "vect(T2) differs");
  return ctx.ok;
}

bool metric_identity(CheckContext& ctx) {
  SplitMix64 rng(0xfeedface);
  const std::size_t sizes[] = {2, 3, 5};
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t k = sizes[rng.below(3)];
    ConfusionMatrix cm;
    for (std::size_t i = 0; i < k; ++i) cm.classes.push_back("c" + std::to_string(i));
    cm.counts.assign(k * k, 0);
    for (auto& c : cm.counts) c = rng.below(60);
    cm.counts[rng.below(k * k)] += 1;
    EvaluationReport report = aggregate(cm);
    double expected =
        static_cast<double>(cm.trace()) / static_cast<double>(cm.total());
    if (std::abs(report.micro_precision - expected) > 1e-12) {
      ctx.expect(false, "micro precision != trace/total at trial " +
                            std::to_string(trial));
      return false;
    }
  }
  return ctx.ok;
}

bool oracle_equivalence(CheckContext& ctx) {
  SplitMix64 rng(0xdecade);
  // Naive Bayes against the exact-rational posterior oracle.
  int nb_cases = 0;
  for (int trial = 0; trial < 600; ++trial) {
    LabeledDataset data = random_small_dataset(rng);
    NBModel model = train_nb(data, 1.0);
    std::vector<CountVector> queries = data.vectors;
    queries.push_back(cv(std::vector<std::uint32_t>(data.n_features(), 0)));
    for (int q = 0; q < 3; ++q) {
      std::vector<std::uint32_t> dense(data.n_features());
      for (auto& x : dense) x = static_cast<std::uint32_t>(rng.below(4));
      queries.push_back(cv(dense));
    }
    for (const auto& query : queries) {
      if (predict_nb(model, query) != nb_oracle(data, query)) {
        ctx.expect(false,
                   "NB prediction disagrees with the exact oracle at trial " +
                       std::to_string(trial));
        return false;
      }
    }
    ++nb_cases;
  }
  ctx.expect(nb_cases >= 500, "fewer than 500 NB oracle cases");

  // k-NN against a full-sort oracle.
  for (int trial = 0; trial < 200; ++trial) {
    LabeledDataset data;
    std::size_t n_classes = 2 + rng.below(2);
    std::uint32_t dim = 1 + static_cast<std::uint32_t>(rng.below(6));
    std::size_t n_docs = std::max<std::size_t>(5 + rng.below(196), n_classes);
    for (std::size_t c = 0; c < n_classes; ++c) {
      data.class_set.push_back("c" + std::to_string(c));
    }
    for (std::size_t i = 0; i < n_docs; ++i) {
      std::vector<std::uint32_t> dense(dim);
      for (auto& x : dense) x = static_cast<std::uint32_t>(rng.below(5));
      data.vectors.push_back(cv(dense));
      data.labels.push_back(static_cast<std::uint32_t>(
          i < n_classes ? i : rng.below(n_classes)));
    }
    std::uint32_t k = 1 + static_cast<std::uint32_t>(rng.below(
        std::min<std::size_t>(7, n_docs)));
    KnnWeighting weighting =
        trial % 2 ? KnnWeighting::inverse_distance : KnnWeighting::uniform;
    KNNModel model = train_knn(data, k, weighting);

    for (int q = 0; q < 5; ++q) {
      std::vector<std::uint32_t> dense(dim);
      for (auto& x : dense) x = static_cast<std::uint32_t>(rng.below(5));
      CountVector query = cv(dense);

      std::vector<std::pair<std::uint64_t, std::size_t>> all;
      for (std::size_t i = 0; i < data.size(); ++i) {
        all.emplace_back(squared_distance(data.vectors[i], query), i);
      }
      std::stable_sort(
          all.begin(), all.end(),
          [](const auto& a, const auto& b) { return a.first < b.first; });
      std::vector<double> votes(n_classes, 0.0);
      for (std::uint32_t n = 0; n < k; ++n) {
        double w = weighting == KnnWeighting::uniform
                       ? 1.0
                       : 1.0 / (std::sqrt(static_cast<double>(all[n].first)) +
                                kKnnDistanceEpsilon);
        votes[data.labels[all[n].second]] += w;
      }
      std::uint32_t expected = 0;
      for (std::uint32_t c = 1; c < votes.size(); ++c) {
        if (votes[c] > votes[expected]) expected = c;
      }
      if (predict_knn(model, query) != expected) {
        ctx.expect(false,
                   "k-NN prediction disagrees with the full-sort oracle at "
                   "trial " + std::to_string(trial));
        return false;
      }
    }
  }
  return ctx.ok;
}

bool svm_separable(CheckContext& ctx) {
  // 300 documents, 50-word vocabulary, one exclusive keyword per class.
  SplitMix64 rng(0xabcdef);
  LabeledDataset all;
  all.class_set = {"positive", "neutral", "negative"};
  for (int i = 0; i < 300; ++i) {
    std::vector<std::uint32_t> dense(50, 0);
    std::uint32_t label = static_cast<std::uint32_t>(i % 3);
    dense[label] = 1 + static_cast<std::uint32_t>(rng.below(3));
    std::size_t fillers = 4 + rng.below(5);
    for (std::size_t f = 0; f < fillers; ++f) {
      dense[3 + rng.below(47)] += 1;
    }
    all.vectors.push_back(cv(dense));
    all.labels.push_back(label);
  }
  std::vector<std::size_t> order(all.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  shuffle(order, rng);

  LabeledDataset train, test;
  train.class_set = test.class_set = all.class_set;
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto& side = i < 255 ? train : test;  // round(0.85 * 300) = 255
    side.vectors.push_back(all.vectors[order[i]]);
    side.labels.push_back(all.labels[order[i]]);
  }

  RunConfig defaults;
  SVMModel model =
      train_svm(train, defaults.lambda, defaults.epochs, defaults.seed);

  std::size_t train_correct = 0;
  for (std::size_t i = 0; i < train.size(); ++i) {
    if (predict_svm(model, train.vectors[i]) == train.labels[i]) {
      ++train_correct;
    }
  }
  std::size_t test_correct = 0;
  for (std::size_t i = 0; i < test.size(); ++i) {
    if (predict_svm(model, test.vectors[i]) == test.labels[i]) ++test_correct;
  }
  double train_acc =
      static_cast<double>(train_correct) / static_cast<double>(train.size());
  double test_acc =
      static_cast<double>(test_correct) / static_cast<double>(test.size());
  ctx.expect(train_acc == 1.0, "training accuracy " + std::to_string(train_acc) +
                                   " != 1.0");
  ctx.expect(test_acc >= 0.95,
             "test accuracy " + std::to_string(test_acc) + " < 0.95");
  return ctx.ok;
}

struct SyntheticCorpus {
  std::vector<PostRecord> posts;
  std::vector<Sentiment> planted;
};

// 2,968 posts over seven date tags with lexicon-planted sentiment words and
// out-of-lexicon fillers.
SyntheticCorpus make_synthetic_corpus(const Lexicon& lexicon,
                                      std::uint64_t seed) {
  std::vector<std::string> pos_pool, neg_pool, neu_pool;
  {
    std::vector<std::string> keys;
    for (const auto& [word, entry] : lexicon.entries) keys.push_back(word);
    std::sort(keys.begin(), keys.end());
    for (const auto& word : keys) {
      const auto& e = lexicon.entries.at(word);
      if (e.polarity >= 0.5 && pos_pool.size() < 40) pos_pool.push_back(word);
      if (e.polarity <= -0.5 && neg_pool.size() < 40) neg_pool.push_back(word);
      if (e.polarity == 0.0 && neu_pool.size() < 40) neu_pool.push_back(word);
    }
  }

  // Deterministic out-of-lexicon fillers.
  const char* syllables[] = {"ba", "ce", "di", "fo", "gu", "ha", "je",
                             "ki", "lo", "mu", "ne", "po", "ri", "so"};
  std::vector<std::string> fillers;
  for (const char* a : syllables) {
    for (const char* b : syllables) {
      for (const char* c : syllables) {
        std::string word = std::string(a) + b + c;
        if (!lexicon.entries.contains(word) &&
            !default_stopwords().contains(word)) {
          fillers.push_back(std::move(word));
        }
        if (fillers.size() >= 600) break;
      }
      if (fillers.size() >= 600) break;
    }
    if (fillers.size() >= 600) break;
  }

  const struct {
    const char* tag;
    const char* date;
    int count;
  } buckets[] = {
      {"2020-03-20_21", "2020-03-20", 583}, {"2020-04-06_07", "2020-04-06", 350},
      {"2020-04-20_21", "2020-04-20", 496}, {"2020-05-05_06", "2020-05-05", 276},
      {"2020-05-30_31", "2020-05-30", 272}, {"2020-06-14_15", "2020-06-14", 304},
      {"2020-06-19_20", "2020-06-19", 687},
  };

  SyntheticCorpus corpus;
  SplitMix64 rng(seed);
  int serial = 0;
  for (const auto& bucket : buckets) {
    for (int i = 0; i < bucket.count; ++i) {
      Sentiment planted = static_cast<Sentiment>(rng.below(3));
      const auto& pool = planted == Sentiment::positive ? pos_pool
                         : planted == Sentiment::neutral ? neu_pool
                                                         : neg_pool;
      std::vector<std::string> words;
      std::size_t n_planted = 1 + rng.below(3);
      for (std::size_t p = 0; p < n_planted; ++p) {
        words.push_back(pool[rng.below(pool.size())]);
      }
      std::size_t n_fillers = 3 + rng.below(6);
      for (std::size_t f = 0; f < n_fillers; ++f) {
        words.push_back(fillers[rng.below(fillers.size())]);
      }
      shuffle(words, rng);
      std::string text;
      for (const auto& w : words) {
        if (!text.empty()) text.push_back(' ');
        text += w;
      }
      switch (rng.below(4)) {  // decoration the pipeline must strip
        case 0: text += " https://t.co/x1Y2z3"; break;
        case 1: text += " #covid19"; break;
        case 2: text = "@someone " + text; break;
        default: break;
      }
      PostRecord post;
      post.id = "p" + std::to_string(serial++);
      post.timestamp = parse_timestamp_utc(bucket.date);
      post.text = text;
      post.dataset_tag = bucket.tag;
      corpus.posts.push_back(std::move(post));
      corpus.planted.push_back(planted);
    }
  }
  return corpus;
}

bool end_to_end_synthetic(CheckContext& ctx) {
  const std::string lexicon_path =
      std::string(OPMINE_DATA_DIR) + "/demo_lexicon.tsv";
  Lexicon lexicon = load_lexicon(lexicon_path);
  SyntheticCorpus corpus = make_synthetic_corpus(lexicon, 0x2968);
  ctx.expect(corpus.posts.size() == 2968, "corpus size != 2968");

  testsup::TempDir dir("acceptance_e2e");
  save_posts(dir.file("posts.jsonl"), corpus.posts, PostFormat::jsonl);

  RunConfig config;
  config.posts_path = dir.file("posts.jsonl");
  config.lexicon_path = lexicon_path;
  config.out_dir = dir.file("out_score");
  run_score(config);

  // Planted-label recovery from the written CSV.
  std::istringstream csv(
      testsup::read_file(dir.file("out_score") + "/scores/scores.csv"));
  std::string line;
  std::getline(csv, line);  // header
  std::size_t scored = 0, recovered = 0, row = 0;
  while (std::getline(csv, line)) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 5) {
      ctx.expect(false, "unexpected scores.csv row: " + line);
      return false;
    }
    if (std::stoul(fields[4]) >= 1) {
      ++scored;
      if (fields[3] == to_string(corpus.planted[row])) ++recovered;
    }
    ++row;
  }
  ctx.expect(row == corpus.posts.size(), "scores.csv row count mismatch");
  ctx.expect(scored > 0, "no scored posts");
  double recovery =
      static_cast<double>(recovered) / static_cast<double>(scored);
  ctx.expect(recovery >= 0.99, "planted-label recovery " +
                                   std::to_string(recovery) + " < 0.99");

  // Distribution covers the seven buckets.
  nlohmann::json dist = nlohmann::json::parse(testsup::read_file(
      dir.file("out_score") + "/scores/distribution.json"));
  ctx.expect(dist["by_tag"].size() == 7, "expected 7 distribution rows");
  ctx.expect(dist["total"]["total"] == 2968, "distribution total != 2968");

  config.out_dir = dir.file("out_eval");
  run_evaluate(config);
  nlohmann::json report = nlohmann::json::parse(
      testsup::read_file(dir.file("out_eval") + "/reports/report.json"));
  double nb_acc = report["classifiers"]["naive_bayes"]["accuracy"];
  double svm_acc = report["classifiers"]["linear_svm"]["accuracy"];
  ctx.expect(svm_acc >= nb_acc,
             "SVM accuracy " + std::to_string(svm_acc) + " < NB accuracy " +
                 std::to_string(nb_acc));
  ctx.expect(nb_acc >= 1.0 / 3.0 + 0.10,
             "NB accuracy " + std::to_string(nb_acc) + " below baseline");
  return ctx.ok;
}

bool sentiment_point_check(CheckContext& ctx) {
  Lexicon lexicon;
  lexicon.entries["miserable"] = {-1.0, 1.0};
  TokenList doc{"miserable", "playing",  "health",  "colombia",
                "squandering", "billions", "pesos",  "armored",
                "cars",      "advertising", "wash",  "image",
                "esmad",     "midst",    "pandemic"};
  SentimentScore score = score_document(doc, lexicon);
  ctx.expect(score.polarity == -1.0, "polarity != -1");
  ctx.expect(score.subjectivity == 1.0, "subjectivity != 1");
  ctx.expect(score.label == Sentiment::negative, "label != negative");
  return ctx.ok;
}

std::string random_unicode_string(SplitMix64& rng) {
  static const char* fragments[] = {
      "a", "b", "z", "Q", "W", "9", "0", "!", "?", ".", ",", " ", " ", "\t",
      "\n", "#", "@", "é", "ñ", "Á", "ü", "ß", "€", "😀", "中", "…", "т",
      "https://t.co/Ab1", "http://x.y/z?a=1", "t.co/qq", "#topic", "@user",
      "sweeeet", "aaaa", "ooooo", "the", "What", "of", "to", "-", "_", "/",
      "\xff\xfe", "\x80", "covid-19", "loooove!!!",
  };
  std::string out;
  std::size_t n = rng.below(30);
  for (std::size_t i = 0; i < n; ++i) {
    out += fragments[rng.below(std::size(fragments))];
  }
  return out;
}

bool preprocessing_fuzz(CheckContext& ctx) {
  PreprocessConfig config;
  config.stopwords = default_stopwords();
  SplitMix64 rng(0xf022);
  for (int trial = 0; trial < 10000; ++trial) {
    std::string text = random_unicode_string(rng);
    std::string once = normalize(text);
    if (normalize(once) != once) {
      ctx.expect(false, "normalize not idempotent at trial " +
                            std::to_string(trial));
      return false;
    }
    TokenList tokens = preprocess_post(text, config);
    for (const auto& token : tokens) {
      bool alphabetic = !token.empty();
      for (char c : token) alphabetic = alphabetic && c >= 'a' && c <= 'z';
      bool run_free = true;
      for (std::size_t i = 2; i < token.size(); ++i) {
        run_free = run_free && !(token[i] == token[i - 1] &&
                                 token[i] == token[i - 2]);
      }
      if (!alphabetic || !run_free || config.stopwords.contains(token)) {
        ctx.expect(false, "token invariant violated by '" + token +
                              "' at trial " + std::to_string(trial));
        return false;
      }
    }
  }
  return ctx.ok;
}

bool evaluate_determinism(CheckContext& ctx) {
  const std::string lexicon_path =
      std::string(OPMINE_DATA_DIR) + "/demo_lexicon.tsv";
  Lexicon lexicon = load_lexicon(lexicon_path);
  SyntheticCorpus corpus = make_synthetic_corpus(lexicon, 0xd5eed);
  corpus.posts.resize(400);  // a slice keeps the double run quick

  testsup::TempDir dir("acceptance_det");
  save_posts(dir.file("posts.jsonl"), corpus.posts, PostFormat::jsonl);

  RunConfig config;
  config.posts_path = dir.file("posts.jsonl");
  config.lexicon_path = lexicon_path;
  config.seed = 20200320;
  config.out_dir = dir.file("first");
  run_evaluate(config);
  config.out_dir = dir.file("second");
  run_evaluate(config);

  std::string first =
      testsup::read_file(dir.file("first") + "/reports/report.json");
  std::string second =
      testsup::read_file(dir.file("second") + "/reports/report.json");
  ctx.expect(!first.empty(), "empty report");
  ctx.expect(first == second, "report JSON differs between identical runs");
  return ctx.ok;
}

struct Criterion {
  int number;
  const char* title;
  std::function<bool(CheckContext&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Table 3 replication, bit-exact, < 1 s", table3_replication},
      {2, "micro precision = trace/total on 1000 random matrices (1e-12)",
       metric_identity},
      {3, "NB and k-NN match exact brute-force oracles", oracle_equivalence},
      {4, "OVR SVM: train acc 1.00 / test acc >= 0.95 on separable corpus, < 5 s",
       svm_separable},
      {5, "end-to-end synthetic corpus: score recovery + evaluate ordering, < 30 s",
       end_to_end_synthetic},
      {6, "single scored word (-1,1) yields polarity -1, subjectivity 1, negative",
       sentiment_point_check},
      {7, "preprocessing invariants on 10,000 fuzz strings + idempotence",
       preprocessing_fuzz},
      {8, "evaluate is byte-identical for identical config and seed",
       evaluate_determinism},
  };

  const double limits[] = {1.0, 0.0, 0.0, 5.0, 30.0, 0.0, 0.0, 0.0};

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& criterion = criteria[i];
    CheckContext ctx;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criterion.run(ctx);
    } catch (const std::exception& e) {
      ctx.ok = false;
      ctx.detail = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && limits[i] > 0.0 && elapsed > limits[i]) {
      ok = false;
      ctx.detail = "runtime " + std::to_string(elapsed) + " s over budget";
    }
    std::printf("criterion %d  [%s]  %s  (%.2f s)%s%s\n", criterion.number,
                ok ? "PASS" : "FAIL", criterion.title, elapsed,
                ok ? "" : " -- ", ok ? "" : ctx.detail.c_str());
    if (!ok) ++failures;
  }
  return failures;
}
