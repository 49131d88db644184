#include "opmine/run.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "opmine/hash.hpp"
#include "opmine/lexicon.hpp"
#include "opmine/model_io.hpp"
#include "opmine/random.hpp"
#include "opmine/topics.hpp"
#include "opmine/version.hpp"

#include <json.hpp>

namespace fs = std::filesystem;

namespace opmine {

namespace {

std::string render_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t consumed = 0;
  double parsed = 0.0;
  try {
    parsed = std::stod(value, &consumed);
  } catch (const std::exception&) {
    consumed = 0;
  }
  if (consumed != value.size() || value.empty()) {
    throw std::runtime_error("config: cannot parse number for '" + key +
                             "': '" + value + "'");
  }
  return parsed;
}

std::uint64_t parse_uint(const std::string& key, const std::string& value) {
  if (value.empty() ||
      value.find_first_not_of("0123456789") != std::string::npos) {
    throw std::runtime_error("config: cannot parse unsigned integer for '" +
                             key + "': '" + value + "'");
  }
  return std::stoull(value);
}

std::string normalize_key(std::string key) {
  for (char& c : key) {
    if (c == '-') c = '_';
  }
  return key;
}

struct TagGroup {
  std::string tag;
  std::vector<std::size_t> post_indices;
};

// Groups posts by dataset tag in first-appearance order.
std::vector<TagGroup> group_by_tag(const std::vector<PostRecord>& posts) {
  std::vector<TagGroup> groups;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < posts.size(); ++i) {
    auto [it, inserted] = index.try_emplace(posts[i].dataset_tag, groups.size());
    if (inserted) groups.push_back({posts[i].dataset_tag, {}});
    groups[it->second].post_indices.push_back(i);
  }
  return groups;
}

std::string sanitize_filename(const std::string& tag,
                              std::map<std::string, int>& used) {
  std::string name;
  for (char c : tag) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '.' || c == '_' || c == '-';
    name.push_back(ok ? c : '_');
  }
  if (name.empty()) name = "untagged";
  int& count = used[name];
  ++count;
  if (count > 1) name += "_" + std::to_string(count);
  return name;
}

PreprocessConfig make_preprocess_config(const RunConfig& config) {
  PreprocessConfig pp;
  pp.stopwords = config.stopwords_path ? load_stopwords(*config.stopwords_path)
                                       : default_stopwords();
  if (config.translate_table_path) {
    pp.translation = load_translation_table(*config.translate_table_path);
  }
  return pp;
}

Lexicon require_lexicon(const RunConfig& config, const char* command) {
  if (!config.lexicon_path) {
    throw std::runtime_error(std::string(command) +
                             " requires a lexicon (--lexicon)");
  }
  return load_lexicon(*config.lexicon_path);
}

std::vector<PostRecord> load_input_posts(const RunConfig& config) {
  if (config.posts_path.empty()) {
    throw std::runtime_error("no posts file configured (--posts)");
  }
  return load_posts(config.posts_path, config.format);
}

void write_text_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open for writing: " + path.string());
  }
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void write_json_file(const fs::path& path, const nlohmann::json& doc) {
  write_text_file(path, doc.dump(2) + "\n");
}

fs::path ensure_out_dir(const RunConfig& config, const char* subdir = nullptr) {
  if (config.out_dir.empty()) {
    throw std::runtime_error("no output directory configured (--out)");
  }
  fs::path dir = config.out_dir;
  if (subdir) dir /= subdir;
  fs::create_directories(dir);
  return dir;
}

void write_manifest(const RunConfig& config, const char* command,
                    const std::map<std::string, std::size_t>& vocab_sizes) {
  nlohmann::json manifest = {
      {"command", command},
      {"config_hash", config.config_hash()},
      {"library_version", kVersion},
      {"vocabulary_sizes", vocab_sizes},
  };
  write_json_file(fs::path(config.out_dir) / "run_manifest.json", manifest);
}

// Per-tag vocabulary sizes, the N the run report records for each bucket.
std::map<std::string, std::size_t> per_tag_vocab_sizes(
    const std::vector<TagGroup>& groups, const std::vector<TokenList>& tokens) {
  std::map<std::string, std::size_t> sizes;
  for (const auto& group : groups) {
    std::vector<TokenList> docs;
    docs.reserve(group.post_indices.size());
    for (std::size_t i : group.post_indices) docs.push_back(tokens[i]);
    sizes[group.tag] = build_vocabulary(docs).size();
  }
  return sizes;
}

nlohmann::json counts_to_json(const std::string& tag, const LabelCounts& c,
                              bool with_tag) {
  nlohmann::json row = {{"positive", c.positive},
                        {"neutral", c.neutral},
                        {"negative", c.negative},
                        {"total", c.total()}};
  if (with_tag) row["tag"] = tag;
  return row;
}

nlohmann::json report_to_json(const EvaluationReport& report,
                              const ConfusionMatrix& cm) {
  nlohmann::json per_class = nlohmann::json::array();
  for (std::size_t i = 0; i < report.per_class.size(); ++i) {
    const auto& s = report.per_class[i];
    per_class.push_back({{"class", report.classes[i]},
                         {"support", report.support[i]},
                         {"tp", s.tp},
                         {"fp", s.fp},
                         {"fn", s.fn},
                         {"tn", s.tn},
                         {"accuracy", s.accuracy},
                         {"precision", s.precision},
                         {"accuracy_undefined", s.accuracy_undefined},
                         {"precision_undefined", s.precision_undefined}});
  }
  nlohmann::json matrix = nlohmann::json::array();
  for (std::size_t i = 0; i < cm.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < cm.size(); ++j) row.push_back(cm.at(i, j));
    matrix.push_back(row);
  }
  return {{"accuracy", report.overall_accuracy},
          {"precision_micro", report.micro_precision},
          {"precision_macro", report.macro_precision},
          {"accuracy_micro", report.micro_accuracy},
          {"accuracy_macro", report.macro_accuracy},
          {"per_class", per_class},
          {"confusion_matrix", matrix}};
}

}  // namespace

void RunConfig::validate() const {
  if (!(split_ratio > 0.0 && split_ratio < 1.0)) {
    throw std::runtime_error("config: split-ratio must be in (0,1)");
  }
  if (k < 1) throw std::runtime_error("config: k must be >= 1");
  if (!(alpha > 0.0)) throw std::runtime_error("config: alpha must be > 0");
  if (!(lambda > 0.0)) throw std::runtime_error("config: lambda must be > 0");
  if (epochs < 1) throw std::runtime_error("config: epochs must be >= 1");
  if (top_k < 1) throw std::runtime_error("config: top-k must be >= 1");
}

std::string RunConfig::config_hash() const {
  std::ostringstream canon;
  canon << "alpha=" << render_double(alpha) << '\n'
        << "epochs=" << epochs << '\n'
        << "format=" << (format == PostFormat::jsonl ? "jsonl" : "csv") << '\n'
        << "k=" << k << '\n'
        << "knn_weighting=" << to_string(knn_weighting) << '\n'
        << "label_source="
        << (label_source == LabelSource::lexicon ? "lexicon" : "gold") << '\n'
        << "lambda=" << render_double(lambda) << '\n'
        << "lexicon=" << lexicon_path.value_or("") << '\n'
        << "out=" << out_dir << '\n'
        << "posts=" << posts_path << '\n'
        << "seed=" << seed << '\n'
        << "split_ratio=" << render_double(split_ratio) << '\n'
        << "stopwords=" << stopwords_path.value_or("") << '\n'
        << "tn_convention=" << to_string(tn_convention) << '\n'
        << "top_k=" << top_k << '\n'
        << "translate_table=" << translate_table_path.value_or("") << '\n';
  return to_hex64(fnv1a64(canon.str()));
}

void apply_config_entry(RunConfig& config, const std::string& raw_key,
                        const std::string& value) {
  const std::string key = normalize_key(raw_key);
  if (key == "posts") {
    config.posts_path = value;
  } else if (key == "format") {
    if (value == "jsonl") {
      config.format = PostFormat::jsonl;
    } else if (value == "csv") {
      config.format = PostFormat::csv;
    } else {
      throw std::runtime_error("config: format must be jsonl or csv, got '" +
                               value + "'");
    }
  } else if (key == "stopwords") {
    config.stopwords_path = value;
  } else if (key == "lexicon") {
    config.lexicon_path = value;
  } else if (key == "translate_table") {
    config.translate_table_path = value;
  } else if (key == "split_ratio") {
    config.split_ratio = parse_double(key, value);
  } else if (key == "seed") {
    config.seed = parse_uint(key, value);
  } else if (key == "alpha") {
    config.alpha = parse_double(key, value);
  } else if (key == "lambda") {
    config.lambda = parse_double(key, value);
  } else if (key == "epochs") {
    config.epochs = static_cast<std::uint32_t>(parse_uint(key, value));
  } else if (key == "k") {
    config.k = static_cast<std::uint32_t>(parse_uint(key, value));
  } else if (key == "knn_weighting") {
    if (value == "uniform") {
      config.knn_weighting = KnnWeighting::uniform;
    } else if (value == "inverse") {
      config.knn_weighting = KnnWeighting::inverse_distance;
    } else {
      throw std::runtime_error(
          "config: knn-weighting must be uniform or inverse, got '" + value +
          "'");
    }
  } else if (key == "tn_convention") {
    if (value == "paper") {
      config.tn_convention = TnConvention::paper;
    } else if (value == "standard") {
      config.tn_convention = TnConvention::standard;
    } else {
      throw std::runtime_error(
          "config: tn-convention must be paper or standard, got '" + value +
          "'");
    }
  } else if (key == "label_source") {
    if (value == "lexicon") {
      config.label_source = LabelSource::lexicon;
    } else if (value == "gold") {
      config.label_source = LabelSource::gold;
    } else {
      throw std::runtime_error(
          "config: label-source must be lexicon or gold, got '" + value + "'");
    }
  } else if (key == "top_k") {
    config.top_k = parse_uint(key, value);
  } else if (key == "out") {
    config.out_dir = value;
  } else {
    throw std::runtime_error("config: unknown key '" + raw_key + "'");
  }
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  RunConfig config;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("config file line " + std::to_string(line_no) +
                               ": expected key = value");
    }
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r");
      auto e = s.find_last_not_of(" \t\r");
      if (b == std::string::npos) return std::string();
      return s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    // Optional quotes around string values.
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    try {
      apply_config_entry(config, key, value);
    } catch (const std::exception& e) {
      throw std::runtime_error("config file line " + std::to_string(line_no) +
                               ": " + e.what());
    }
  }
  return config;
}

void run_score(const RunConfig& config) {
  config.validate();
  Lexicon lexicon = require_lexicon(config, "score");
  std::vector<PostRecord> posts = load_input_posts(config);
  PreprocessConfig pp = make_preprocess_config(config);

  std::vector<TokenList> tokens;
  std::vector<std::string> ids;
  std::vector<SentimentScore> scores;
  tokens.reserve(posts.size());
  for (const auto& post : posts) {
    tokens.push_back(preprocess_post(post.text, pp));
    ids.push_back(post.id);
    scores.push_back(score_document(tokens.back(), lexicon));
  }

  fs::path scores_dir = ensure_out_dir(config, "scores");
  std::ostringstream csv;
  write_scores_csv(ids, scores, csv);
  write_text_file(scores_dir / "scores.csv", csv.str());

  auto groups = group_by_tag(posts);
  nlohmann::json by_tag = nlohmann::json::array();
  LabelCounts total;
  for (const auto& group : groups) {
    std::vector<SentimentScore> bucket;
    bucket.reserve(group.post_indices.size());
    for (std::size_t i : group.post_indices) bucket.push_back(scores[i]);
    LabelCounts counts = label_distribution(bucket);
    total.positive += counts.positive;
    total.neutral += counts.neutral;
    total.negative += counts.negative;
    by_tag.push_back(counts_to_json(group.tag, counts, true));
  }
  nlohmann::json distribution = {
      {"by_tag", by_tag}, {"total", counts_to_json("", total, false)}};
  write_json_file(scores_dir / "distribution.json", distribution);

  write_manifest(config, "score", per_tag_vocab_sizes(groups, tokens));
}

void run_topics(const RunConfig& config) {
  config.validate();
  std::vector<PostRecord> posts = load_input_posts(config);
  PreprocessConfig pp = make_preprocess_config(config);

  std::vector<TokenList> tokens;
  tokens.reserve(posts.size());
  for (const auto& post : posts) tokens.push_back(preprocess_post(post.text, pp));

  fs::path topics_dir = ensure_out_dir(config, "topics");
  auto groups = group_by_tag(posts);
  std::map<std::string, std::size_t> vocab_sizes;
  std::map<std::string, int> used_names;
  for (const auto& group : groups) {
    std::vector<TokenList> docs;
    docs.reserve(group.post_indices.size());
    for (std::size_t i : group.post_indices) docs.push_back(tokens[i]);
    Vocabulary vocab = build_vocabulary(docs);
    vocab_sizes[group.tag] = vocab.size();
    TermDocumentMatrix tdm = build_tdm(docs, vocab);
    TermFrequencyTable table = top_k(term_frequencies(tdm), config.top_k);
    std::ostringstream json_out;
    write_wordcloud_json(table, json_out);
    write_text_file(
        topics_dir / (sanitize_filename(group.tag, used_names) + ".json"),
        json_out.str());
  }
  write_manifest(config, "topics", vocab_sizes);
}

void run_preprocess(const RunConfig& config) {
  config.validate();
  std::vector<PostRecord> posts = load_input_posts(config);
  PreprocessConfig pp = make_preprocess_config(config);

  std::vector<TokenList> tokens;
  tokens.reserve(posts.size());
  for (const auto& post : posts) tokens.push_back(preprocess_post(post.text, pp));

  fs::path dir = ensure_out_dir(config, "preprocessed");
  std::ostringstream out;
  for (std::size_t i = 0; i < posts.size(); ++i) {
    nlohmann::json line = {{"id", posts[i].id},
                           {"dataset_tag", posts[i].dataset_tag},
                           {"tokens", tokens[i]}};
    out << line.dump() << '\n';
  }
  write_text_file(dir / "tokens.jsonl", out.str());

  write_manifest(config, "preprocess",
                 per_tag_vocab_sizes(group_by_tag(posts), tokens));
}

void run_vectorize(const RunConfig& config) {
  config.validate();
  std::vector<PostRecord> posts = load_input_posts(config);
  PreprocessConfig pp = make_preprocess_config(config);

  std::vector<TokenList> tokens;
  tokens.reserve(posts.size());
  for (const auto& post : posts) tokens.push_back(preprocess_post(post.text, pp));

  fs::path dir = ensure_out_dir(config, "tdm");
  auto groups = group_by_tag(posts);
  std::map<std::string, std::size_t> vocab_sizes;
  std::map<std::string, int> used_names;
  for (const auto& group : groups) {
    std::vector<TokenList> docs;
    std::vector<std::string> doc_ids;
    for (std::size_t i : group.post_indices) {
      docs.push_back(tokens[i]);
      doc_ids.push_back(posts[i].id);
    }
    Vocabulary vocab = build_vocabulary(docs);
    vocab_sizes[group.tag] = vocab.size();
    TermDocumentMatrix tdm = build_tdm(docs, vocab);
    std::string name = sanitize_filename(group.tag, used_names);
    std::ostringstream csv;
    write_tdm_csv(tdm, doc_ids, csv);
    write_text_file(dir / (name + ".csv"), csv.str());
    std::ostringstream sparse;
    write_tdm_sparse_json(tdm, sparse);
    write_text_file(dir / (name + ".json"), sparse.str());
  }
  write_manifest(config, "vectorize", vocab_sizes);
}

void run_evaluate(const RunConfig& config) {
  config.validate();
  std::vector<PostRecord> posts = load_input_posts(config);
  PreprocessConfig pp = make_preprocess_config(config);

  // Resolve one training label per record.
  std::vector<PostRecord> usable;
  std::vector<Sentiment> labels;
  if (config.label_source == LabelSource::gold) {
    for (const auto& post : posts) {
      if (!post.gold_label) continue;
      usable.push_back(post);
      labels.push_back(*post.gold_label);
    }
    if (usable.empty()) {
      throw std::runtime_error(
          "label source 'gold' selected but no post carries a gold label");
    }
  } else {
    Lexicon lexicon = require_lexicon(config, "evaluate with lexicon labels");
    usable = posts;
    labels.reserve(posts.size());
    for (const auto& post : posts) {
      labels.push_back(score_document(preprocess_post(post.text, pp), lexicon).label);
    }
  }

  // split_train_test works on PostRecords; carry labels via id lookup
  // (ids are unique by the loader's contract).
  std::map<std::string, Sentiment> label_by_id;
  for (std::size_t i = 0; i < usable.size(); ++i) {
    label_by_id[usable[i].id] = labels[i];
  }
  DatasetSplit split =
      split_train_test(usable, config.split_ratio, fork_seed(config.seed, "split"));

  auto tokens_of = [&](const std::vector<PostRecord>& records) {
    std::vector<TokenList> out;
    out.reserve(records.size());
    for (const auto& r : records) out.push_back(preprocess_post(r.text, pp));
    return out;
  };
  std::vector<TokenList> train_tokens = tokens_of(split.train);
  std::vector<TokenList> test_tokens = tokens_of(split.test);

  // Test documents are vectorized against the training vocabulary; unseen
  // words drop out.
  Vocabulary vocab = build_vocabulary(train_tokens);

  auto labels_of = [&](const std::vector<PostRecord>& records) {
    std::vector<Sentiment> out;
    out.reserve(records.size());
    for (const auto& r : records) out.push_back(label_by_id.at(r.id));
    return out;
  };
  std::vector<Sentiment> train_labels = labels_of(split.train);
  std::vector<Sentiment> test_labels = labels_of(split.test);

  auto classes_present = [](const std::vector<Sentiment>& ls) {
    std::vector<std::string> out;
    for (Sentiment canonical : {Sentiment::positive, Sentiment::neutral,
                                Sentiment::negative}) {
      if (std::find(ls.begin(), ls.end(), canonical) != ls.end()) {
        out.emplace_back(to_string(canonical));
      }
    }
    return out;
  };
  std::vector<std::string> train_classes = classes_present(train_labels);

  LabeledDataset train_set;
  train_set.class_set = train_classes;
  std::map<std::string, std::uint32_t> class_index;
  for (std::uint32_t c = 0; c < train_classes.size(); ++c) {
    class_index[train_classes[c]] = c;
  }
  for (std::size_t i = 0; i < split.train.size(); ++i) {
    train_set.vectors.push_back(vectorize_doc(train_tokens[i], vocab));
    train_set.labels.push_back(
        class_index.at(std::string(to_string(train_labels[i]))));
  }

  NBModel nb = train_nb(train_set, config.alpha);
  SVMModel svm = train_svm(train_set, config.lambda, config.epochs, config.seed);
  KNNModel knn = train_knn(train_set, config.k, config.knn_weighting);

  // Evaluation classes: canonical order over everything seen in this run.
  std::vector<Sentiment> all_labels = train_labels;
  all_labels.insert(all_labels.end(), test_labels.begin(), test_labels.end());
  std::vector<std::string> eval_classes = classes_present(all_labels);

  std::vector<std::string> truth;
  truth.reserve(split.test.size());
  for (Sentiment s : test_labels) truth.emplace_back(to_string(s));

  std::vector<CountVector> test_vectors;
  test_vectors.reserve(test_tokens.size());
  for (const auto& t : test_tokens) test_vectors.push_back(vectorize_doc(t, vocab));

  auto evaluate_model = [&](auto&& predict) {
    std::vector<std::string> predicted;
    predicted.reserve(test_vectors.size());
    for (const auto& x : test_vectors) {
      predicted.push_back(train_set.class_set[predict(x)]);
    }
    ConfusionMatrix cm = confusion_matrix(truth, predicted, eval_classes);
    EvaluationReport report = aggregate(cm, config.tn_convention);
    return std::make_pair(std::move(cm), std::move(report));
  };

  auto [nb_cm, nb_report] =
      evaluate_model([&](const CountVector& x) { return predict_nb(nb, x); });
  auto [knn_cm, knn_report] =
      evaluate_model([&](const CountVector& x) { return predict_knn(knn, x); });
  auto [svm_cm, svm_report] =
      evaluate_model([&](const CountVector& x) { return predict_svm(svm, x); });

  fs::path reports_dir = ensure_out_dir(config, "reports");
  fs::path models_dir = ensure_out_dir(config, "models");

  std::string table = render_report({{"NB", nb_report},
                                     {"k-NN", knn_report},
                                     {"Linear SVM", svm_report}});
  write_text_file(reports_dir / "report.txt", table);

  nlohmann::json report_json = {
      {"classes", eval_classes},
      {"tn_convention", std::string(to_string(config.tn_convention))},
      {"split",
       {{"train", split.train.size()},
        {"test", split.test.size()},
        {"ratio", config.split_ratio},
        {"seed", config.seed}}},
      {"classifiers",
       {{"naive_bayes", report_to_json(nb_report, nb_cm)},
        {"knn", report_to_json(knn_report, knn_cm)},
        {"linear_svm", report_to_json(svm_report, svm_cm)}}},
  };
  write_json_file(reports_dir / "report.json", report_json);

  const std::string checksum = vocab.checksum_hex();
  save_nb_model(nb, (models_dir / "nb.json").string(), checksum);
  save_svm_model(svm, (models_dir / "svm.json").string(), checksum);
  save_knn_model(knn, (models_dir / "knn.json").string(), checksum);

  write_manifest(config, "evaluate", {{"train", vocab.size()}});
}

}  // namespace opmine
