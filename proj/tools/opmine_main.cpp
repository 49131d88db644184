// opmine: batch opinion-mining pipeline over exported social-media dumps.
//
// Subcommands: score, topics, evaluate, preprocess, vectorize. Options come
// from an optional key=value config file plus flags; flags win.

#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "opmine/run.hpp"
#include "opmine/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

namespace {

struct FlagValues {
  std::vector<std::pair<std::string, std::string>> entries;
};

void add_common_options(CLI::App* cmd, std::optional<std::string>& config_path,
                        FlagValues& flags) {
  cmd->add_option_function<std::string>(
      "--config",
      [&config_path](const std::string& v) { config_path = v; },
      "Key=value config file; flags override its entries");
  auto capture = [cmd, &flags](const std::string& flag, const std::string& key,
                               const std::string& help) {
    cmd->add_option_function<std::string>(
        flag,
        [&flags, key](const std::string& v) { flags.entries.emplace_back(key, v); },
        help);
  };
  capture("--posts", "posts", "Posts file (JSONL or CSV)");
  capture("--format", "format", "Posts file format: jsonl|csv");
  capture("--stopwords", "stopwords", "Stopword file (default: built-in list)");
  capture("--lexicon", "lexicon", "Sentiment lexicon TSV");
  capture("--translate-table", "translate_table",
          "Whole-text translation TSV (source<TAB>target)");
  capture("--split-ratio", "split_ratio", "Training fraction (default 0.85)");
  capture("--seed", "seed", "Master seed (default 42)");
  capture("--alpha", "alpha", "Naive Bayes smoothing (default 1)");
  capture("--lambda", "lambda", "SVM regularization (default 0.01)");
  capture("--epochs", "epochs", "SVM training epochs (default 100)");
  capture("--k", "k", "k-NN neighbor count (default 3)");
  capture("--knn-weighting", "knn_weighting", "k-NN vote weighting: uniform|inverse");
  capture("--tn-convention", "tn_convention", "Per-class TN convention: paper|standard");
  capture("--label-source", "label_source", "Training labels: lexicon|gold");
  capture("--top-k", "top_k", "Wordcloud entry limit (default 100)");
  capture("--out", "out", "Output directory");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"opinion mining pipeline for short social-media texts"};
  app.set_version_flag("--version", std::string(opmine::kVersion));
  app.require_subcommand(1);

  struct Subcommand {
    const char* name;
    const char* description;
    void (*run)(const opmine::RunConfig&);
  };
  const Subcommand subcommands[] = {
      {"score", "Lexicon polarity/subjectivity scores and label distribution",
       opmine::run_score},
      {"topics", "Top-term wordcloud data per dataset tag", opmine::run_topics},
      {"evaluate", "Train and evaluate NB, k-NN and linear SVM",
       opmine::run_evaluate},
      {"preprocess", "Dump preprocessed token lists", opmine::run_preprocess},
      {"vectorize", "Dump term-document matrices per dataset tag",
       opmine::run_vectorize},
  };

  std::optional<std::string> config_path;
  FlagValues flags;
  for (const auto& sub : subcommands) {
    CLI::App* cmd = app.add_subcommand(sub.name, sub.description);
    add_common_options(cmd, config_path, flags);
    cmd->callback([&, run = sub.run] {
      opmine::RunConfig config;
      if (config_path) config = opmine::load_config_file(*config_path);
      for (const auto& [key, value] : flags.entries) {
        opmine::apply_config_entry(config, key, value);
      }
      run(config);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    nlohmann::json record = {{"error", e.what()}};
    std::cerr << record.dump() << '\n';
    return 1;
  }
  return 0;
}
