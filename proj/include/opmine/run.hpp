#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "opmine/classifiers.hpp"
#include "opmine/corpus_io.hpp"
#include "opmine/metrics.hpp"

namespace opmine {

enum class LabelSource { lexicon, gold };

// One experiment configuration; every command is a deterministic function
// of (inputs, config). Defaults follow the shipped-data conventions.
struct RunConfig {
  std::string posts_path;
  PostFormat format = PostFormat::jsonl;
  std::optional<std::string> stopwords_path;  // built-in list when absent
  std::optional<std::string> lexicon_path;
  std::optional<std::string> translate_table_path;
  double split_ratio = 0.85;
  std::uint64_t seed = 42;
  double alpha = 1.0;
  double lambda = 0.01;
  std::uint32_t epochs = 100;
  std::uint32_t k = 3;
  KnnWeighting knn_weighting = KnnWeighting::uniform;
  TnConvention tn_convention = TnConvention::paper;
  LabelSource label_source = LabelSource::lexicon;
  std::size_t top_k = 100;
  std::string out_dir;

  void validate() const;  // throws on out-of-range values
  // Hash of the canonical key=value rendering; recorded in the manifest.
  std::string config_hash() const;
};

// Flat "key = value" file, '#' comments. Keys are the CLI flag names with
// '-' or '_' accepted interchangeably. Unknown keys are errors.
RunConfig load_config_file(const std::string& path);

// Applies one key/value pair (used by both the file parser and flag
// overrides). Throws on unknown keys or unparsable values.
void apply_config_entry(RunConfig& config, const std::string& key,
                        const std::string& value);

// Subcommand drivers. Each writes its artifacts plus run_manifest.json
// under config.out_dir and throws on any error.
void run_score(const RunConfig& config);
void run_topics(const RunConfig& config);
void run_evaluate(const RunConfig& config);
void run_preprocess(const RunConfig& config);
void run_vectorize(const RunConfig& config);

}  // namespace opmine
