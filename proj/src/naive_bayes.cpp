#include <cmath>
#include <stdexcept>

#include "opmine/classifiers.hpp"

namespace opmine {

void LabeledDataset::validate() const {
  if (vectors.size() != labels.size()) {
    throw std::invalid_argument("dataset: vector and label counts differ");
  }
  for (std::uint32_t label : labels) {
    if (label >= class_set.size()) {
      throw std::invalid_argument("dataset: label index out of range");
    }
  }
  for (const auto& v : vectors) {
    if (v.dim != n_features()) {
      throw std::invalid_argument("dataset: inconsistent vector dimensions");
    }
  }
}

NBModel train_nb(const LabeledDataset& data, double alpha) {
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("naive Bayes smoothing alpha must be > 0");
  }
  data.validate();
  const std::size_t n_classes = data.class_set.size();
  const std::uint32_t n = data.n_features();

  std::vector<std::uint64_t> docs_per_class(n_classes, 0);
  std::vector<std::uint64_t> tokens_per_class(n_classes, 0);
  std::vector<std::vector<std::uint64_t>> word_counts(
      n_classes, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < data.size(); ++i) {
    std::uint32_t c = data.labels[i];
    ++docs_per_class[c];
    for (const auto& [k, count] : data.vectors[i].entries) {
      word_counts[c][k] += count;
      tokens_per_class[c] += count;
    }
  }
  for (std::size_t c = 0; c < n_classes; ++c) {
    if (docs_per_class[c] == 0) {
      throw std::invalid_argument("naive Bayes: class '" + data.class_set[c] +
                                  "' has no training examples");
    }
  }

  NBModel model;
  model.class_set = data.class_set;
  model.n_features = n;
  model.alpha = alpha;
  const double log_total = std::log(static_cast<double>(data.size()));
  for (std::size_t c = 0; c < n_classes; ++c) {
    model.class_log_priors.push_back(
        std::log(static_cast<double>(docs_per_class[c])) - log_total);
    const double log_denominator =
        std::log(static_cast<double>(tokens_per_class[c]) + alpha * n);
    std::vector<double> log_likelihoods(n);
    for (std::uint32_t k = 0; k < n; ++k) {
      log_likelihoods[k] =
          std::log(static_cast<double>(word_counts[c][k]) + alpha) -
          log_denominator;
    }
    model.word_log_likelihoods.push_back(std::move(log_likelihoods));
  }
  return model;
}

std::uint32_t predict_nb(const NBModel& model, const CountVector& x) {
  if (x.dim != model.n_features) {
    throw std::invalid_argument("predict_nb: input dimension " +
                                std::to_string(x.dim) + " != model dimension " +
                                std::to_string(model.n_features));
  }
  std::vector<double> scores(model.class_set.size());
  double best_score = 0.0;
  for (std::size_t c = 0; c < model.class_set.size(); ++c) {
    double score = model.class_log_priors[c];
    const auto& log_likelihoods = model.word_log_likelihoods[c];
    for (const auto& [k, count] : x.entries) {
      score += static_cast<double>(count) * log_likelihoods[k];
    }
    scores[c] = score;
    if (c == 0 || score > best_score) best_score = score;
  }
  // Log scores within rounding distance of the maximum count as ties and
  // resolve by class order; exactly tied posteriors reach the same class
  // regardless of how the individual log terms rounded.
  const double tolerance = kNbTieTolerance * std::max(1.0, std::abs(best_score));
  for (std::uint32_t c = 0; c < scores.size(); ++c) {
    if (scores[c] >= best_score - tolerance) return c;
  }
  return 0;
}

}  // namespace opmine
