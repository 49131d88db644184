#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "opmine/classifiers.hpp"

namespace opmine {

std::string_view to_string(KnnWeighting w) {
  return w == KnnWeighting::uniform ? "uniform" : "inverse";
}

KNNModel train_knn(const LabeledDataset& data, std::uint32_t k,
                   KnnWeighting weighting) {
  data.validate();
  if (k < 1) throw std::invalid_argument("knn: k must be >= 1");
  if (data.size() == 0) {
    throw std::invalid_argument("knn: training data is empty");
  }
  if (k > data.size()) {
    throw std::invalid_argument("knn: k = " + std::to_string(k) +
                                " exceeds training size " +
                                std::to_string(data.size()));
  }
  KNNModel model;
  model.class_set = data.class_set;
  model.n_features = data.n_features();
  model.k = k;
  model.weighting = weighting;
  model.vectors = data.vectors;
  model.labels = data.labels;
  return model;
}

std::uint32_t predict_knn(const KNNModel& model, const CountVector& x) {
  if (model.vectors.empty()) {
    throw std::invalid_argument("predict_knn: model holds no training data");
  }
  if (x.dim != model.n_features) {
    throw std::invalid_argument("predict_knn: input dimension " +
                                std::to_string(x.dim) + " != model dimension " +
                                std::to_string(model.n_features));
  }
  // (squared distance, training index); the index breaks distance ties.
  std::vector<std::pair<std::uint64_t, std::size_t>> order;
  order.reserve(model.vectors.size());
  for (std::size_t i = 0; i < model.vectors.size(); ++i) {
    order.emplace_back(squared_distance(model.vectors[i], x), i);
  }
  const std::size_t k = std::min<std::size_t>(model.k, order.size());
  std::partial_sort(order.begin(),
                    order.begin() + static_cast<std::ptrdiff_t>(k),
                    order.end());

  std::vector<double> votes(model.class_set.size(), 0.0);
  for (std::size_t n = 0; n < k; ++n) {
    const auto& [dist_sq, idx] = order[n];
    double weight = 1.0;
    if (model.weighting == KnnWeighting::inverse_distance) {
      weight = 1.0 / (std::sqrt(static_cast<double>(dist_sq)) +
                      kKnnDistanceEpsilon);
    }
    votes[model.labels[idx]] += weight;
  }
  std::uint32_t best = 0;
  for (std::size_t c = 1; c < votes.size(); ++c) {
    if (votes[c] > votes[best]) best = static_cast<std::uint32_t>(c);
  }
  return best;
}

}  // namespace opmine
