#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "opmine/classifiers.hpp"
#include "opmine/random.hpp"

namespace opmine {

namespace {

// One-vs-rest binary subproblem, hinge loss with L2 regularization,
// stochastic subgradient steps 1/(lambda*t). The weight vector is kept as
// w = scale * v so decay and the running iterate sum stay O(nnz) per step.
struct ClassTrainer {
  explicit ClassTrainer(std::uint32_t n)
      : v(n, 0.0), iterate_sum(n, 0.0) {}

  std::vector<double> v;
  double scale = 1.0;
  std::vector<double> iterate_sum;  // sum of w_t = iterate_sum + sum_coeff * v
  double sum_coeff = 0.0;
  double bias = 0.0;
  double bias_sum = 0.0;
  std::uint64_t steps = 0;

  double margin(const CountVector& x, double x_scale, double y) const {
    double dot = 0.0;
    for (const auto& [k, count] : x.entries) dot += v[k] * count;
    return y * (scale * dot * x_scale + bias);
  }

  void step(const CountVector& x, double x_scale, double y, double lambda) {
    ++steps;
    const double eta = 1.0 / (lambda * static_cast<double>(steps));
    const bool violated = margin(x, x_scale, y) < 1.0;
    if (steps > 1) {  // at t=1 the decay factor is 0 and w is still 0
      scale *= 1.0 - eta * lambda;
    }
    if (scale < 1e-100) {  // fold the scale back in before it underflows
      for (auto& value : v) value *= scale;
      sum_coeff /= scale;
      scale = 1.0;
    }
    if (violated) {
      const double coeff = eta * y * x_scale / scale;
      for (const auto& [k, count] : x.entries) {
        v[k] += coeff * count;
        iterate_sum[k] -= sum_coeff * coeff * count;
      }
      bias += eta * y;
    }
    sum_coeff += scale;
    bias_sum += bias;
  }

  std::vector<double> averaged_weights() const {
    std::vector<double> avg(v.size());
    const double inv = 1.0 / static_cast<double>(steps);
    for (std::size_t k = 0; k < v.size(); ++k) {
      avg[k] = (iterate_sum[k] + sum_coeff * v[k]) * inv;
    }
    return avg;
  }

  double averaged_bias() const {
    return bias_sum / static_cast<double>(steps);
  }
};

double objective(const std::vector<double>& w, double bias,
                 const LabeledDataset& data,
                 const std::vector<double>& input_scales,
                 std::size_t class_index, double lambda) {
  double norm_sq = 0.0;
  for (double value : w) norm_sq += value * value;
  double hinge_sum = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double y = data.labels[i] == class_index ? 1.0 : -1.0;
    double dot = 0.0;
    for (const auto& [k, count] : data.vectors[i].entries) {
      dot += w[k] * count;
    }
    hinge_sum += std::max(0.0, 1.0 - y * (dot * input_scales[i] + bias));
  }
  return 0.5 * lambda * norm_sq + hinge_sum / static_cast<double>(data.size());
}

double unit_norm_scale(const CountVector& x) {
  double norm_sq = 0.0;
  for (const auto& [k, count] : x.entries) {
    norm_sq += static_cast<double>(count) * count;
  }
  return norm_sq > 0.0 ? 1.0 / std::sqrt(norm_sq) : 1.0;
}

}  // namespace

SVMModel train_svm(const LabeledDataset& data, double lambda,
                   std::uint32_t epochs, std::uint64_t seed,
                   bool l2_normalize) {
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("svm: lambda must be > 0");
  }
  if (epochs < 1) {
    throw std::invalid_argument("svm: epochs must be >= 1");
  }
  data.validate();
  std::unordered_set<std::uint32_t> present(data.labels.begin(),
                                            data.labels.end());
  if (present.size() < 2) {
    throw std::invalid_argument(
        "svm: training data must contain at least two classes");
  }

  SVMModel model;
  model.class_set = data.class_set;
  model.n_features = data.n_features();
  model.lambda = lambda;
  model.epochs = epochs;
  model.seed = seed;
  model.l2_normalize = l2_normalize;

  std::vector<double> input_scales(data.size(), 1.0);
  if (l2_normalize) {
    for (std::size_t i = 0; i < data.size(); ++i) {
      input_scales[i] = unit_norm_scale(data.vectors[i]);
    }
  }

  for (std::size_t c = 0; c < data.class_set.size(); ++c) {
    SplitMix64 rng(fork_seed(seed, "svm-class-" + data.class_set[c]));
    ClassTrainer trainer(model.n_features);
    std::vector<std::size_t> order(data.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> trace;
    trace.reserve(epochs);
    for (std::uint32_t epoch = 0; epoch < epochs; ++epoch) {
      shuffle(order, rng);
      for (std::size_t i : order) {
        trainer.step(data.vectors[i], input_scales[i],
                     data.labels[i] == c ? 1.0 : -1.0, lambda);
      }
      trace.push_back(objective(trainer.averaged_weights(),
                                trainer.averaged_bias(), data, input_scales, c,
                                lambda));
    }
    model.weights.push_back(trainer.averaged_weights());
    model.biases.push_back(trainer.averaged_bias());
    model.objective_by_epoch.push_back(std::move(trace));
  }
  return model;
}

double svm_decision(const SVMModel& model, std::size_t class_index,
                    const CountVector& x) {
  const auto& w = model.weights[class_index];
  double dot = 0.0;
  for (const auto& [k, count] : x.entries) dot += w[k] * count;
  if (model.l2_normalize) dot *= unit_norm_scale(x);
  return dot + model.biases[class_index];
}

std::uint32_t predict_svm(const SVMModel& model, const CountVector& x) {
  if (x.dim != model.n_features) {
    throw std::invalid_argument("predict_svm: input dimension " +
                                std::to_string(x.dim) + " != model dimension " +
                                std::to_string(model.n_features));
  }
  std::uint32_t best = 0;
  double best_score = 0.0;
  for (std::size_t c = 0; c < model.class_set.size(); ++c) {
    double score = svm_decision(model, c, x);
    if (c == 0 || score > best_score) {
      best = static_cast<std::uint32_t>(c);
      best_score = score;
    }
  }
  return best;
}

}  // namespace opmine
