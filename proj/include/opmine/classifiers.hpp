#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "opmine/vectorize.hpp"

namespace opmine {

// Count vectors with parallel labels (indices into class_set).
struct LabeledDataset {
  std::vector<CountVector> vectors;
  std::vector<std::uint32_t> labels;
  std::vector<std::string> class_set;

  std::size_t size() const { return vectors.size(); }
  std::uint32_t n_features() const {
    return vectors.empty() ? 0 : vectors.front().dim;
  }
  // Checks the parallel-array and shared-dimension invariants.
  void validate() const;
};

// ---------------------------------------------------------------------------
// Multinomial naive Bayes with Laplace smoothing, log space throughout.

struct NBModel {
  std::vector<std::string> class_set;
  std::uint32_t n_features = 0;
  double alpha = 1.0;
  std::vector<double> class_log_priors;                // per class
  std::vector<std::vector<double>> word_log_likelihoods;  // per class, length N
};

// P(c) = class count / total; P(w|c) = (count + alpha) / (tokens_c + alpha*N).
// Requires alpha > 0 and at least one example of every class in class_set.
NBModel train_nb(const LabeledDataset& data, double alpha);

// Relative log-score gap below which classes count as tied.
inline constexpr double kNbTieTolerance = 1e-9;

// argmax_c log P(c) + sum_k x_k log P(w_k|c); ties break to the earlier class.
std::uint32_t predict_nb(const NBModel& model, const CountVector& x);

// ---------------------------------------------------------------------------
// Linear SVM, one-vs-rest, trained by seeded stochastic subgradient descent
// on the primal hinge objective with step 1/(lambda*t). Each class trains on
// an independent stream forked as "svm-class-<name>"; final weights are the
// averaged iterates.

struct SVMModel {
  std::vector<std::string> class_set;
  std::uint32_t n_features = 0;
  double lambda = 0.0;
  std::uint32_t epochs = 0;
  std::uint64_t seed = 0;
  bool l2_normalize = false;  // inputs scaled to unit L2 norm when set
  std::vector<std::vector<double>> weights;  // per class, length N
  std::vector<double> biases;                // per class
  // Objective lambda/2 |w|^2 + mean hinge, measured on the running average
  // at the end of each epoch. Diagnostic only, not serialized.
  std::vector<std::vector<double>> objective_by_epoch;
};

// Raw counts by default; l2_normalize trains and predicts on unit-norm
// vectors instead.
SVMModel train_svm(const LabeledDataset& data, double lambda,
                   std::uint32_t epochs, std::uint64_t seed,
                   bool l2_normalize = false);

double svm_decision(const SVMModel& model, std::size_t class_index,
                    const CountVector& x);

// argmax_c w_c . x + b_c; ties break to the earlier class.
std::uint32_t predict_svm(const SVMModel& model, const CountVector& x);

// ---------------------------------------------------------------------------
// k-nearest neighbors by Euclidean distance (lazy learner).

enum class KnnWeighting { uniform, inverse_distance };

std::string_view to_string(KnnWeighting w);

struct KNNModel {
  std::vector<std::string> class_set;
  std::uint32_t n_features = 0;
  std::uint32_t k = 3;
  KnnWeighting weighting = KnnWeighting::uniform;
  std::vector<CountVector> vectors;
  std::vector<std::uint32_t> labels;
};

// Stores the training set. Requires 1 <= k <= |data|.
KNNModel train_knn(const LabeledDataset& data, std::uint32_t k,
                   KnnWeighting weighting);

// Neighbor ties on distance break toward the lower training index; vote ties
// break to the earlier class. Inverse-distance mode weighs 1/(d + 1e-9).
std::uint32_t predict_knn(const KNNModel& model, const CountVector& x);

inline constexpr double kKnnDistanceEpsilon = 1e-9;

}  // namespace opmine
