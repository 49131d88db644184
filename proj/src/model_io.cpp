#include "opmine/model_io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace opmine {

namespace {

constexpr int kFormatVersion = 1;

void write_json(const nlohmann::json& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open model file for writing: " + path);
  out << doc.dump(2) << '\n';
  if (!out) throw std::runtime_error("model write failed: " + path);
}

nlohmann::json read_json(const std::string& path, const char* expected_kind,
                         const std::optional<std::string>& expected_checksum) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open model file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("invalid model JSON in " + path + ": " + e.what());
  }
  if (doc.value("format_version", -1) != kFormatVersion) {
    throw std::runtime_error("unsupported model format version in " + path);
  }
  if (doc.value("kind", "") != expected_kind) {
    throw std::runtime_error("model file " + path + " holds a '" +
                             doc.value("kind", "?") + "' model, expected '" +
                             expected_kind + "'");
  }
  if (expected_checksum &&
      doc.value("vocab_checksum", "") != *expected_checksum) {
    throw std::runtime_error(
        "vocabulary checksum mismatch for " + path + ": model has '" +
        doc.value("vocab_checksum", "") + "', current vocabulary is '" +
        *expected_checksum + "'");
  }
  return doc;
}

nlohmann::json sparse_to_json(const CountVector& v) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [k, c] : v.entries) entries.push_back({k, c});
  return entries;
}

CountVector sparse_from_json(const nlohmann::json& entries, std::uint32_t dim) {
  CountVector v;
  v.dim = dim;
  for (const auto& e : entries) {
    v.entries.emplace_back(e.at(0).get<std::uint32_t>(),
                           e.at(1).get<std::uint32_t>());
  }
  return v;
}

}  // namespace

void save_nb_model(const NBModel& model, const std::string& path,
                   const std::string& vocab_checksum) {
  nlohmann::json doc = {
      {"format_version", kFormatVersion},
      {"kind", "naive_bayes"},
      {"vocab_checksum", vocab_checksum},
      {"classes", model.class_set},
      {"n_features", model.n_features},
      {"alpha", model.alpha},
      {"class_log_priors", model.class_log_priors},
      {"word_log_likelihoods", model.word_log_likelihoods},
  };
  write_json(doc, path);
}

NBModel load_nb_model(const std::string& path,
                      const std::optional<std::string>& expected_checksum) {
  nlohmann::json doc = read_json(path, "naive_bayes", expected_checksum);
  NBModel model;
  model.class_set = doc.at("classes").get<std::vector<std::string>>();
  model.n_features = doc.at("n_features").get<std::uint32_t>();
  model.alpha = doc.at("alpha").get<double>();
  model.class_log_priors = doc.at("class_log_priors").get<std::vector<double>>();
  model.word_log_likelihoods =
      doc.at("word_log_likelihoods").get<std::vector<std::vector<double>>>();
  return model;
}

void save_svm_model(const SVMModel& model, const std::string& path,
                    const std::string& vocab_checksum) {
  nlohmann::json doc = {
      {"format_version", kFormatVersion},
      {"kind", "linear_svm_ovr"},
      {"vocab_checksum", vocab_checksum},
      {"classes", model.class_set},
      {"n_features", model.n_features},
      {"lambda", model.lambda},
      {"epochs", model.epochs},
      {"seed", model.seed},
      {"l2_normalize", model.l2_normalize},
      {"weights", model.weights},
      {"biases", model.biases},
  };
  write_json(doc, path);
}

SVMModel load_svm_model(const std::string& path,
                        const std::optional<std::string>& expected_checksum) {
  nlohmann::json doc = read_json(path, "linear_svm_ovr", expected_checksum);
  SVMModel model;
  model.class_set = doc.at("classes").get<std::vector<std::string>>();
  model.n_features = doc.at("n_features").get<std::uint32_t>();
  model.lambda = doc.at("lambda").get<double>();
  model.epochs = doc.at("epochs").get<std::uint32_t>();
  model.seed = doc.at("seed").get<std::uint64_t>();
  model.l2_normalize = doc.value("l2_normalize", false);
  model.weights = doc.at("weights").get<std::vector<std::vector<double>>>();
  model.biases = doc.at("biases").get<std::vector<double>>();
  return model;
}

void save_knn_model(const KNNModel& model, const std::string& path,
                    const std::string& vocab_checksum) {
  nlohmann::json vectors = nlohmann::json::array();
  for (const auto& v : model.vectors) vectors.push_back(sparse_to_json(v));
  nlohmann::json doc = {
      {"format_version", kFormatVersion},
      {"kind", "knn"},
      {"vocab_checksum", vocab_checksum},
      {"classes", model.class_set},
      {"n_features", model.n_features},
      {"k", model.k},
      {"weighting", std::string(to_string(model.weighting))},
      {"vectors", vectors},
      {"labels", model.labels},
  };
  write_json(doc, path);
}

KNNModel load_knn_model(const std::string& path,
                        const std::optional<std::string>& expected_checksum) {
  nlohmann::json doc = read_json(path, "knn", expected_checksum);
  KNNModel model;
  model.class_set = doc.at("classes").get<std::vector<std::string>>();
  model.n_features = doc.at("n_features").get<std::uint32_t>();
  model.k = doc.at("k").get<std::uint32_t>();
  const std::string weighting = doc.at("weighting").get<std::string>();
  if (weighting == "uniform") {
    model.weighting = KnnWeighting::uniform;
  } else if (weighting == "inverse") {
    model.weighting = KnnWeighting::inverse_distance;
  } else {
    throw std::runtime_error("unknown knn weighting '" + weighting + "' in " +
                             path);
  }
  for (const auto& entries : doc.at("vectors")) {
    model.vectors.push_back(sparse_from_json(entries, model.n_features));
  }
  model.labels = doc.at("labels").get<std::vector<std::uint32_t>>();
  return model;
}

}  // namespace opmine
