#pragma once

#include <optional>
#include <string>

#include "opmine/classifiers.hpp"

namespace opmine {

// Versioned JSON model files. Each carries the checksum of the vocabulary
// the model was trained against; loading with an expected checksum rejects
// mismatched feature spaces.

void save_nb_model(const NBModel& model, const std::string& path,
                   const std::string& vocab_checksum);
NBModel load_nb_model(const std::string& path,
                      const std::optional<std::string>& expected_checksum);

void save_svm_model(const SVMModel& model, const std::string& path,
                    const std::string& vocab_checksum);
SVMModel load_svm_model(const std::string& path,
                        const std::optional<std::string>& expected_checksum);

void save_knn_model(const KNNModel& model, const std::string& path,
                    const std::string& vocab_checksum);
KNNModel load_knn_model(const std::string& path,
                        const std::optional<std::string>& expected_checksum);

}  // namespace opmine
