#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace opmine {

struct ConfusionMatrix {
  std::vector<std::string> classes;
  std::vector<std::uint64_t> counts;  // K x K row-major; (i,j) = true i, predicted j

  std::size_t size() const { return classes.size(); }
  std::uint64_t at(std::size_t i, std::size_t j) const {
    return counts[i * size() + j];
  }
  std::uint64_t& at(std::size_t i, std::size_t j) {
    return counts[i * size() + j];
  }
  std::uint64_t total() const;
  std::uint64_t trace() const;
  std::uint64_t row_total(std::size_t i) const;
  std::uint64_t col_total(std::size_t j) const;
};

ConfusionMatrix confusion_matrix(const std::vector<std::string>& truth,
                                 const std::vector<std::string>& predicted,
                                 const std::vector<std::string>& classes);

// TN_i convention: `paper` counts the remaining diagonal entries, `standard`
// counts every cell outside row i and column i.
enum class TnConvention { paper, standard };

std::string_view to_string(TnConvention c);

struct PerClassStats {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  std::uint64_t tn = 0;
  double accuracy = 0.0;   // (TP+TN)/(TP+TN+FP+FN)
  double precision = 0.0;  // TP/(TP+FP)
  bool accuracy_undefined = false;   // 0/0; reported as 0 with this flag
  bool precision_undefined = false;
};

PerClassStats per_class_stats(const ConfusionMatrix& cm, std::size_t i,
                              TnConvention convention = TnConvention::paper);

struct EvaluationReport {
  std::vector<std::string> classes;
  std::vector<PerClassStats> per_class;
  std::vector<std::uint64_t> support;  // true-class item counts
  double overall_accuracy = 0.0;       // trace/total
  double micro_precision = 0.0;        // pooled over items
  double macro_precision = 0.0;        // unweighted class mean
  double micro_accuracy = 0.0;
  double macro_accuracy = 0.0;
  TnConvention tn_convention = TnConvention::paper;
};

// Micro aggregates pool the per-class counts (each item weighs equally),
// which makes micro precision coincide with overall accuracy whenever every
// item receives exactly one prediction. Macro aggregates average the
// per-class rates unweighted. Throws on an empty matrix.
EvaluationReport aggregate(const ConfusionMatrix& cm,
                           TnConvention convention = TnConvention::paper);

// Plain-text table, one row per classifier: Accuracy, Precision micro,
// Precision macro, as percentages with 2 decimals.
std::string render_report(
    const std::vector<std::pair<std::string, EvaluationReport>>& reports);

}  // namespace opmine
