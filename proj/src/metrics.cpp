#include "opmine/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace opmine {

std::uint64_t ConfusionMatrix::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

std::uint64_t ConfusionMatrix::trace() const {
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < size(); ++i) t += at(i, i);
  return t;
}

std::uint64_t ConfusionMatrix::row_total(std::size_t i) const {
  std::uint64_t t = 0;
  for (std::size_t j = 0; j < size(); ++j) t += at(i, j);
  return t;
}

std::uint64_t ConfusionMatrix::col_total(std::size_t j) const {
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < size(); ++i) t += at(i, j);
  return t;
}

ConfusionMatrix confusion_matrix(const std::vector<std::string>& truth,
                                 const std::vector<std::string>& predicted,
                                 const std::vector<std::string>& classes) {
  if (truth.size() != predicted.size()) {
    throw std::invalid_argument(
        "confusion_matrix: truth and prediction lengths differ (" +
        std::to_string(truth.size()) + " vs " +
        std::to_string(predicted.size()) + ")");
  }
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < classes.size(); ++i) index[classes[i]] = i;
  auto lookup = [&](const std::string& label) {
    auto it = index.find(label);
    if (it == index.end()) {
      throw std::invalid_argument("confusion_matrix: unknown label '" + label +
                                  "'");
    }
    return it->second;
  };
  ConfusionMatrix cm;
  cm.classes = classes;
  cm.counts.assign(classes.size() * classes.size(), 0);
  for (std::size_t n = 0; n < truth.size(); ++n) {
    ++cm.at(lookup(truth[n]), lookup(predicted[n]));
  }
  return cm;
}

std::string_view to_string(TnConvention c) {
  return c == TnConvention::paper ? "paper" : "standard";
}

PerClassStats per_class_stats(const ConfusionMatrix& cm, std::size_t i,
                              TnConvention convention) {
  if (i >= cm.size()) {
    throw std::invalid_argument("per_class_stats: class index out of range");
  }
  PerClassStats s;
  s.tp = cm.at(i, i);
  s.fp = cm.col_total(i) - s.tp;
  s.fn = cm.row_total(i) - s.tp;
  if (convention == TnConvention::paper) {
    s.tn = cm.trace() - s.tp;
  } else {
    s.tn = cm.total() - cm.row_total(i) - cm.col_total(i) + s.tp;
  }
  std::uint64_t acc_denominator = s.tp + s.tn + s.fp + s.fn;
  if (acc_denominator == 0) {
    s.accuracy_undefined = true;
  } else {
    s.accuracy = static_cast<double>(s.tp + s.tn) /
                 static_cast<double>(acc_denominator);
  }
  if (s.tp + s.fp == 0) {
    s.precision_undefined = true;
  } else {
    s.precision = static_cast<double>(s.tp) / static_cast<double>(s.tp + s.fp);
  }
  return s;
}

EvaluationReport aggregate(const ConfusionMatrix& cm, TnConvention convention) {
  if (cm.size() == 0 || cm.total() == 0) {
    throw std::invalid_argument("aggregate: empty confusion matrix");
  }
  EvaluationReport report;
  report.classes = cm.classes;
  report.tn_convention = convention;

  std::uint64_t pooled_tp = 0, pooled_fp = 0;
  std::uint64_t pooled_acc_num = 0, pooled_acc_den = 0;
  double macro_precision_sum = 0.0, macro_accuracy_sum = 0.0;
  for (std::size_t i = 0; i < cm.size(); ++i) {
    PerClassStats s = per_class_stats(cm, i, convention);
    report.per_class.push_back(s);
    report.support.push_back(cm.row_total(i));
    pooled_tp += s.tp;
    pooled_fp += s.fp;
    pooled_acc_num += s.tp + s.tn;
    pooled_acc_den += s.tp + s.tn + s.fp + s.fn;
    macro_precision_sum += s.precision;
    macro_accuracy_sum += s.accuracy;
  }
  const auto k = static_cast<double>(cm.size());
  report.overall_accuracy =
      static_cast<double>(cm.trace()) / static_cast<double>(cm.total());
  report.micro_precision =
      static_cast<double>(pooled_tp) / static_cast<double>(pooled_tp + pooled_fp);
  report.micro_accuracy =
      static_cast<double>(pooled_acc_num) / static_cast<double>(pooled_acc_den);
  report.macro_precision = macro_precision_sum / k;
  report.macro_accuracy = macro_accuracy_sum / k;
  return report;
}

std::string render_report(
    const std::vector<std::pair<std::string, EvaluationReport>>& reports) {
  std::size_t name_width = std::string("Classifier").size();
  for (const auto& [name, report] : reports) {
    name_width = std::max(name_width, name.size());
  }
  std::ostringstream out;
  auto pad = [&](const std::string& s, std::size_t width) {
    out << s << std::string(width > s.size() ? width - s.size() : 0, ' ');
  };
  pad("Classifier", name_width + 2);
  out << "Accuracy  Precision micro  Precision macro\n";
  char buf[64];
  for (const auto& [name, report] : reports) {
    pad(name, name_width + 2);
    std::snprintf(buf, sizeof(buf), "%8.2f  %15.2f  %15.2f",
                  report.overall_accuracy * 100.0,
                  report.micro_precision * 100.0,
                  report.macro_precision * 100.0);
    out << buf << '\n';
  }
  return out.str();
}

}  // namespace opmine
