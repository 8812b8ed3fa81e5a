#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ulasan/classical.hpp"
#include "ulasan/corpus.hpp"
#include "ulasan/errors.hpp"
#include "ulasan/features.hpp"

namespace ulasan {

// Row = true class, column = predicted class.
struct ConfusionMatrix {
  int n_classes = 0;
  std::vector<std::int64_t> counts;  // row-major n x n

  std::int64_t& at(int true_class, int predicted) {
    return counts[true_class * n_classes + predicted];
  }
  std::int64_t at(int true_class, int predicted) const {
    return counts[true_class * n_classes + predicted];
  }
  std::int64_t total() const;
  std::int64_t row_sum(int true_class) const;
  std::int64_t col_sum(int predicted) const;
};

ConfusionMatrix confusion(const std::vector<int>& y_true,
                          const std::vector<int>& y_pred, int n_classes = kNumClasses);

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::int64_t support = 0;
};

struct AverageMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct EvaluationReport {
  ConfusionMatrix matrix;
  std::vector<ClassMetrics> per_class;
  double accuracy = 0.0;
  AverageMetrics weighted;  // weighted recall equals accuracy
  AverageMetrics macro;
  double kappa = 0.0;
  std::optional<double> auc;  // macro one-vs-rest, when probabilities exist
  WarningLog warnings;
};

// Zero-denominator cells resolve to 0 with a warning record.
EvaluationReport report(const ConfusionMatrix& matrix);

// Rank-based (Mann-Whitney, ties count one half) one-vs-rest AUC per class,
// averaged without support weights. Classes absent from y_true are excluded
// with a warning.
double auc_ovr(const std::vector<int>& y_true,
               const std::vector<std::vector<double>>& probabilities,
               WarningLog* warnings = nullptr, int n_classes = kNumClasses);

// Stratified fold ids (0..folds-1) per sample; per-class fold counts differ
// by at most one. A class with fewer samples than folds is an error.
std::vector<int> stratified_fold_assignment(const std::vector<int>& y, int folds,
                                            std::uint64_t seed);

struct CvPipelineSpec {
  std::int32_t max_features = 3000;
  bool smote = true;
  int smote_k = 5;
  ClassifierSpec classifier;
};

struct CvResult {
  std::vector<EvaluationReport> fold_reports;
  std::vector<int> fold_of;  // fold id per input sample
  std::uint64_t seed = 0;
  // Fitted TF-IDF feature terms per fold; kept for leakage diagnostics.
  std::vector<std::vector<std::string>> fold_feature_terms;

  struct Mean {
    double accuracy = 0.0;
    std::optional<double> auc;
    AverageMetrics weighted;
    AverageMetrics macro;
    double kappa = 0.0;
  } mean;
};

// Stratified k-fold: per fold the TF-IDF model is fitted on the training
// portion only, SMOTE (when enabled) is applied to the training portion only,
// and the held-out fold is evaluated untouched. Fold seeds derive from
// (seed, fold index); folds may run on several threads without changing the
// result.
CvResult cross_validate(const std::vector<LabeledSample>& data,
                        const CvPipelineSpec& spec, int folds, std::uint64_t seed,
                        int threads = 1);

}  // namespace ulasan
