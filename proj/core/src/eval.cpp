#include "ulasan/eval.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>

#include "ulasan/balance.hpp"
#include "ulasan/rng.hpp"

namespace ulasan {

std::int64_t ConfusionMatrix::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

std::int64_t ConfusionMatrix::row_sum(int true_class) const {
  std::int64_t s = 0;
  for (int j = 0; j < n_classes; ++j) s += at(true_class, j);
  return s;
}

std::int64_t ConfusionMatrix::col_sum(int predicted) const {
  std::int64_t s = 0;
  for (int i = 0; i < n_classes; ++i) s += at(i, predicted);
  return s;
}

ConfusionMatrix confusion(const std::vector<int>& y_true,
                          const std::vector<int>& y_pred, int n_classes) {
  if (y_true.size() != y_pred.size()) {
    throw DataError("confusion: label vectors differ in length");
  }
  ConfusionMatrix m;
  m.n_classes = n_classes;
  m.counts.assign(static_cast<std::size_t>(n_classes) * n_classes, 0);
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    if (y_true[i] < 0 || y_true[i] >= n_classes || y_pred[i] < 0 || y_pred[i] >= n_classes) {
      throw DataError("confusion: label outside 0.." + std::to_string(n_classes - 1));
    }
    m.at(y_true[i], y_pred[i]) += 1;
  }
  return m;
}

EvaluationReport report(const ConfusionMatrix& matrix) {
  const std::int64_t total = matrix.total();
  if (total == 0) throw DataError("report: empty confusion matrix");

  EvaluationReport rep;
  rep.matrix = matrix;
  rep.per_class.resize(matrix.n_classes);

  std::int64_t diagonal = 0;
  for (int c = 0; c < matrix.n_classes; ++c) {
    const std::int64_t tp = matrix.at(c, c);
    const std::int64_t support = matrix.row_sum(c);
    const std::int64_t predicted = matrix.col_sum(c);
    diagonal += tp;

    ClassMetrics& cm = rep.per_class[c];
    cm.support = support;
    if (predicted == 0) {
      cm.precision = 0.0;
      rep.warnings.push_back("precision undefined for class " + std::to_string(c) +
                             " (no predictions); reported as 0");
    } else {
      cm.precision = static_cast<double>(tp) / static_cast<double>(predicted);
    }
    if (support == 0) {
      cm.recall = 0.0;
      rep.warnings.push_back("recall undefined for class " + std::to_string(c) +
                             " (no true samples); reported as 0");
    } else {
      cm.recall = static_cast<double>(tp) / static_cast<double>(support);
    }
    if (cm.precision + cm.recall == 0.0) {
      cm.f1 = 0.0;
    } else {
      cm.f1 = 2.0 * cm.precision * cm.recall / (cm.precision + cm.recall);
    }
  }

  rep.accuracy = static_cast<double>(diagonal) / static_cast<double>(total);
  for (int c = 0; c < matrix.n_classes; ++c) {
    const double weight = static_cast<double>(rep.per_class[c].support) /
                          static_cast<double>(total);
    rep.weighted.precision += weight * rep.per_class[c].precision;
    rep.weighted.recall += weight * rep.per_class[c].recall;
    rep.weighted.f1 += weight * rep.per_class[c].f1;
    rep.macro.precision += rep.per_class[c].precision / matrix.n_classes;
    rep.macro.recall += rep.per_class[c].recall / matrix.n_classes;
    rep.macro.f1 += rep.per_class[c].f1 / matrix.n_classes;
  }

  // Cohen's kappa from the matrix marginals.
  const double n = static_cast<double>(total);
  const double p_o = static_cast<double>(diagonal) / n;
  double p_e = 0.0;
  for (int c = 0; c < matrix.n_classes; ++c) {
    p_e += (static_cast<double>(matrix.row_sum(c)) / n) *
           (static_cast<double>(matrix.col_sum(c)) / n);
  }
  if (1.0 - p_e == 0.0) {
    rep.kappa = 0.0;
    rep.warnings.push_back("kappa undefined (expected agreement is 1); reported as 0");
  } else {
    rep.kappa = (p_o - p_e) / (1.0 - p_e);
  }
  return rep;
}

double auc_ovr(const std::vector<int>& y_true,
               const std::vector<std::vector<double>>& probabilities,
               WarningLog* warnings, int n_classes) {
  if (y_true.size() != probabilities.size() || y_true.empty()) {
    throw DataError("auc_ovr: labels/probabilities mismatch");
  }
  for (const auto& row : probabilities) {
    double s = std::accumulate(row.begin(), row.end(), 0.0);
    if (std::abs(s - 1.0) > 1e-6) {
      throw DataError("auc_ovr: probability row does not sum to 1");
    }
  }

  double auc_sum = 0.0;
  int included = 0;
  for (int c = 0; c < n_classes; ++c) {
    std::int64_t n_pos = 0;
    for (int label : y_true) n_pos += label == c;
    const std::int64_t n_neg = static_cast<std::int64_t>(y_true.size()) - n_pos;
    if (n_pos == 0 || n_neg == 0) {
      if (warnings) {
        warnings->push_back("auc: class " + std::to_string(c) +
                            " absent from one side; excluded from the mean");
      }
      continue;
    }
    // Midrank sum over the positive group.
    std::vector<std::pair<double, int>> scored(y_true.size());
    for (std::size_t i = 0; i < y_true.size(); ++i) {
      scored[i] = {probabilities[i][c], y_true[i] == c ? 1 : 0};
    }
    std::sort(scored.begin(), scored.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    double rank_sum_pos = 0.0;
    std::size_t i = 0;
    while (i < scored.size()) {
      std::size_t j = i;
      while (j < scored.size() && scored[j].first == scored[i].first) ++j;
      const double midrank = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j));
      for (std::size_t k = i; k < j; ++k) {
        if (scored[k].second) rank_sum_pos += midrank;
      }
      i = j;
    }
    const double u = rank_sum_pos - static_cast<double>(n_pos) *
                                        (static_cast<double>(n_pos) + 1.0) / 2.0;
    auc_sum += u / (static_cast<double>(n_pos) * static_cast<double>(n_neg));
    ++included;
  }
  if (included == 0) throw DataError("auc_ovr: no class has both positives and negatives");
  return auc_sum / included;
}

std::vector<int> stratified_fold_assignment(const std::vector<int>& y, int folds,
                                            std::uint64_t seed) {
  if (folds < 2) throw ConfigError("stratified folds must be >= 2");
  int n_classes = 0;
  for (int c : y) n_classes = std::max(n_classes, c + 1);
  std::vector<std::vector<std::size_t>> members(n_classes);
  for (std::size_t i = 0; i < y.size(); ++i) members[y[i]].push_back(i);

  std::vector<int> fold_of(y.size(), -1);
  Rng rng = make_rng(derive_seed(seed, "kfold"));
  for (int c = 0; c < n_classes; ++c) {
    if (members[c].empty()) continue;
    if (members[c].size() < static_cast<std::size_t>(folds)) {
      throw DataError("stratification error: class " + std::to_string(c) + " has " +
                      std::to_string(members[c].size()) + " samples, fewer than " +
                      std::to_string(folds) + " folds");
    }
    shuffle(members[c], rng);
    for (std::size_t k = 0; k < members[c].size(); ++k) {
      fold_of[members[c][k]] = static_cast<int>(k % folds);
    }
  }
  return fold_of;
}

namespace {

struct FoldOutput {
  EvaluationReport report;
  std::vector<std::string> feature_terms;
};

FoldOutput run_fold(const std::vector<LabeledSample>& data,
                    const std::vector<int>& fold_of, int fold,
                    const CvPipelineSpec& spec, std::uint64_t fold_seed) {
  std::vector<TokenList> train_tokens;
  std::vector<int> train_y;
  std::vector<std::size_t> test_idx;
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (fold_of[i] == fold) {
      test_idx.push_back(i);
    } else {
      train_tokens.push_back(data[i].tokens);
      train_y.push_back(static_cast<int>(data[i].label));
    }
  }

  TfIdfModel tfidf = fit_tfidf(train_tokens, spec.max_features);
  std::vector<SparseVector> train_x;
  train_x.reserve(train_tokens.size());
  for (const auto& tokens : train_tokens) train_x.push_back(transform_tfidf(tokens, tfidf));

  WarningLog warnings;
  if (spec.smote) {
    BalancedSet balanced = smote_oversample(train_x, train_y, spec.smote_k, fold_seed);
    train_x = std::move(balanced.vectors);
    train_y = std::move(balanced.labels);
    warnings = std::move(balanced.warnings);
  }

  ClassicalModel model = train_classifier(spec.classifier, train_x, train_y);

  std::vector<int> y_true, y_pred;
  std::vector<std::vector<double>> probs;
  y_true.reserve(test_idx.size());
  for (std::size_t i : test_idx) {
    Prediction p = predict_classifier(model, transform_tfidf(data[i].tokens, tfidf));
    y_true.push_back(static_cast<int>(data[i].label));
    y_pred.push_back(p.label);
    if (!p.probabilities.empty()) probs.push_back(std::move(p.probabilities));
  }

  FoldOutput out;
  out.report = report(confusion(y_true, y_pred));
  out.report.warnings.insert(out.report.warnings.begin(), warnings.begin(), warnings.end());
  if (emits_probabilities(model) && probs.size() == y_true.size()) {
    out.report.auc = auc_ovr(y_true, probs, &out.report.warnings);
  }
  out.feature_terms = tfidf.terms;
  return out;
}

}  // namespace

CvResult cross_validate(const std::vector<LabeledSample>& data,
                        const CvPipelineSpec& spec, int folds, std::uint64_t seed,
                        int threads) {
  std::vector<int> y(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) y[i] = static_cast<int>(data[i].label);

  CvResult result;
  result.seed = seed;
  result.fold_of = stratified_fold_assignment(y, folds, seed);
  result.fold_reports.resize(folds);
  result.fold_feature_terms.resize(folds);

  auto run_one = [&](int fold) {
    return run_fold(data, result.fold_of, fold, spec, derive_seed(seed, "fold", fold));
  };

  if (threads > 1) {
    std::vector<std::future<FoldOutput>> futures;
    futures.reserve(folds);
    for (int fold = 0; fold < folds; ++fold) {
      futures.push_back(std::async(std::launch::async, run_one, fold));
    }
    for (int fold = 0; fold < folds; ++fold) {
      FoldOutput out = futures[fold].get();
      result.fold_reports[fold] = std::move(out.report);
      result.fold_feature_terms[fold] = std::move(out.feature_terms);
    }
  } else {
    for (int fold = 0; fold < folds; ++fold) {
      FoldOutput out = run_one(fold);
      result.fold_reports[fold] = std::move(out.report);
      result.fold_feature_terms[fold] = std::move(out.feature_terms);
    }
  }

  // Unweighted mean across folds (fold sizes differ by at most one).
  bool all_auc = true;
  double auc_sum = 0.0;
  for (const auto& rep : result.fold_reports) {
    result.mean.accuracy += rep.accuracy / folds;
    result.mean.weighted.precision += rep.weighted.precision / folds;
    result.mean.weighted.recall += rep.weighted.recall / folds;
    result.mean.weighted.f1 += rep.weighted.f1 / folds;
    result.mean.macro.precision += rep.macro.precision / folds;
    result.mean.macro.recall += rep.macro.recall / folds;
    result.mean.macro.f1 += rep.macro.f1 / folds;
    result.mean.kappa += rep.kappa / folds;
    if (rep.auc) auc_sum += *rep.auc; else all_auc = false;
  }
  if (all_auc) result.mean.auc = auc_sum / folds;
  return result;
}

}  // namespace ulasan
