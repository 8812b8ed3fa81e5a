#include "ulasan/classical.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <numeric>
#include <set>

#include <nlohmann/json.hpp>

#include "ulasan/errors.hpp"
#include "ulasan/eval.hpp"
#include "ulasan/rng.hpp"

namespace ulasan {

namespace {

double sparse_at(const SparseVector& x, std::int32_t feature) {
  auto it = std::lower_bound(x.indices.begin(), x.indices.end(), feature);
  if (it == x.indices.end() || *it != feature) return 0.0;
  return x.values[it - x.indices.begin()];
}

int n_classes_of(const std::vector<int>& y) {
  int n = 0;
  for (int c : y) n = std::max(n, c + 1);
  return n;
}

}  // namespace

// -- Multinomial Naive Bayes --------------------------------------------------

MnbModel train_mnb(const std::vector<SparseVector>& X, const std::vector<int>& y,
                   double alpha) {
  if (X.empty() || X.size() != y.size()) throw DataError("train_mnb: empty or mismatched input");
  if (alpha <= 0.0) throw ConfigError("train_mnb: alpha must be positive");
  const int n_classes = n_classes_of(y);
  const std::int32_t dim = X[0].dimension;

  std::vector<std::vector<double>> feature_sums(n_classes, std::vector<double>(dim, 0.0));
  std::vector<std::int64_t> class_counts(n_classes, 0);
  for (std::size_t i = 0; i < X.size(); ++i) {
    class_counts[y[i]] += 1;
    for (std::size_t k = 0; k < X[i].indices.size(); ++k) {
      const double v = X[i].values[k];
      if (v < 0.0) throw DataError("train_mnb: negative feature weight");
      feature_sums[y[i]][X[i].indices[k]] += v;
    }
  }
  for (int c = 0; c < n_classes; ++c) {
    if (class_counts[c] == 0) throw DataError("train_mnb: class " + std::to_string(c) + " has no samples");
  }

  MnbModel model;
  model.alpha = alpha;
  model.dimension = dim;
  model.log_prior.resize(n_classes);
  model.log_likelihood.assign(n_classes, std::vector<double>(dim, 0.0));
  for (int c = 0; c < n_classes; ++c) {
    model.log_prior[c] = std::log(static_cast<double>(class_counts[c]) /
                                  static_cast<double>(X.size()));
    const double total = std::accumulate(feature_sums[c].begin(), feature_sums[c].end(), 0.0);
    const double denom = total + alpha * static_cast<double>(dim);
    for (std::int32_t f = 0; f < dim; ++f) {
      model.log_likelihood[c][f] = std::log((feature_sums[c][f] + alpha) / denom);
    }
  }
  return model;
}

Prediction predict_mnb(const MnbModel& model, const SparseVector& x) {
  if (x.dimension != model.dimension) throw DataError("predict_mnb: dimension mismatch");
  const int n_classes = static_cast<int>(model.log_prior.size());
  std::vector<double> scores(n_classes);
  for (int c = 0; c < n_classes; ++c) {
    double s = model.log_prior[c];
    for (std::size_t k = 0; k < x.indices.size(); ++k) {
      s += x.values[k] * model.log_likelihood[c][x.indices[k]];
    }
    scores[c] = s;
  }
  const double max_score = *std::max_element(scores.begin(), scores.end());
  double z = 0.0;
  Prediction pred;
  pred.probabilities.resize(n_classes);
  for (int c = 0; c < n_classes; ++c) {
    pred.probabilities[c] = std::exp(scores[c] - max_score);
    z += pred.probabilities[c];
  }
  for (auto& p : pred.probabilities) p /= z;
  pred.label = static_cast<int>(std::max_element(scores.begin(), scores.end()) - scores.begin());
  return pred;
}

// -- Linear SVM ---------------------------------------------------------------

namespace {

struct BinarySvm {
  std::vector<double> w;
  double b = 0.0;
};

// SMO with maximal-violating-pair working-set selection on the dual of the
// stated primal (bias via the equality constraint, so it is unregularized).
BinarySvm solve_binary_svm(const std::vector<SparseVector>& X,
                           const std::vector<int>& signs, double C) {
  const std::size_t n = X.size();
  const std::int32_t dim = X[0].dimension;
  std::vector<double> alpha(n, 0.0);
  std::vector<double> w(dim, 0.0);
  std::vector<double> kii(n);
  for (std::size_t i = 0; i < n; ++i) kii[i] = squared_norm(X[i]);

  auto wx = [&](std::size_t i) {
    double s = 0.0;
    for (std::size_t k = 0; k < X[i].indices.size(); ++k) {
      s += w[X[i].indices[k]] * X[i].values[k];
    }
    return s;
  };

  const double eps = 1e-6;
  const long max_iter = 200000;
  for (long iter = 0; iter < max_iter; ++iter) {
    // G_t = s_t*(w.x_t) - 1; violating pair over I_up / I_low.
    double m_up = -std::numeric_limits<double>::infinity();
    double m_low = std::numeric_limits<double>::infinity();
    std::ptrdiff_t i = -1, j = -1;
    for (std::size_t t = 0; t < n; ++t) {
      const double g = signs[t] * wx(t) - 1.0;
      const double v = -signs[t] * g;
      const bool in_up = (signs[t] > 0 && alpha[t] < C) || (signs[t] < 0 && alpha[t] > 0);
      const bool in_low = (signs[t] > 0 && alpha[t] > 0) || (signs[t] < 0 && alpha[t] < C);
      if (in_up && v > m_up) { m_up = v; i = static_cast<std::ptrdiff_t>(t); }
      if (in_low && v < m_low) { m_low = v; j = static_cast<std::ptrdiff_t>(t); }
    }
    if (i < 0 || j < 0 || m_up - m_low <= eps) break;

    const double gi = signs[i] * wx(i) - 1.0;
    const double gj = signs[j] * wx(j) - 1.0;
    // Direction alpha_i += s_i*t, alpha_j -= s_j*t keeps sum(s*alpha) fixed.
    double t_lo, t_hi;
    if (signs[i] > 0) { t_lo = -alpha[i]; t_hi = C - alpha[i]; }
    else { t_lo = alpha[i] - C; t_hi = alpha[i]; }
    if (signs[j] > 0) { t_lo = std::max(t_lo, alpha[j] - C); t_hi = std::min(t_hi, alpha[j]); }
    else { t_lo = std::max(t_lo, -alpha[j]); t_hi = std::min(t_hi, C - alpha[j]); }

    const double eta = std::max(kii[i] + kii[j] - 2.0 * dot(X[i], X[j]), 1e-12);
    double step = -(signs[i] * gi - signs[j] * gj) / eta;
    step = std::clamp(step, t_lo, t_hi);
    if (step == 0.0) break;

    const double di = signs[i] * step;
    const double dj = -signs[j] * step;
    alpha[i] += di;
    alpha[j] += dj;
    for (std::size_t k = 0; k < X[i].indices.size(); ++k) {
      w[X[i].indices[k]] += di * signs[i] * X[i].values[k];
    }
    for (std::size_t k = 0; k < X[j].indices.size(); ++k) {
      w[X[j].indices[k]] += dj * signs[j] * X[j].values[k];
    }
  }

  // Bias from free support vectors, else midpoint of the KKT interval.
  double sum_b = 0.0;
  long free_sv = 0;
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < n; ++t) {
    const double margin = wx(t);
    if (alpha[t] > 1e-9 && alpha[t] < C - 1e-9) {
      sum_b += signs[t] - margin;
      ++free_sv;
    } else if (alpha[t] <= 1e-9) {
      if (signs[t] > 0) lo = std::max(lo, 1.0 - margin);
      else hi = std::min(hi, -1.0 - margin);
    } else {
      if (signs[t] > 0) hi = std::min(hi, 1.0 - margin);
      else lo = std::max(lo, -1.0 - margin);
    }
  }
  BinarySvm out;
  out.w = std::move(w);
  if (free_sv > 0) {
    out.b = sum_b / static_cast<double>(free_sv);
  } else if (std::isfinite(lo) && std::isfinite(hi)) {
    out.b = 0.5 * (lo + hi);
  } else if (std::isfinite(lo)) {
    out.b = lo;
  } else if (std::isfinite(hi)) {
    out.b = hi;
  }
  return out;
}

}  // namespace

SvmModel train_linear_svm(const std::vector<SparseVector>& X,
                          const std::vector<int>& y, double C) {
  if (X.empty() || X.size() != y.size()) throw DataError("train_linear_svm: empty or mismatched input");
  if (C <= 0.0) throw ConfigError("train_linear_svm: C must be positive");
  std::set<int> present(y.begin(), y.end());
  if (present.size() < 2) throw DataError("train_linear_svm: needs at least two classes");

  const int n_classes = n_classes_of(y);
  SvmModel model;
  model.C = C;
  model.dimension = X[0].dimension;
  model.weights.resize(n_classes);
  model.bias.resize(n_classes, 0.0);
  for (int c = 0; c < n_classes; ++c) {
    std::vector<int> signs(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) signs[i] = y[i] == c ? 1 : -1;
    BinarySvm bin = solve_binary_svm(X, signs, C);
    model.weights[c] = std::move(bin.w);
    model.bias[c] = bin.b;
  }
  return model;
}

std::vector<double> svm_decision_values(const SvmModel& model, const SparseVector& x) {
  if (x.dimension != model.dimension) throw DataError("svm: dimension mismatch");
  std::vector<double> values(model.weights.size());
  for (std::size_t c = 0; c < model.weights.size(); ++c) {
    double s = model.bias[c];
    for (std::size_t k = 0; k < x.indices.size(); ++k) {
      s += model.weights[c][x.indices[k]] * x.values[k];
    }
    values[c] = s;
  }
  return values;
}

Prediction predict_svm(const SvmModel& model, const SparseVector& x) {
  const auto values = svm_decision_values(model, x);
  Prediction pred;
  pred.label = static_cast<int>(std::max_element(values.begin(), values.end()) - values.begin());
  return pred;
}

double svm_binary_objective(const std::vector<SparseVector>& X,
                            const std::vector<int>& signs,
                            const std::vector<double>& w, double b, double C) {
  double obj = 0.0;
  for (double v : w) obj += 0.5 * v * v;
  for (std::size_t i = 0; i < X.size(); ++i) {
    double margin = b;
    for (std::size_t k = 0; k < X[i].indices.size(); ++k) {
      margin += w[X[i].indices[k]] * X[i].values[k];
    }
    obj += C * std::max(0.0, 1.0 - signs[i] * margin);
  }
  return obj;
}

// -- CART decision tree ---------------------------------------------------------

double gini_impurity(const std::vector<std::int64_t>& histogram) {
  std::int64_t total = 0;
  for (auto c : histogram) total += c;
  if (total == 0) return 0.0;
  double sum_sq = 0.0;
  for (auto c : histogram) {
    const double p = static_cast<double>(c) / static_cast<double>(total);
    sum_sq += p * p;
  }
  return 1.0 - sum_sq;
}

std::int32_t TreeModel::depth() const {
  if (nodes.empty()) return 0;
  std::vector<std::pair<std::int32_t, std::int32_t>> stack{{0, 1}};
  std::int32_t best = 0;
  while (!stack.empty()) {
    auto [node, d] = stack.back();
    stack.pop_back();
    best = std::max(best, d);
    if (nodes[node].feature >= 0) {
      stack.push_back({nodes[node].left, d + 1});
      stack.push_back({nodes[node].right, d + 1});
    }
  }
  return best;
}

std::int64_t TreeModel::split_count() const {
  std::int64_t n = 0;
  for (const auto& node : nodes) n += node.feature >= 0;
  return n;
}

namespace {

struct SplitChoice {
  bool found = false;
  std::int32_t feature = -1;
  double threshold = 0.0;
};

// Column-sorted view of the training matrix: per feature, (value, sample)
// pairs sorted by value; zeros implicit.
struct Columns {
  std::vector<std::vector<std::pair<double, std::int32_t>>> cols;
};

class TreeBuilder {
 public:
  TreeBuilder(const std::vector<SparseVector>& X, const std::vector<int>& y,
              const TreeConfig& config, int n_classes)
      : X_(X), y_(y), config_(config), n_classes_(n_classes) {
    columns_.cols.resize(X[0].dimension);
    for (std::size_t i = 0; i < X.size(); ++i) {
      for (std::size_t k = 0; k < X[i].indices.size(); ++k) {
        if (X[i].values[k] != 0.0) {
          columns_.cols[X[i].indices[k]].emplace_back(X[i].values[k],
                                                      static_cast<std::int32_t>(i));
        }
      }
    }
    for (auto& col : columns_.cols) {
      std::stable_sort(col.begin(), col.end(),
                       [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    member_epoch_.assign(X.size(), -1);
  }

  TreeModel build() {
    TreeModel model;
    model.dimension = X_[0].dimension;
    model.n_classes = n_classes_;
    std::vector<std::int32_t> all(X_.size());
    std::iota(all.begin(), all.end(), 0);
    grow(model, std::move(all), 1);
    return model;
  }

 private:
  const std::vector<SparseVector>& X_;
  const std::vector<int>& y_;
  const TreeConfig& config_;
  int n_classes_;
  Columns columns_;
  std::vector<std::int32_t> member_epoch_;
  std::int32_t epoch_ = 0;

  std::vector<std::int64_t> histogram_of(const std::vector<std::int32_t>& members) const {
    std::vector<std::int64_t> hist(n_classes_, 0);
    for (auto i : members) hist[y_[i]] += 1;
    return hist;
  }

  static double score_of(const std::vector<std::int64_t>& hist, std::int64_t n) {
    double s = 0.0;
    for (auto c : hist) s += static_cast<double>(c) * static_cast<double>(c);
    return s / static_cast<double>(n);
  }

  // Best split over all features; maximizing sum of per-child (sum c^2)/n,
  // which orders identically to minimizing weighted Gini.
  SplitChoice best_split(const std::vector<std::int32_t>& members,
                         const std::vector<std::int64_t>& hist) {
    const std::int64_t n = static_cast<std::int64_t>(members.size());
    const double parent_score = score_of(hist, n);
    double best_score = parent_score;
    SplitChoice choice;

    ++epoch_;
    for (auto i : members) member_epoch_[i] = epoch_;

    std::vector<std::int64_t> nonzero_hist(n_classes_);
    std::vector<std::int64_t> left(n_classes_);
    for (std::int32_t f = 0; f < X_[0].dimension; ++f) {
      const auto& col = columns_.cols[f];
      // Member nonzeros in value order.
      nonzeros_.clear();
      std::fill(nonzero_hist.begin(), nonzero_hist.end(), 0);
      for (const auto& [v, i] : col) {
        if (member_epoch_[i] == epoch_) {
          nonzeros_.emplace_back(v, y_[i]);
          nonzero_hist[y_[i]] += 1;
        }
      }
      const std::int64_t zeros = n - static_cast<std::int64_t>(nonzeros_.size());
      if (nonzeros_.empty()) continue;  // constant zero column

      // Walk the ordered values (with the implicit zero block merged in) and
      // evaluate the midpoint threshold at every distinct-value boundary.
      std::fill(left.begin(), left.end(), 0);
      std::int64_t n_left = 0;
      double prev_value = 0.0;
      bool have_prev = false;
      bool zeros_pending = zeros > 0;

      auto consider_boundary = [&](double next_value) {
        if (!have_prev || n_left == 0 || n_left == n) return;
        if (n_left < config_.min_samples_leaf || n - n_left < config_.min_samples_leaf) return;
        std::int64_t right_total = n - n_left;
        double score = score_of(left, n_left);
        {
          double s = 0.0;
          for (int c = 0; c < n_classes_; ++c) {
            const double rc = static_cast<double>(hist[c] - left[c]);
            s += rc * rc;
          }
          score += s / static_cast<double>(right_total);
        }
        if (score > best_score) {
          best_score = score;
          choice.found = true;
          choice.feature = f;
          choice.threshold = 0.5 * (prev_value + next_value);
        }
      };

      auto advance = [&](double value, int cls, std::int64_t count) {
        if (have_prev && value != prev_value) consider_boundary(value);
        if (cls >= 0) {
          left[cls] += count;
          n_left += count;
        } else {
          for (int c = 0; c < n_classes_; ++c) {
            left[c] += hist[c] - nonzero_hist[c];
          }
          n_left += count;
        }
        prev_value = value;
        have_prev = true;
      };

      for (const auto& [v, cls] : nonzeros_) {
        if (zeros_pending && v > 0.0) {
          advance(0.0, -1, zeros);
          zeros_pending = false;
        }
        advance(v, cls, 1);
      }
      if (zeros_pending) advance(0.0, -1, zeros);
    }
    return choice;
  }

  void grow(TreeModel& model, std::vector<std::int32_t> members, std::int32_t depth) {
    const std::int32_t node_index = static_cast<std::int32_t>(model.nodes.size());
    model.nodes.emplace_back();
    model.nodes[node_index].histogram = histogram_of(members);
    const auto& hist = model.nodes[node_index].histogram;

    const bool pure = std::count_if(hist.begin(), hist.end(),
                                    [](std::int64_t c) { return c > 0; }) <= 1;
    const bool depth_ok = !config_.max_depth || depth <= *config_.max_depth;
    if (pure || !depth_ok ||
        static_cast<std::int64_t>(members.size()) < config_.min_samples_split) {
      return;
    }
    SplitChoice choice = best_split(members, hist);
    if (!choice.found) return;

    std::vector<std::int32_t> left_members, right_members;
    for (auto i : members) {
      if (sparse_at(X_[i], choice.feature) <= choice.threshold) {
        left_members.push_back(i);
      } else {
        right_members.push_back(i);
      }
    }
    if (left_members.empty() || right_members.empty()) return;

    members.clear();
    members.shrink_to_fit();
    model.nodes[node_index].feature = choice.feature;
    model.nodes[node_index].threshold = choice.threshold;
    const std::int32_t left_index = static_cast<std::int32_t>(model.nodes.size());
    model.nodes[node_index].left = left_index;
    grow(model, std::move(left_members), depth + 1);
    model.nodes[node_index].right = static_cast<std::int32_t>(model.nodes.size());
    grow(model, std::move(right_members), depth + 1);
  }

  std::vector<std::pair<double, int>> nonzeros_;
};

}  // namespace

TreeModel train_decision_tree(const std::vector<SparseVector>& X,
                              const std::vector<int>& y, const TreeConfig& config) {
  if (X.empty() || X.size() != y.size()) throw DataError("train_decision_tree: empty or mismatched input");
  if (config.min_samples_leaf < 1 || config.min_samples_split < 2) {
    throw ConfigError("train_decision_tree: invalid minimum sample limits");
  }
  TreeBuilder builder(X, y, config, n_classes_of(y));
  return builder.build();
}

Prediction predict_tree(const TreeModel& model, const SparseVector& x) {
  if (x.dimension != model.dimension) throw DataError("predict_tree: dimension mismatch");
  std::int32_t node = 0;
  while (model.nodes[node].feature >= 0) {
    node = sparse_at(x, model.nodes[node].feature) <= model.nodes[node].threshold
               ? model.nodes[node].left
               : model.nodes[node].right;
  }
  const auto& hist = model.nodes[node].histogram;
  std::int64_t total = 0;
  for (auto c : hist) total += c;
  Prediction pred;
  pred.probabilities.resize(hist.size());
  for (std::size_t c = 0; c < hist.size(); ++c) {
    pred.probabilities[c] = static_cast<double>(hist[c]) / static_cast<double>(total);
  }
  pred.label = static_cast<int>(
      std::max_element(pred.probabilities.begin(), pred.probabilities.end()) -
      pred.probabilities.begin());
  return pred;
}

// -- Tuning -----------------------------------------------------------------------

TuneResult tune_decision_tree(const std::vector<SparseVector>& X,
                              const std::vector<int>& y,
                              const TreeSearchSpace& space, int n_iter,
                              std::uint64_t seed, int folds) {
  if (n_iter < 1) throw ConfigError("tune_decision_tree: n_iter must be >= 1");
  if (space.max_depth.empty() || space.min_samples_leaf.empty() ||
      space.min_samples_split.empty()) {
    throw ConfigError("tune_decision_tree: empty search space");
  }
  const auto fold_of = stratified_fold_assignment(y, folds, derive_seed(seed, "tune-folds"));

  Rng rng = make_rng(derive_seed(seed, "tune-sample"));
  TuneResult result;
  result.candidates.reserve(n_iter);
  for (int it = 0; it < n_iter; ++it) {
    TreeConfig cfg;
    cfg.max_depth = space.max_depth[uniform_index(rng, space.max_depth.size())];
    cfg.min_samples_leaf = space.min_samples_leaf[uniform_index(rng, space.min_samples_leaf.size())];
    cfg.min_samples_split = space.min_samples_split[uniform_index(rng, space.min_samples_split.size())];

    double macro_sum = 0.0;
    for (int fold = 0; fold < folds; ++fold) {
      std::vector<SparseVector> train_x, test_x;
      std::vector<int> train_y, test_y;
      for (std::size_t i = 0; i < X.size(); ++i) {
        if (fold_of[i] == fold) {
          test_x.push_back(X[i]);
          test_y.push_back(y[i]);
        } else {
          train_x.push_back(X[i]);
          train_y.push_back(y[i]);
        }
      }
      TreeModel model = train_decision_tree(train_x, train_y, cfg);
      std::vector<int> predicted;
      predicted.reserve(test_x.size());
      for (const auto& x : test_x) predicted.push_back(predict_tree(model, x).label);
      EvaluationReport report = evaluate(confusion(test_y, predicted));
      macro_sum += report.macro.f1;
    }
    result.candidates.push_back(TuneCandidate{cfg, macro_sum / folds});
  }
  for (std::size_t i = 1; i < result.candidates.size(); ++i) {
    if (result.candidates[i].macro_f1 > result.candidates[result.best_index].macro_f1) {
      result.best_index = i;
    }
  }
  return result;
}

// -- Common plumbing -----------------------------------------------------------------

const char* classifier_name(const ClassifierSpec& spec) {
  if (std::holds_alternative<MnbSpec>(spec)) return "mnb";
  if (std::holds_alternative<SvmSpec>(spec)) return "svm";
  return "tree";
}

ClassifierSpec classifier_spec_from_name(const std::string& name) {
  if (name == "mnb") return MnbSpec{};
  if (name == "svm") return SvmSpec{};
  if (name == "tree") return TreeSpec{};
  throw ConfigError("unknown classifier '" + name + "' (expected mnb|svm|tree)");
}

ClassicalModel train_classifier(const ClassifierSpec& spec,
                                const std::vector<SparseVector>& X,
                                const std::vector<int>& y) {
  if (std::holds_alternative<MnbSpec>(spec)) {
    return train_mnb(X, y, std::get<MnbSpec>(spec).alpha);
  }
  if (std::holds_alternative<SvmSpec>(spec)) {
    return train_linear_svm(X, y, std::get<SvmSpec>(spec).C);
  }
  return train_decision_tree(X, y, std::get<TreeSpec>(spec).config);
}

Prediction predict_classifier(const ClassicalModel& model, const SparseVector& x) {
  if (std::holds_alternative<MnbModel>(model)) return predict_mnb(std::get<MnbModel>(model), x);
  if (std::holds_alternative<SvmModel>(model)) return predict_svm(std::get<SvmModel>(model), x);
  return predict_tree(std::get<TreeModel>(model), x);
}

bool emits_probabilities(const ClassicalModel& model) {
  return !std::holds_alternative<SvmModel>(model);
}

// -- Serialization ---------------------------------------------------------------------

namespace {

constexpr char kMagic[4] = {'U', 'L', 'S', 'N'};

void write_container(const std::string& path, const nlohmann::ordered_json& header,
                     const std::vector<double>& payload) {
  static_assert(std::endian::native == std::endian::little,
                "model containers are little-endian");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError(path + ": cannot open file for writing");
  const std::string header_text = header.dump();
  const std::uint32_t header_len = static_cast<std::uint32_t>(header_text.size());
  out.write(kMagic, 4);
  out.write(reinterpret_cast<const char*>(&header_len), 4);
  out.write(header_text.data(), header_len);
  out.write(reinterpret_cast<const char*>(payload.data()),
            static_cast<std::streamsize>(payload.size() * sizeof(double)));
}

std::pair<nlohmann::json, std::vector<double>> read_container(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(path + ": cannot open file");
  char magic[4];
  std::uint32_t header_len = 0;
  in.read(magic, 4);
  in.read(reinterpret_cast<char*>(&header_len), 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0) {
    throw DataError(path + ": not a model container");
  }
  std::string header_text(header_len, '\0');
  in.read(header_text.data(), header_len);
  if (!in) throw DataError(path + ": truncated header");
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(header_text);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(path + ": invalid header JSON: " + e.what());
  }
  if (!header.contains("version") ||
      header["version"].get<int>() != kArtifactVersionMajor) {
    throw DataError(path + ": unsupported container version");
  }
  std::vector<double> payload;
  double v;
  while (in.read(reinterpret_cast<char*>(&v), sizeof(double))) payload.push_back(v);
  return {std::move(header), std::move(payload)};
}

}  // namespace

void save_classical_model(const std::string& path, const ClassicalModel& model) {
  nlohmann::ordered_json header;
  header["version"] = kArtifactVersionMajor;
  header["kind"] = "model";
  std::vector<double> payload;

  if (const auto* mnb = std::get_if<MnbModel>(&model)) {
    header["model"] = "mnb";
    header["alpha"] = mnb->alpha;
    header["classes"] = mnb->log_prior.size();
    header["dimension"] = mnb->dimension;
    payload.insert(payload.end(), mnb->log_prior.begin(), mnb->log_prior.end());
    for (const auto& row : mnb->log_likelihood) {
      payload.insert(payload.end(), row.begin(), row.end());
    }
  } else if (const auto* svm = std::get_if<SvmModel>(&model)) {
    header["model"] = "svm";
    header["C"] = svm->C;
    header["classes"] = svm->weights.size();
    header["dimension"] = svm->dimension;
    for (const auto& row : svm->weights) payload.insert(payload.end(), row.begin(), row.end());
    payload.insert(payload.end(), svm->bias.begin(), svm->bias.end());
  } else {
    const auto& tree = std::get<TreeModel>(model);
    header["model"] = "tree";
    header["classes"] = tree.n_classes;
    header["dimension"] = tree.dimension;
    header["nodes"] = tree.nodes.size();
    for (const auto& node : tree.nodes) {
      payload.push_back(node.feature);
      payload.push_back(node.threshold);
      payload.push_back(node.left);
      payload.push_back(node.right);
      for (auto c : node.histogram) payload.push_back(static_cast<double>(c));
    }
  }
  write_container(path, header, payload);
}

ClassicalModel load_classical_model(const std::string& path) {
  auto [header, payload] = read_container(path);
  const std::string model_type = header.at("model").get<std::string>();
  const int n_classes = header.at("classes").get<int>();
  const std::int32_t dim = header.at("dimension").get<std::int32_t>();
  std::size_t pos = 0;
  auto take = [&](std::size_t count) {
    if (pos + count > payload.size()) throw DataError(path + ": truncated payload");
    std::vector<double> out(payload.begin() + pos, payload.begin() + pos + count);
    pos += count;
    return out;
  };

  if (model_type == "mnb") {
    MnbModel model;
    model.alpha = header.at("alpha").get<double>();
    model.dimension = dim;
    model.log_prior = take(n_classes);
    for (int c = 0; c < n_classes; ++c) model.log_likelihood.push_back(take(dim));
    return model;
  }
  if (model_type == "svm") {
    SvmModel model;
    model.C = header.at("C").get<double>();
    model.dimension = dim;
    for (int c = 0; c < n_classes; ++c) model.weights.push_back(take(dim));
    model.bias = take(n_classes);
    return model;
  }
  if (model_type == "tree") {
    TreeModel model;
    model.dimension = dim;
    model.n_classes = n_classes;
    const std::size_t n_nodes = header.at("nodes").get<std::size_t>();
    for (std::size_t i = 0; i < n_nodes; ++i) {
      auto fields = take(4 + n_classes);
      TreeNode node;
      node.feature = static_cast<std::int32_t>(fields[0]);
      node.threshold = fields[1];
      node.left = static_cast<std::int32_t>(fields[2]);
      node.right = static_cast<std::int32_t>(fields[3]);
      for (int c = 0; c < n_classes; ++c) {
        node.histogram.push_back(static_cast<std::int64_t>(fields[4 + c]));
      }
      model.nodes.push_back(std::move(node));
    }
    return model;
  }
  throw DataError(path + ": unknown model type '" + model_type + "'");
}

}  // namespace ulasan
