#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ulasan/features.hpp"

namespace ulasan {

// -- Multinomial Naive Bayes --------------------------------------------------

struct MnbModel {
  double alpha = 1.0;
  std::vector<double> log_prior;                // per class
  std::vector<std::vector<double>> log_likelihood;  // [class][feature]
  std::int32_t dimension = 0;
};

// Accepts real-valued non-negative feature weights as counts.
// log_likelihood(f|c) = ln((sum of f weights in c + alpha) /
//                          (sum of all weights in c + alpha*F)).
MnbModel train_mnb(const std::vector<SparseVector>& X, const std::vector<int>& y,
                   double alpha);

struct Prediction {
  int label = 0;
  std::vector<double> probabilities;  // empty when the model emits none
};

Prediction predict_mnb(const MnbModel& model, const SparseVector& x);

// -- Linear SVM (one-vs-rest) -------------------------------------------------

struct SvmModel {
  double C = 1.0;
  std::int32_t dimension = 0;
  std::vector<std::vector<double>> weights;  // [class][feature]
  std::vector<double> bias;                  // per class
};

// Per class c, minimizes 0.5*||w||^2 + C * sum_i hinge(1 - s_i*(w.x_i + b))
// with s_i = +1 for class c else -1, via SMO on the dual (bias handled by
// the equality constraint, so b is unregularized). Multiclass prediction is
// the argmax of decision values; no probabilities are emitted.
SvmModel train_linear_svm(const std::vector<SparseVector>& X,
                          const std::vector<int>& y, double C);

std::vector<double> svm_decision_values(const SvmModel& model, const SparseVector& x);
Prediction predict_svm(const SvmModel& model, const SparseVector& x);

// Stated primal objective for one binary machine; exposed for verification.
double svm_binary_objective(const std::vector<SparseVector>& X,
                            const std::vector<int>& signs,
                            const std::vector<double>& w, double b, double C);

// -- CART decision tree --------------------------------------------------------

struct TreeNode {
  std::int32_t feature = -1;           // -1 for leaves
  double threshold = 0.0;              // x[feature] <= threshold goes left
  std::int32_t left = -1, right = -1;  // child node indices
  std::vector<std::int64_t> histogram; // class counts (leaves and internals)
};

struct TreeModel {
  std::vector<TreeNode> nodes;  // node 0 is the root
  std::int32_t dimension = 0;
  std::int32_t n_classes = 0;

  std::int32_t depth() const;
  std::int64_t split_count() const;
};

struct TreeConfig {
  std::optional<std::int32_t> max_depth;  // nullopt = unlimited
  std::int32_t min_samples_leaf = 1;
  std::int32_t min_samples_split = 2;
};

double gini_impurity(const std::vector<std::int64_t>& histogram);

// Exhaustive best-split CART on Gini impurity. Thresholds are midpoints
// between distinct sorted feature values; ties broken by (lower feature
// index, lower threshold); stops on pure nodes, zero gain, or the limits in
// the config.
TreeModel train_decision_tree(const std::vector<SparseVector>& X,
                              const std::vector<int>& y,
                              const TreeConfig& config = {});

Prediction predict_tree(const TreeModel& model, const SparseVector& x);

// -- Random-search tuning --------------------------------------------------------

struct TreeSearchSpace {
  std::vector<std::optional<std::int32_t>> max_depth{8, 12, 16, 24, 32, std::nullopt};
  std::vector<std::int32_t> min_samples_leaf{1, 2, 4, 8};
  std::vector<std::int32_t> min_samples_split{2, 4, 8, 16};
};

struct TuneCandidate {
  TreeConfig config;
  double macro_f1 = 0.0;
};

struct TuneResult {
  std::vector<TuneCandidate> candidates;  // size == n_iter
  std::size_t best_index = 0;
};

// Samples n_iter configurations uniformly (with replacement) from the space,
// scores each by stratified k-fold macro F1, returns all candidates plus the
// argmax (ties -> lowest candidate index).
TuneResult tune_decision_tree(const std::vector<SparseVector>& X,
                              const std::vector<int>& y,
                              const TreeSearchSpace& space, int n_iter,
                              std::uint64_t seed, int folds = 5);

// -- Common classifier plumbing (used by the CV harness and the CLI) -----------

struct MnbSpec { double alpha = 1.0; };
struct SvmSpec { double C = 1.0; };
struct TreeSpec { TreeConfig config; };
using ClassifierSpec = std::variant<MnbSpec, SvmSpec, TreeSpec>;

const char* classifier_name(const ClassifierSpec& spec);
ClassifierSpec classifier_spec_from_name(const std::string& name);

using ClassicalModel = std::variant<MnbModel, SvmModel, TreeModel>;

ClassicalModel train_classifier(const ClassifierSpec& spec,
                                const std::vector<SparseVector>& X,
                                const std::vector<int>& y);
Prediction predict_classifier(const ClassicalModel& model, const SparseVector& x);
bool emits_probabilities(const ClassicalModel& model);

// Documented container: JSON header + little-endian 64-bit float payload.
// Round-trips preserve predictions bit-exactly.
void save_classical_model(const std::string& path, const ClassicalModel& model);
ClassicalModel load_classical_model(const std::string& path);

}  // namespace ulasan
