#include "ulasan/balance.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "ulasan/corpus.hpp"
#include "ulasan/rng.hpp"

namespace ulasan {

namespace {

// Sorted interpolation of two sparse vectors: a + u*(b - a).
SparseVector interpolate(const SparseVector& a, const SparseVector& b, double u) {
  SparseVector out;
  out.dimension = a.dimension;
  std::size_t i = 0, j = 0;
  while (i < a.indices.size() || j < b.indices.size()) {
    std::int32_t ia = i < a.indices.size() ? a.indices[i] : INT32_MAX;
    std::int32_t ib = j < b.indices.size() ? b.indices[j] : INT32_MAX;
    std::int32_t idx = std::min(ia, ib);
    double va = ia == idx ? a.values[i++] : 0.0;
    double vb = ib == idx ? b.values[j++] : 0.0;
    double v = va + u * (vb - va);
    if (v != 0.0) {
      out.indices.push_back(idx);
      out.values.push_back(v);
    }
  }
  return out;
}

double squared_distance(const SparseVector& a, const SparseVector& b) {
  return squared_norm(a) + squared_norm(b) - 2.0 * dot(a, b);
}

}  // namespace

BalancedSet smote_oversample(const std::vector<SparseVector>& vectors,
                             const std::vector<int>& labels, int k,
                             std::uint64_t seed) {
  if (vectors.size() != labels.size()) {
    throw InternalError("smote_oversample: vectors/labels size mismatch");
  }
  if (k < 1) throw ConfigError("smote_oversample: k must be >= 1");

  std::map<int, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < labels.size(); ++i) members[labels[i]].push_back(i);

  std::size_t majority = 0;
  for (const auto& [cls, idx] : members) majority = std::max(majority, idx.size());

  BalancedSet out;
  out.vectors = vectors;
  out.labels = labels;
  out.synthetic_flags.assign(vectors.size(), false);

  Rng rng = make_rng(derive_seed(seed, "smote"));
  for (const auto& [cls, idx] : members) {
    const std::size_t quota = majority - idx.size();
    if (quota == 0) continue;
    if (idx.size() < 2) {
      throw DataError("smote_oversample: class " + std::to_string(cls) +
                      " has fewer than 2 samples");
    }
    int k_eff = k;
    if (static_cast<std::size_t>(k_eff) > idx.size() - 1) {
      k_eff = static_cast<int>(idx.size()) - 1;
      out.warnings.push_back("smote: k clamped to " + std::to_string(k_eff) +
                             " for class " + std::to_string(cls));
    }

    // Exact k-NN per class member on dense distances; ties by lower index.
    const std::size_t m = idx.size();
    std::vector<std::vector<std::size_t>> neighbors(m);
    for (std::size_t a = 0; a < m; ++a) {
      std::vector<std::pair<double, std::size_t>> dists;
      dists.reserve(m - 1);
      for (std::size_t b = 0; b < m; ++b) {
        if (b == a) continue;
        dists.emplace_back(squared_distance(vectors[idx[a]], vectors[idx[b]]), b);
      }
      std::stable_sort(dists.begin(), dists.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
      });
      neighbors[a].reserve(k_eff);
      for (int t = 0; t < k_eff; ++t) neighbors[a].push_back(dists[t].second);
    }

    // Round-robin over minority members until the quota is met.
    for (std::size_t made = 0; made < quota; ++made) {
      const std::size_t a = made % m;
      const std::size_t nn =
          neighbors[a][uniform_index(rng, static_cast<std::uint64_t>(k_eff))];
      const double u = uniform_unit(rng);
      out.vectors.push_back(interpolate(vectors[idx[a]], vectors[idx[nn]], u));
      out.labels.push_back(cls);
      out.synthetic_flags.push_back(true);
    }
  }
  return out;
}

}  // namespace ulasan
