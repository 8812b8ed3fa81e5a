#pragma once

#include <cstdint>
#include <vector>

#include "ulasan/errors.hpp"
#include "ulasan/features.hpp"

namespace ulasan {

struct BalancedSet {
  std::vector<SparseVector> vectors;
  std::vector<int> labels;            // class codes, parallel to vectors
  std::vector<bool> synthetic_flags;  // true for interpolated samples
  WarningLog warnings;
};

// Minority-class oversampling in feature space. Each minority class is
// upsampled to the majority count; a synthetic sample is x_i + u*(x_nn - x_i)
// with u ~ Uniform(0,1) and x_nn one of the k nearest same-class neighbours
// of x_i (Euclidean distance, ties by lower sample index). Originals are
// preserved bit-identical and come first in the output; synthetics follow,
// grouped by ascending class code in generation order (round-robin over the
// class members in original order). k is clamped (with a warning) when it
// exceeds class size - 1; a minority class of size 1 is an error.
BalancedSet smote_oversample(const std::vector<SparseVector>& vectors,
                             const std::vector<int>& labels, int k,
                             std::uint64_t seed);

}  // namespace ulasan
