#pragma once

#include <cstdint>
#include <vector>

#include "oosr2/data.hpp"
#include "oosr2/rng.hpp"

namespace oosr2 {

/// One repeat of a K-fold split: assignments[i] in {1..K}, fold sizes
/// differing by at most 1. Pure function of (seed, repeat_index, n, K).
struct FoldPlan {
  std::vector<int> assignments;
  int folds = 0;
  int repeat_index = 0;

  std::vector<int> fold_sizes() const;
  std::vector<int> members(int fold) const;      // rows of fold k (1-based)
  std::vector<int> complement(int fold) const;   // rows outside fold k
};

/// Balanced permutation-based fold assignment. When K does not divide n the
/// extra samples go to the lowest-numbered folds.
FoldPlan make_folds(int n, int K, std::uint64_t seed, int repeat_index);

/// Same assignment rule on a caller-supplied stream (used for inner loops).
std::vector<int> assign_folds(int n, int K, RngStream& rng);

/// One bootstrap resample of n rows drawn with replacement.
struct BootstrapDraw {
  std::vector<int> counts;     // N_i, times row i was drawn; sums to n
  std::vector<bool> excluded;  // J_i = 1 iff counts[i] == 0
  int draw_index = 0;

  /// Rows expanded to a multiset in ascending-index order.
  std::vector<int> rows() const;
};

BootstrapDraw draw_bootstrap(int n, std::uint64_t seed, int draw_index);

/// One jackknife deletion; the sweep over i = 0..n-1 covers every row once.
struct JackknifeDeletion {
  int left_out_index = 0;
};

/// Gaussian generator for the parametric bootstrap: per-row conditional means
/// plus a residual variance estimate.
struct GaussianGenerator {
  Eigen::VectorXd mean;
  double sigma2 = 0.0;
};

/// Redraw the outcome as Y*_i ~ N(mean_i, sigma2) while keeping x fixed.
Dataset parametric_redraw(const Dataset& d, const GaussianGenerator& generator,
                          std::uint64_t seed, int draw_index);

}  // namespace oosr2
