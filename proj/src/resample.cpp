#include "oosr2/resample.hpp"

#include <cmath>
#include <numeric>

namespace oosr2 {

std::vector<int> FoldPlan::fold_sizes() const {
  std::vector<int> sizes(static_cast<std::size_t>(folds), 0);
  for (int a : assignments) ++sizes[static_cast<std::size_t>(a - 1)];
  return sizes;
}

std::vector<int> FoldPlan::members(int fold) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    if (assignments[i] == fold) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<int> FoldPlan::complement(int fold) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < assignments.size(); ++i) {
    if (assignments[i] != fold) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<int> assign_folds(int n, int K, RngStream& rng) {
  if (K < 2) throw InputError("fold count must be >= 2");
  if (K > n) throw InputError("fold count exceeds sample size");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  std::vector<int> assignment(static_cast<std::size_t>(n), 0);
  const int base = n / K;
  const int extra = n % K;  // lowest-numbered folds take the remainder
  int pos = 0;
  for (int k = 1; k <= K; ++k) {
    const int size = base + (k <= extra ? 1 : 0);
    for (int s = 0; s < size; ++s) {
      assignment[static_cast<std::size_t>(perm[static_cast<std::size_t>(pos++)])] = k;
    }
  }
  return assignment;
}

FoldPlan make_folds(int n, int K, std::uint64_t seed, int repeat_index) {
  auto rng = derive_stream(seed, Purpose::Folds, static_cast<std::uint64_t>(repeat_index),
                           (static_cast<std::uint64_t>(n) << 32) |
                               static_cast<std::uint64_t>(K));
  FoldPlan plan;
  plan.assignments = assign_folds(n, K, rng);
  plan.folds = K;
  plan.repeat_index = repeat_index;
  return plan;
}

std::vector<int> BootstrapDraw::rows() const {
  std::vector<int> out;
  out.reserve(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    for (int c = 0; c < counts[i]; ++c) out.push_back(static_cast<int>(i));
  }
  return out;
}

BootstrapDraw draw_bootstrap(int n, std::uint64_t seed, int draw_index) {
  if (n < 1) throw InputError("bootstrap needs n >= 1");
  auto rng = derive_stream(seed, Purpose::Bootstrap,
                           static_cast<std::uint64_t>(draw_index),
                           static_cast<std::uint64_t>(n));
  BootstrapDraw draw;
  draw.draw_index = draw_index;
  draw.counts.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    ++draw.counts[rng.uniform_below(static_cast<std::uint64_t>(n))];
  }
  draw.excluded.resize(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < draw.counts.size(); ++i) {
    draw.excluded[i] = (draw.counts[i] == 0);
  }
  return draw;
}

Dataset parametric_redraw(const Dataset& d, const GaussianGenerator& generator,
                          std::uint64_t seed, int draw_index) {
  if (generator.mean.size() != d.n()) {
    throw InputError("parametric generator mean length mismatch");
  }
  if (!(generator.sigma2 > 0.0)) {
    throw NumericError("parametric redraw needs a positive residual variance");
  }
  auto rng = derive_stream(seed, Purpose::ParamRedraw,
                           static_cast<std::uint64_t>(draw_index),
                           static_cast<std::uint64_t>(d.n()));
  const double sigma = std::sqrt(generator.sigma2);
  Eigen::VectorXd y_new(d.n());
  for (Eigen::Index i = 0; i < d.n(); ++i) {
    y_new[i] = generator.mean[i] + sigma * rng.normal();
  }
  return Dataset(std::move(y_new), d.x, d.outcome_name, d.feature_names);
}

}  // namespace oosr2
