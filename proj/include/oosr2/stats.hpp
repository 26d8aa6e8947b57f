#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace oosr2 {

/// Standard normal CDF.
double norm_cdf(double x);

/// Standard normal quantile (Wichura's AS 241, double precision).
/// Requires p in (0, 1).
double norm_quantile(double p);

/// Upper-tail probability 1 - Phi(x), accurate far into the tail.
double norm_sf(double x);

/// Neumaier compensated accumulator. Sums taken in a fixed index order stay
/// reproducible to the last bit regardless of magnitude ordering.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double mean(std::span<const double> values);

/// Sample variance with the n-1 denominator. Requires at least 2 values.
double sample_variance(std::span<const double> values);

/// Sample standard deviation (n-1 denominator).
double sample_sd(std::span<const double> values);

/// Pearson correlation. Returns 0 and sets *degenerate (when provided) if
/// either column has zero variance.
double pearson(std::span<const double> a, std::span<const double> b,
               bool* degenerate = nullptr);

/// Empirical quantile with linear interpolation between order statistics
/// (h = (n-1)p). Input must be sorted ascending and non-empty.
double quantile_sorted(std::span<const double> sorted, double p);

}  // namespace oosr2
