#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oosr2/errors.hpp"

namespace oosr2 {

enum class MseMethod { Cv, Boot632 };
enum class RhoMethod { NonparamBoot, ParamBoot, Jackknife };
enum class SeMethod { Delta, Bootstrap, None };
enum class CiMethod { Normal, Percentile, Bca };

/// Outcome vector plus row-aligned predictor matrix. Immutable after
/// construction and safe to share across workers.
struct Dataset {
  Eigen::VectorXd y;
  Eigen::MatrixXd x;
  std::string outcome_name = "y";
  std::vector<std::string> feature_names;  // empty or exactly p labels

  Dataset(Eigen::VectorXd y_in, Eigen::MatrixXd x_in,
          std::string outcome_label = "y",
          std::vector<std::string> feature_labels = {});

  Eigen::Index n() const { return y.size(); }
  Eigen::Index p() const { return x.cols(); }

  /// Row-gathered copy; duplicate and reordered indices are allowed.
  Dataset subset(std::span<const int> rows) const;

  /// Copy with the outcome row i removed (jackknife deletion).
  Dataset without_row(int i) const;
};

/// Estimation settings shared by the inference pipeline.
struct RunConfig {
  std::uint64_t seed = 1;
  MseMethod mse_method = MseMethod::Cv;
  int cv_folds = 10;    // K
  int cv_repeats = 100; // R
  int n_boot_mse = 100; // B, inner bootstraps for .632
  RhoMethod rho_method = RhoMethod::Jackknife;
  int n_boot_rho = 50;  // outer bootstrap replicates
  SeMethod se_method = SeMethod::Delta;
  CiMethod ci_method = CiMethod::Normal;
  double alpha = 0.05;

  /// Field-level checks; dataset-dependent checks happen at use sites.
  void validate() const;
};

/// Read a numeric CSV. The outcome column is selected by header name or by
/// 0-based index when the string parses as an integer; all remaining columns
/// become predictors in file order. A header row is consumed when the first
/// line contains any non-numeric cell.
Dataset load_csv(const std::filesystem::path& path, const std::string& outcome_column,
                 char delimiter = ',');

/// Write a Dataset as CSV with a header row; values use 17 significant
/// digits so load_csv(write_csv(d)) round-trips exactly.
void write_csv(const Dataset& d, const std::filesystem::path& path, char delimiter = ',');

/// Per-column affine map recorded by center_scale.
struct ColumnTransform {
  Eigen::VectorXd center;
  Eigen::VectorXd scale;               // 1.0 for unscaled / zero-variance columns
  std::vector<bool> zero_variance;     // flagged, never scaled
  bool scaled = false;

  Eigen::MatrixXd apply(const Eigen::MatrixXd& x_new) const;
};

struct CenterScaleResult {
  Dataset data;
  ColumnTransform transform;
};

/// Mean-center every predictor column; when scale_predictors is set, divide
/// non-degenerate columns by their sample standard deviation (n-1
/// denominator). The outcome is left untouched.
CenterScaleResult center_scale(const Dataset& d, bool scale_predictors);

}  // namespace oosr2
