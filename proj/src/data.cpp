#include "oosr2/data.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace oosr2 {

namespace {

bool all_finite(const Eigen::Ref<const Eigen::MatrixXd>& m) {
  return m.allFinite();
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_line(const std::string& line, char delim) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : line) {
    if (c == delim) {
      cells.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  cells.push_back(trim(cur));
  return cells;
}

bool parse_double(const std::string& cell, double& out) {
  if (cell.empty()) return false;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end && std::isfinite(out);
}

bool parse_int(const std::string& s, long& out) {
  if (s.empty()) return false;
  const char* begin = s.data();
  const char* end = begin + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end;
}

}  // namespace

Dataset::Dataset(Eigen::VectorXd y_in, Eigen::MatrixXd x_in, std::string outcome_label,
                 std::vector<std::string> feature_labels)
    : y(std::move(y_in)),
      x(std::move(x_in)),
      outcome_name(std::move(outcome_label)),
      feature_names(std::move(feature_labels)) {
  if (y.size() != x.rows()) {
    throw InputError("dataset rows misaligned: len(y)=" + std::to_string(y.size()) +
                     " vs rows(x)=" + std::to_string(x.rows()));
  }
  if (y.size() < 1) throw InputError("dataset is empty");
  if (!y.allFinite() || !all_finite(x)) {
    throw InputError("dataset contains non-finite entries");
  }
  if (!feature_names.empty() &&
      static_cast<Eigen::Index>(feature_names.size()) != x.cols()) {
    throw InputError("feature_names length does not match predictor count");
  }
}

Dataset Dataset::subset(std::span<const int> rows) const {
  Eigen::VectorXd ys(static_cast<Eigen::Index>(rows.size()));
  Eigen::MatrixXd xs(static_cast<Eigen::Index>(rows.size()), x.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    ys[static_cast<Eigen::Index>(i)] = y[rows[i]];
    xs.row(static_cast<Eigen::Index>(i)) = x.row(rows[i]);
  }
  return Dataset(std::move(ys), std::move(xs), outcome_name, feature_names);
}

Dataset Dataset::without_row(int drop) const {
  std::vector<int> rows;
  rows.reserve(static_cast<std::size_t>(n()) - 1);
  for (int i = 0; i < n(); ++i) {
    if (i != drop) rows.push_back(i);
  }
  return subset(rows);
}

void RunConfig::validate() const {
  if (cv_folds < 2) throw InputError("cv_folds must be >= 2");
  if (cv_repeats < 1) throw InputError("cv_repeats must be >= 1");
  if (n_boot_mse < 1) throw InputError("n_boot_mse must be >= 1");
  if (n_boot_rho < 2) throw InputError("n_boot_rho must be >= 2");
  if (!(alpha > 0.0 && alpha < 1.0)) throw InputError("alpha must lie in (0, 1)");
  if (se_method == SeMethod::Bootstrap && rho_method == RhoMethod::Jackknife) {
    throw InputError("bootstrap SE needs bootstrap replicates; use rho npboot or pboot");
  }
  if ((ci_method == CiMethod::Percentile || ci_method == CiMethod::Bca)) {
    if (rho_method == RhoMethod::Jackknife) {
      throw InputError("percentile/BCa intervals need bootstrap replicates; use rho npboot or pboot");
    }
    if (n_boot_rho < 20) {
      throw InputError("percentile/BCa intervals need n_boot_rho >= 20");
    }
  }
}

Dataset load_csv(const std::filesystem::path& path, const std::string& outcome_column,
                 char delimiter) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path.string());

  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    rows.push_back(split_line(line, delimiter));
    line_numbers.push_back(lineno);
  }
  if (rows.empty()) throw InputError("empty file: " + path.string());

  const std::size_t n_cols = rows[0].size();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != n_cols) {
      throw InputError("line " + std::to_string(line_numbers[r]) + ": expected " +
                       std::to_string(n_cols) + " cells, found " +
                       std::to_string(rows[r].size()));
    }
  }

  // Header detection: any non-numeric cell in the first row means labels.
  bool has_header = false;
  for (const auto& cell : rows[0]) {
    double v;
    if (!parse_double(cell, v)) {
      has_header = true;
      break;
    }
  }
  std::vector<std::string> names(n_cols);
  if (has_header) {
    names = rows[0];
  } else {
    for (std::size_t c = 0; c < n_cols; ++c) names[c] = "x" + std::to_string(c + 1);
  }

  // Outcome column by name, else by 0-based index.
  std::size_t outcome_idx = n_cols;
  if (has_header) {
    for (std::size_t c = 0; c < n_cols; ++c) {
      if (names[c] == outcome_column) {
        outcome_idx = c;
        break;
      }
    }
  }
  if (outcome_idx == n_cols) {
    long idx;
    if (parse_int(outcome_column, idx) && idx >= 0 &&
        idx < static_cast<long>(n_cols)) {
      outcome_idx = static_cast<std::size_t>(idx);
    } else {
      throw InputError("outcome column '" + outcome_column + "' not found");
    }
  }
  if (!has_header) names[outcome_idx] = "y";

  const std::size_t first_data = has_header ? 1 : 0;
  const std::size_t n = rows.size() - first_data;
  if (n < 3) throw InputError("dataset too small: need at least 3 rows");
  const std::size_t p = n_cols - 1;

  Eigen::VectorXd y(static_cast<Eigen::Index>(n));
  Eigen::MatrixXd x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(p));
  std::vector<std::string> feature_names;
  feature_names.reserve(p);
  for (std::size_t c = 0; c < n_cols; ++c) {
    if (c != outcome_idx) feature_names.push_back(names[c]);
  }

  for (std::size_t r = first_data; r < rows.size(); ++r) {
    std::size_t xc = 0;
    for (std::size_t c = 0; c < n_cols; ++c) {
      double v;
      if (!parse_double(rows[r][c], v)) {
        throw InputError("line " + std::to_string(line_numbers[r]) + ", column '" +
                         names[c] + "': non-numeric value '" + rows[r][c] + "'");
      }
      const auto i = static_cast<Eigen::Index>(r - first_data);
      if (c == outcome_idx) {
        y[i] = v;
      } else {
        x(i, static_cast<Eigen::Index>(xc++)) = v;
      }
    }
  }
  return Dataset(std::move(y), std::move(x), names[outcome_idx],
                 std::move(feature_names));
}

void write_csv(const Dataset& d, const std::filesystem::path& path, char delimiter) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write file: " + path.string());
  out << d.outcome_name;
  for (Eigen::Index j = 0; j < d.p(); ++j) {
    out << delimiter
        << (d.feature_names.empty() ? "x" + std::to_string(j + 1) : d.feature_names[j]);
  }
  out << '\n';
  char buf[64];
  auto put = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out << buf;
  };
  for (Eigen::Index i = 0; i < d.n(); ++i) {
    put(d.y[i]);
    for (Eigen::Index j = 0; j < d.p(); ++j) {
      out << delimiter;
      put(d.x(i, j));
    }
    out << '\n';
  }
}

Eigen::MatrixXd ColumnTransform::apply(const Eigen::MatrixXd& x_new) const {
  if (x_new.cols() != center.size()) {
    throw InputError("transform: predictor count mismatch");
  }
  Eigen::MatrixXd out = x_new;
  out.rowwise() -= center.transpose();
  out.array().rowwise() /= scale.transpose().array();
  return out;
}

CenterScaleResult center_scale(const Dataset& d, bool scale_predictors) {
  if (d.n() < 2) throw InputError("center_scale needs n >= 2");
  const auto n = d.n();
  const auto p = d.p();
  ColumnTransform t;
  t.center = d.x.colwise().mean();
  t.scale = Eigen::VectorXd::Ones(p);
  t.zero_variance.assign(static_cast<std::size_t>(p), false);
  t.scaled = scale_predictors;

  Eigen::MatrixXd xc = d.x;
  xc.rowwise() -= t.center.transpose();
  for (Eigen::Index j = 0; j < p; ++j) {
    const double ss = xc.col(j).squaredNorm();
    if (ss == 0.0) {
      t.zero_variance[static_cast<std::size_t>(j)] = true;
      continue;
    }
    if (scale_predictors) {
      const double sd = std::sqrt(ss / static_cast<double>(n - 1));
      t.scale[j] = sd;
      xc.col(j) /= sd;
    }
  }
  return CenterScaleResult{Dataset(d.y, std::move(xc), d.outcome_name, d.feature_names),
                           t};
}

}  // namespace oosr2
