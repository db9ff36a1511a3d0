#pragma once

#include <string>
#include <vector>

#include "caflow/types.hpp"

namespace caflow::metrics {

/// Mean absolute error over rows with node_mask true (all columns).
double mae(const MatrixXd& x, const MatrixXd& x_hat,
           const std::vector<bool>& node_mask);

/// Mean absolute percentage error (as a fraction, 0.1 = 10%) over masked
/// rows, excluding entries with ground truth <= threshold. Throws when
/// every entry is excluded.
double mape(const MatrixXd& x, const MatrixXd& x_hat,
            const std::vector<bool>& node_mask, double threshold = 0.01,
            long long* excluded = nullptr);

double r_squared(const VectorXd& x, const VectorXd& x_hat);
double pearson(const VectorXd& a, const VectorXd& b);

/// Negative population standard deviation of a concentration map; less
/// diffuse (sharper) maps score lower.
double diffusivity(const MatrixXd& x);

double median(std::vector<double> v);
double population_std(const std::vector<double>& v);

/// One evaluated (case, branch) pair: physical parameters, error statistics
/// and the Bland-Altman quantities.
struct BranchCaseRow {
  int case_id = 0;
  int geometry_id = 0;
  int branch_id = 0;
  std::string split;
  double mae = 0.0;
  double mape = 0.0;  // fraction; NaN when all points excluded
  long long mape_excluded = 0;
  long long points = 0;
  double err_mean = 0.0;    // mean APE (fraction)
  double err_median = 0.0;  // median APE
  double err_std = 0.0;     // population std of APE
  double diffusivity = 0.0;
  double mean_overlap = 0.0;
  double mean_foreshortening = 0.0;  // rad
  double flow_rate = 0.0;            // branch mean flow, ml/s
  double mean_conc = 0.0;            // vessel-averaged ground truth
  double mean_signed_err = 0.0;      // vessel-averaged (pred - gt)
  double mean_radius = 0.0;          // mm
};

/// Branch-averaged parameters correlated against branch error statistics:
/// Pearson per (geometry, branch) group over its cases, averaged across
/// groups. Degenerate groups (constant parameter or statistic) are skipped
/// and counted.
struct CorrelationTable {
  std::vector<std::string> params;  // row labels
  std::vector<std::string> stats;   // column labels
  MatrixXd mean_corr;               // params x stats, NaN when nothing usable
  Eigen::MatrixXi n_groups;         // groups contributing per cell
  int skipped = 0;                  // degenerate (group, cell) pairs
};

CorrelationTable correlation_table(const std::vector<BranchCaseRow>& rows);

/// Group rows, average within groups, then mean/median/population-std
/// across group means. weighted_mean weights groups by row count (equals
/// the grand row mean).
struct AggregateStats {
  double mean = 0.0;
  double median = 0.0;
  double std = 0.0;
  double weighted_mean = 0.0;
  int n_groups = 0;
};

AggregateStats aggregate(const std::vector<double>& values,
                         const std::vector<long long>& group_ids);

}  // namespace caflow::metrics
