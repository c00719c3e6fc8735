#pragma once
#include <Eigen/Dense>
#include <map>
#include <optional>
#include <vector>

namespace linkmat {

// All eigenvalues of a real symmetric matrix, ascending.
// Throws std::runtime_error with diagnostics if the iteration fails.
Eigen::VectorXd eigenvalues_symmetric(const Eigen::MatrixXd& matrix);

/// Eigenvalues of one matrix plus the derived normalized moments
/// M_k = n^{-(k/2+1)} * sum_i lambda_i^k.
struct SpectralSample {
  int n = 0;
  Eigen::VectorXd eigenvalues;  // ascending
  std::map<int, double> moments;

  static SpectralSample from_matrix(const Eigen::MatrixXd& matrix,
                                    const std::vector<int>& moment_orders);
};

double empirical_moment(const SpectralSample& sample, int k);

// Same normalization through tr(A^k); the eigensolver cross-check route.
double trace_moment(const Eigen::MatrixXd& matrix, int k);

enum class HistNormalization { SqrtN, TwoSqrtN };

struct HistogramBin {
  double center = 0;
  double density = 0;
};

// Density histogram of lambda_i / sqrt(n) (or / 2 sqrt(n)). Default range is
// [min, max] of the normalized eigenvalues; with an explicit range, only
// in-range eigenvalues enter, and density integrates to 1 over that range.
std::vector<HistogramBin> histogram(const SpectralSample& sample,
                                    HistNormalization normalization, int bins,
                                    std::optional<std::pair<double, double>> range = {});

const char* normalization_name(HistNormalization n);

}  // namespace linkmat
