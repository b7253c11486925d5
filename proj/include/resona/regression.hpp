#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace resona {

// Row-major examples: X is n_rows x n_inputs, Y is n_rows x n_outputs.
struct DataSet {
  std::size_t n_rows = 0;
  std::size_t n_inputs = 0;
  std::size_t n_outputs = 0;
  std::vector<double> x;  // n_rows * n_inputs
  std::vector<double> y;  // n_rows * n_outputs

  double& x_at(std::size_t r, std::size_t c) { return x[r * n_inputs + c]; }
  double x_at(std::size_t r, std::size_t c) const { return x[r * n_inputs + c]; }
  double& y_at(std::size_t r, std::size_t c) { return y[r * n_outputs + c]; }
  double y_at(std::size_t r, std::size_t c) const { return y[r * n_outputs + c]; }
};

// L2-regularized least-squares weights, n_inputs x n_outputs row-major.
struct RidgeModel {
  std::size_t n_inputs = 0;
  std::size_t n_outputs = 0;
  std::vector<double> weights;
  double lambda = 0.0;

  double weight_at(std::size_t i, std::size_t o) const {
    return weights[i * n_outputs + o];
  }
};

struct SyntheticRegressionSpec {
  std::size_t n_inputs = 0;
  std::size_t n_outputs = 0;
  std::vector<double> true_weights;  // n_inputs * n_outputs row-major
  double noise_std = 0.0;
  std::size_t n_examples = 0;
  std::uint64_t seed = 0;
};

// Solve (X^T X + lambda I) W = X^T Y by factorization. No intercept column is
// added; the penalty hits every coordinate alike. With lambda = 0 a rank
// check runs first and a deficient X^T X raises SingularMatrix carrying the
// detected rank.
RidgeModel fit_ridge(const DataSet& data, double lambda);

// W^T x: the model's output for one input vector.
std::vector<double> predict(const RidgeModel& model, std::span<const double> x);

// X uniform in [-1,1] from the seeded generator, Y = X W_true + noise. The
// same seed reproduces the data bit for bit.
DataSet synth_regression(const SyntheticRegressionSpec& spec);

}  // namespace resona
