#include "resona/regression.hpp"

#include <Eigen/Dense>

#include "resona/errors.hpp"
#include "resona/rng.hpp"

namespace resona {
namespace {

using MatrixMap = Eigen::Map<
    const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;

}  // namespace

RidgeModel fit_ridge(const DataSet& data, double lambda) {
  if (data.n_rows == 0 || data.n_inputs == 0)
    throw InvalidArgument("fit_ridge: empty data set");
  if (data.x.size() != data.n_rows * data.n_inputs ||
      data.y.size() != data.n_rows * data.n_outputs)
    throw InvalidArgument("fit_ridge: matrix sizes disagree with dimensions");
  if (lambda < 0.0) throw InvalidArgument("fit_ridge: negative lambda");

  MatrixMap x(data.x.data(), static_cast<Eigen::Index>(data.n_rows),
              static_cast<Eigen::Index>(data.n_inputs));
  MatrixMap y(data.y.data(), static_cast<Eigen::Index>(data.n_rows),
              static_cast<Eigen::Index>(data.n_outputs));

  Eigen::MatrixXd gram = x.transpose() * x;
  gram.diagonal().array() += lambda;

  if (lambda == 0.0) {
    Eigen::FullPivLU<Eigen::MatrixXd> lu(gram);
    if (!lu.isInvertible()) {
      throw SingularMatrix(static_cast<int>(lu.rank()),
                           static_cast<int>(data.n_inputs));
    }
  }

  Eigen::MatrixXd w = gram.ldlt().solve(x.transpose() * y);

  RidgeModel model;
  model.n_inputs = data.n_inputs;
  model.n_outputs = data.n_outputs;
  model.lambda = lambda;
  model.weights.resize(data.n_inputs * data.n_outputs);
  for (std::size_t i = 0; i < data.n_inputs; ++i)
    for (std::size_t o = 0; o < data.n_outputs; ++o)
      model.weights[i * data.n_outputs + o] =
          w(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(o));
  return model;
}

std::vector<double> predict(const RidgeModel& model, std::span<const double> x) {
  if (x.size() != model.n_inputs)
    throw InvalidArgument("predict: input has " + std::to_string(x.size()) +
                          " features, model expects " +
                          std::to_string(model.n_inputs));
  std::vector<double> out(model.n_outputs, 0.0);
  for (std::size_t i = 0; i < model.n_inputs; ++i) {
    const double xi = x[i];
    for (std::size_t o = 0; o < model.n_outputs; ++o)
      out[o] += xi * model.weights[i * model.n_outputs + o];
  }
  return out;
}

DataSet synth_regression(const SyntheticRegressionSpec& spec) {
  if (spec.n_examples == 0)
    throw InvalidArgument("synth_regression: need at least one example");
  if (spec.n_inputs == 0) throw InvalidArgument("synth_regression: zero inputs");
  if (spec.true_weights.size() != spec.n_inputs * spec.n_outputs)
    throw InvalidArgument("synth_regression: true_weights size mismatch");
  if (spec.noise_std < 0.0)
    throw InvalidArgument("synth_regression: negative noise_std");

  Rng rng(spec.seed);
  DataSet data;
  data.n_rows = spec.n_examples;
  data.n_inputs = spec.n_inputs;
  data.n_outputs = spec.n_outputs;
  data.x.resize(data.n_rows * data.n_inputs);
  data.y.resize(data.n_rows * data.n_outputs);

  for (std::size_t r = 0; r < data.n_rows; ++r) {
    for (std::size_t c = 0; c < data.n_inputs; ++c)
      data.x_at(r, c) = rng.uniform(-1.0, 1.0);
    for (std::size_t o = 0; o < data.n_outputs; ++o) {
      double acc = 0.0;
      for (std::size_t c = 0; c < data.n_inputs; ++c)
        acc += data.x_at(r, c) * spec.true_weights[c * spec.n_outputs + o];
      if (spec.noise_std > 0.0) acc += spec.noise_std * rng.gaussian();
      data.y_at(r, o) = acc;
    }
  }
  return data;
}

}  // namespace resona
