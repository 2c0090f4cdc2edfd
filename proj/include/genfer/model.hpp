#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace genfer {

// Per-feature affine transform to zero mean, unit variance. Zero-variance
// columns keep std 1 so they map to a constant 0.
struct Standardizer {
  std::vector<double> means;
  std::vector<double> stds;

  std::vector<double> transform(const std::vector<double>& row) const;
};

// Population moments; requires at least 2 rows.
Standardizer fit_standardizer(const std::vector<std::vector<double>>& rows);

struct TrainOptions {
  double c_param = 1.0;
  double tol = 1e-4;
  int max_iter = 10000;  // epochs over the data
  std::uint64_t seed = 0;
  // The bias enters as an augmented constant feature of this value; a large
  // constant keeps the implicit bias regularization negligible.
  double bias_scale = 100.0;
};

struct TrainingMeta {
  int epochs = 0;
  double duality_gap = 0.0;
};

struct LinearModel {
  std::vector<double> weights;
  double bias = 0.0;
  Standardizer standardizer;  // identity when trained on pre-standardized data
  double c_param = 1.0;
  TrainingMeta meta;
  std::vector<std::string> schema_names;
};

// Observers for convergence diagnostics; called once per epoch when set.
using EpochHook =
    std::function<void(int epoch, double primal, double dual, double max_violation)>;

struct DualState {
  std::vector<double> alphas;
};

// Soft-margin linear SVM: min 1/2 ||w||^2 + C * sum hinge(y_i, f(x_i)),
// solved by coordinate ascent on the dual with a seeded random permutation
// per epoch; stops when the largest projected-gradient violation drops
// below tol. Rows must already be standardized (or comparably scaled).
// Throws on single-class or non-finite input. The returned model has an
// identity standardizer; callers attach the real one.
LinearModel train(const std::vector<std::vector<double>>& rows,
                  const std::vector<int>& labels, const TrainOptions& options,
                  const EpochHook& hook = nullptr,
                  DualState* dual_state = nullptr);

// sign(w . standardize(x) + b); a decision value of exactly 0 maps to +1.
int predict(const LinearModel& model, const std::vector<double>& raw);
double decision_value(const LinearModel& model, const std::vector<double>& raw);

// Model file: JSON with schema names, weights, bias, standardizer stats,
// hyperparameters and training metadata; version "1".
void save_model(const LinearModel& model, const TrainOptions& options,
                const std::string& path);
LinearModel load_model(const std::string& path, TrainOptions* options = nullptr);

}  // namespace genfer
