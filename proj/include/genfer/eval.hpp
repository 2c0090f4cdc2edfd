#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "genfer/model.hpp"

namespace genfer {

// Positive class is Male (+1): tp = predicted male & true male.
struct ConfusionMatrix {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;
  std::int64_t tn = 0;

  std::int64_t total() const { return tp + fp + fn + tn; }
  bool operator==(const ConfusionMatrix&) const = default;
};

struct MetricsReport {
  std::optional<double> precision_male;    // tp / (tp + fp)
  std::optional<double> precision_female;  // tn / (tn + fn)
  std::optional<double> recall_male;       // tp / (tp + fn)
  std::optional<double> recall_female;     // tn / (tn + fp)
  std::optional<double> accuracy;          // (tp + tn) / total
};

// Undefined metrics (zero denominator) are reported as nullopt.
MetricsReport metrics(const ConfusionMatrix& cm);

// Index sets partitioning [0, n): sizes differ by <= 1 overall and per class.
// Each class must have at least k members.
std::vector<std::vector<std::size_t>> stratified_folds(
    const std::vector<int>& labels, int k, std::uint64_t seed);

struct ConfigFingerprint {
  std::uint64_t seed = 0;
  double c_param = 1.0;
  std::string families;
};

// Test instrumentation: observes per-fold state during cross-validation.
struct CvHooks {
  std::function<void(int fold, const Standardizer&)> on_standardizer;
};

struct EvalReport {
  std::vector<ConfusionMatrix> fold_matrices;
  ConfusionMatrix pooled;  // sum of the fold matrices
  MetricsReport pooled_metrics;
  ConfigFingerprint fingerprint;
};

// Stratified k-fold cross-validation. The standardizer is fitted on each
// training fold only; folds are independent, so they may run in parallel
// without affecting the (deterministic) result.
EvalReport cross_validate(const std::vector<std::vector<double>>& rows,
                          const std::vector<int>& labels, int k,
                          const TrainOptions& options, std::uint64_t seed,
                          const ConfigFingerprint& fingerprint,
                          bool parallel = true, const CvHooks* hooks = nullptr);

}  // namespace genfer
