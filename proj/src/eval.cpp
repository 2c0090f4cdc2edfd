#include "genfer/eval.hpp"

#include <algorithm>
#include <stdexcept>

#include "genfer/rng.hpp"

namespace genfer {

MetricsReport metrics(const ConfusionMatrix& cm) {
  MetricsReport r;
  const auto ratio = [](std::int64_t num,
                        std::int64_t den) -> std::optional<double> {
    if (den <= 0) return std::nullopt;
    return static_cast<double>(num) / static_cast<double>(den);
  };
  r.precision_male = ratio(cm.tp, cm.tp + cm.fp);
  r.precision_female = ratio(cm.tn, cm.tn + cm.fn);
  r.recall_male = ratio(cm.tp, cm.tp + cm.fn);
  r.recall_female = ratio(cm.tn, cm.tn + cm.fp);
  r.accuracy = ratio(cm.tp + cm.tn, cm.total());
  return r;
}

std::vector<std::vector<std::size_t>> stratified_folds(
    const std::vector<int>& labels, int k, std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("stratified_folds: k must be >= 2");
  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == 1) pos.push_back(i);
    else if (labels[i] == -1) neg.push_back(i);
    else throw std::invalid_argument("stratified_folds: labels must be +1/-1");
  }
  if (pos.size() < static_cast<std::size_t>(k) ||
      neg.size() < static_cast<std::size_t>(k))
    throw std::invalid_argument(
        "stratified_folds: each class needs at least k members");

  Rng rng(seed);
  rng.shuffle(pos);
  rng.shuffle(neg);

  std::vector<std::vector<std::size_t>> folds(k);
  // Deal each class in chunks of floor(n/k); remainders go to consecutive
  // folds starting at a cursor shared between classes, so overall fold sizes
  // stay within one of each other.
  int cursor = 0;
  for (const auto* cls : {&pos, &neg}) {
    const std::size_t base = cls->size() / k;
    const int rem = static_cast<int>(cls->size() % k);
    std::size_t next = 0;
    for (int f = 0; f < k; ++f) {
      std::size_t take = base;
      const int offset = (f - cursor + 2 * k) % k;
      if (offset < rem) ++take;
      for (std::size_t t = 0; t < take; ++t)
        folds[f].push_back((*cls)[next++]);
    }
    cursor = (cursor + rem) % k;
  }
  for (auto& f : folds) std::sort(f.begin(), f.end());
  return folds;
}

EvalReport cross_validate(const std::vector<std::vector<double>>& rows,
                          const std::vector<int>& labels, int k,
                          const TrainOptions& options, std::uint64_t seed,
                          const ConfigFingerprint& fingerprint, bool parallel,
                          const CvHooks* hooks) {
  if (rows.size() != labels.size())
    throw std::invalid_argument("cross_validate: row/label count mismatch");
  const auto folds = stratified_folds(labels, k, seed);

  std::vector<ConfusionMatrix> fold_matrices(k);
  std::vector<Standardizer> fold_standardizers(k);
  std::exception_ptr error;

#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int f = 0; f < k; ++f) {
    try {
      std::vector<char> in_test(rows.size(), 0);
      for (std::size_t idx : folds[f]) in_test[idx] = 1;

      std::vector<std::vector<double>> train_rows;
      std::vector<int> train_labels;
      train_rows.reserve(rows.size() - folds[f].size());
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (in_test[i]) continue;
        train_rows.push_back(rows[i]);
        train_labels.push_back(labels[i]);
      }

      const Standardizer stz = fit_standardizer(train_rows);
      fold_standardizers[f] = stz;
      for (auto& row : train_rows) row = stz.transform(row);

      TrainOptions fold_options = options;
      fold_options.seed = mix_seed(seed, static_cast<std::uint64_t>(f));
      LinearModel model = train(train_rows, train_labels, fold_options);
      model.standardizer = stz;

      ConfusionMatrix cm;
      for (std::size_t idx : folds[f]) {
        const int pred = predict(model, rows[idx]);
        if (labels[idx] == 1)
          (pred == 1 ? cm.tp : cm.fn) += 1;
        else
          (pred == 1 ? cm.fp : cm.tn) += 1;
      }
      fold_matrices[f] = cm;
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  EvalReport report;
  report.fold_matrices = fold_matrices;
  for (int f = 0; f < k; ++f) {
    report.pooled.tp += fold_matrices[f].tp;
    report.pooled.fp += fold_matrices[f].fp;
    report.pooled.fn += fold_matrices[f].fn;
    report.pooled.tn += fold_matrices[f].tn;
    if (hooks && hooks->on_standardizer)
      hooks->on_standardizer(f, fold_standardizers[f]);
  }
  report.pooled_metrics = metrics(report.pooled);
  report.fingerprint = fingerprint;
  return report;
}

}  // namespace genfer
