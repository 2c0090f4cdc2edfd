#include "genfer/model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "genfer/rng.hpp"

namespace genfer {

std::vector<double> Standardizer::transform(const std::vector<double>& row) const {
  if (row.size() != means.size())
    throw std::invalid_argument("standardizer: row length mismatch");
  std::vector<double> out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j)
    out[j] = (row[j] - means[j]) / stds[j];
  return out;
}

Standardizer fit_standardizer(const std::vector<std::vector<double>>& rows) {
  if (rows.size() < 2)
    throw std::invalid_argument("fit_standardizer: need at least 2 rows");
  const std::size_t d = rows[0].size();
  Standardizer s;
  s.means.assign(d, 0.0);
  s.stds.assign(d, 0.0);
  const double n = static_cast<double>(rows.size());
  for (const auto& row : rows) {
    if (row.size() != d)
      throw std::invalid_argument("fit_standardizer: ragged matrix");
    for (std::size_t j = 0; j < d; ++j) s.means[j] += row[j];
  }
  for (std::size_t j = 0; j < d; ++j) s.means[j] /= n;
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < d; ++j) {
      const double dev = row[j] - s.means[j];
      s.stds[j] += dev * dev;
    }
  }
  for (std::size_t j = 0; j < d; ++j) {
    s.stds[j] = std::sqrt(s.stds[j] / n);  // population std
    if (s.stds[j] == 0.0) s.stds[j] = 1.0;
  }
  return s;
}

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Decision value in the augmented representation: w . x + w_bias * scale.
double augmented_decision(const std::vector<double>& w, double bias_scale,
                          const std::vector<double>& x) {
  double f = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) f += w[j] * x[j];
  return f + w.back() * bias_scale;
}

}  // namespace

LinearModel train(const std::vector<std::vector<double>>& rows,
                  const std::vector<int>& labels, const TrainOptions& options,
                  const EpochHook& hook, DualState* dual_state) {
  const std::size_t n = rows.size();
  if (n == 0 || labels.size() != n)
    throw std::invalid_argument("train: empty input or label count mismatch");
  const std::size_t d = rows[0].size();

  bool has_pos = false, has_neg = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != d) throw std::invalid_argument("train: ragged matrix");
    if (labels[i] != 1 && labels[i] != -1)
      throw std::invalid_argument("train: labels must be +1/-1");
    (labels[i] == 1 ? has_pos : has_neg) = true;
    for (double x : rows[i])
      if (!std::isfinite(x)) throw std::invalid_argument("train: non-finite input");
  }
  if (!has_pos || !has_neg)
    throw std::invalid_argument("train: need at least one example of each class");
  if (options.c_param <= 0 || options.tol <= 0 || options.max_iter < 1 ||
      options.bias_scale <= 0)
    throw std::invalid_argument("train: bad hyperparameters");

  const double C = options.c_param;
  const double s = options.bias_scale;

  // Augmented squared norms Q_ii = ||x_i||^2 + s^2.
  std::vector<double> qii(n);
  for (std::size_t i = 0; i < n; ++i) qii[i] = dot(rows[i], rows[i]) + s * s;

  std::vector<double> w(d + 1, 0.0);
  std::vector<double> alpha(n, 0.0);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(options.seed);

  const auto primal_objective = [&]() {
    double obj = 0.5 * dot(w, w);
    for (std::size_t i = 0; i < n; ++i) {
      const double margin = labels[i] * augmented_decision(w, s, rows[i]);
      obj += C * std::max(0.0, 1.0 - margin);
    }
    return obj;
  };
  const auto dual_objective = [&]() {
    double sum_alpha = 0.0;
    for (double a : alpha) sum_alpha += a;
    return sum_alpha - 0.5 * dot(w, w);
  };

  int epoch = 0;
  for (; epoch < options.max_iter; ++epoch) {
    rng.shuffle(order);
    double max_violation = 0.0;
    for (std::size_t idx : order) {
      const double y = labels[idx];
      const double g = y * augmented_decision(w, s, rows[idx]) - 1.0;

      double pg = g;  // projected gradient
      if (alpha[idx] <= 0.0)
        pg = std::min(g, 0.0);
      else if (alpha[idx] >= C)
        pg = std::max(g, 0.0);
      max_violation = std::max(max_violation, std::fabs(pg));
      if (pg == 0.0) continue;

      const double old = alpha[idx];
      const double next = std::min(std::max(old - g / qii[idx], 0.0), C);
      if (next == old) continue;
      const double delta = (next - old) * y;
      for (std::size_t j = 0; j < d; ++j) w[j] += delta * rows[idx][j];
      w[d] += delta * s;
      alpha[idx] = next;
    }
    if (hook) hook(epoch, primal_objective(), dual_objective(), max_violation);
    if (max_violation < options.tol) {
      ++epoch;
      break;
    }
  }

  LinearModel model;
  model.weights.assign(w.begin(), w.begin() + d);
  model.bias = w[d] * s;
  model.c_param = C;
  model.meta.epochs = epoch;
  model.meta.duality_gap = primal_objective() - dual_objective();
  model.standardizer.means.assign(d, 0.0);
  model.standardizer.stds.assign(d, 1.0);
  if (dual_state) dual_state->alphas = alpha;
  return model;
}

double decision_value(const LinearModel& model, const std::vector<double>& raw) {
  if (raw.size() != model.weights.size())
    throw std::invalid_argument("decision_value: feature length mismatch");
  return dot(model.weights, model.standardizer.transform(raw)) + model.bias;
}

int predict(const LinearModel& model, const std::vector<double>& raw) {
  return decision_value(model, raw) < 0.0 ? -1 : 1;
}

void save_model(const LinearModel& model, const TrainOptions& options,
                const std::string& path) {
  nlohmann::ordered_json j;
  j["version"] = "1";
  j["schema"] = model.schema_names;
  j["weights"] = model.weights;
  j["bias"] = model.bias;
  j["standardizer"] = {{"means", model.standardizer.means},
                       {"stds", model.standardizer.stds}};
  j["hyperparameters"] = {{"c", options.c_param},
                          {"tol", options.tol},
                          {"max_iter", options.max_iter},
                          {"seed", options.seed},
                          {"bias_scale", options.bias_scale}};
  j["training"] = {{"epochs", model.meta.epochs},
                   {"duality_gap", model.meta.duality_gap}};
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write model file: " + path);
  out << j.dump(2) << '\n';
}

LinearModel load_model(const std::string& path, TrainOptions* options) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open model file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("malformed model file " + path + ": " + e.what());
  }
  if (j.value("version", "") != "1")
    throw std::runtime_error("unsupported model version in " + path);
  LinearModel m;
  try {
    m.schema_names = j.at("schema").get<std::vector<std::string>>();
    m.weights = j.at("weights").get<std::vector<double>>();
    m.bias = j.at("bias").get<double>();
    m.standardizer.means =
        j.at("standardizer").at("means").get<std::vector<double>>();
    m.standardizer.stds =
        j.at("standardizer").at("stds").get<std::vector<double>>();
    m.c_param = j.at("hyperparameters").at("c").get<double>();
    m.meta.epochs = j.at("training").at("epochs").get<int>();
    m.meta.duality_gap = j.at("training").at("duality_gap").get<double>();
    if (options) {
      options->c_param = m.c_param;
      options->tol = j.at("hyperparameters").at("tol").get<double>();
      options->max_iter = j.at("hyperparameters").at("max_iter").get<int>();
      options->seed = j.at("hyperparameters").at("seed").get<std::uint64_t>();
      options->bias_scale =
          j.at("hyperparameters").at("bias_scale").get<double>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("malformed model file " + path + ": " + e.what());
  }
  if (m.weights.size() != m.schema_names.size() ||
      m.weights.size() != m.standardizer.means.size() ||
      m.weights.size() != m.standardizer.stds.size())
    throw std::runtime_error("inconsistent model file: " + path);
  return m;
}

}  // namespace genfer
