#include "genfer/report.hpp"

#include <cstdio>

#include <json.hpp>

namespace genfer {

namespace {

nlohmann::ordered_json cm_to_json(const ConfusionMatrix& cm) {
  return {{"tp", cm.tp}, {"fp", cm.fp}, {"fn", cm.fn}, {"tn", cm.tn}};
}

nlohmann::ordered_json opt_to_json(const std::optional<double>& v) {
  if (!v) return nullptr;
  return *v;
}

std::string pct(const std::optional<double>& v) {
  if (!v) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f%%", *v * 100.0);
  return buf;
}

}  // namespace

std::string report_to_json(const EvalReport& report) {
  nlohmann::ordered_json j;
  j["config"] = {{"seed", report.fingerprint.seed},
                 {"c", report.fingerprint.c_param},
                 {"families", report.fingerprint.families}};
  auto folds = nlohmann::ordered_json::array();
  for (const auto& cm : report.fold_matrices) folds.push_back(cm_to_json(cm));
  j["folds"] = std::move(folds);
  j["pooled"] = cm_to_json(report.pooled);
  const MetricsReport& m = report.pooled_metrics;
  j["metrics"] = {{"precision_male", opt_to_json(m.precision_male)},
                  {"precision_female", opt_to_json(m.precision_female)},
                  {"recall_male", opt_to_json(m.recall_male)},
                  {"recall_female", opt_to_json(m.recall_female)},
                  {"accuracy", opt_to_json(m.accuracy)}};
  return j.dump(2) + "\n";
}

std::string report_to_text(const EvalReport& report) {
  const ConfusionMatrix& cm = report.pooled;
  const MetricsReport& m = report.pooled_metrics;
  char line[160];
  std::string out;

  std::snprintf(line, sizeof(line), "%-14s %12s %14s %12s\n", "",
                "true male", "true female", "precision");
  out += line;
  std::snprintf(line, sizeof(line), "%-14s %12lld %14lld %12s\n", "pred. male",
                static_cast<long long>(cm.tp), static_cast<long long>(cm.fp),
                pct(m.precision_male).c_str());
  out += line;
  std::snprintf(line, sizeof(line), "%-14s %12lld %14lld %12s\n",
                "pred. female", static_cast<long long>(cm.fn),
                static_cast<long long>(cm.tn), pct(m.precision_female).c_str());
  out += line;
  std::snprintf(line, sizeof(line), "%-14s %12s %14s\n", "recall",
                pct(m.recall_male).c_str(), pct(m.recall_female).c_str());
  out += line;
  std::snprintf(line, sizeof(line), "overall accuracy = %s\n",
                pct(m.accuracy).c_str());
  out += line;
  std::snprintf(line, sizeof(line), "families = %s, seed = %llu, C = %g\n",
                report.fingerprint.families.c_str(),
                static_cast<unsigned long long>(report.fingerprint.seed),
                report.fingerprint.c_param);
  out += line;
  return out;
}

}  // namespace genfer
