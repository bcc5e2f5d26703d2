// Copyright 2026 The ccc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end experiment on one instance: exact optimum, cluster LP, rounding,
// baselines and preclustering, with every cross-stage invariant checked.

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ccc/baselines.hpp"
#include "ccc/cluster_lp.hpp"
#include "ccc/exact.hpp"
#include "ccc/io.hpp"
#include "ccc/preclustering.hpp"
#include "ccc/random.hpp"
#include "ccc/rounding.hpp"

namespace ccc {

struct PipelineConfig {
  std::uint64_t seed = 1;
  bool run_exact = true;
  bool run_lp = true;
  bool run_rounding = true;
  bool run_baselines = true;
  bool run_preclustering = true;
  int exact_limit = kDefaultExactLimit;
  std::int64_t column_cap = kDefaultColumnCap;
  std::int64_t trials = 2000;
  PreclusterParams params;
  // Respecting search runs when the preclustering has at most this many parts.
  int respecting_limit = 10;
  unsigned threads = 1;
};

struct ExperimentRecord {
  std::string instance_id;
  std::uint64_t seed = 0;
  int n = 0;
  int num_colors = 0;
  std::optional<std::int64_t> opt_cost;
  std::optional<Rational> lp_value;
  std::optional<std::int64_t> lp_support;
  std::optional<std::int64_t> rounding_trials;
  std::optional<double> rounding_mean;
  std::optional<double> rounding_stderr;
  std::optional<std::int64_t> rounding_max_iterations;
  std::optional<std::int64_t> pivot_cost;
  std::optional<std::int64_t> singletons_cost;
  std::optional<std::int64_t> precluster_cost;
  std::optional<std::int64_t> num_nonsingleton_preclusters;
  std::optional<std::int64_t> num_admissible;
  std::optional<Rational> min_bound_slack;
  std::optional<std::int64_t> respecting_cost;
  double exact_ms = 0;
  double lp_ms = 0;
  double rounding_ms = 0;
  double baselines_ms = 0;
  double preclustering_ms = 0;
  // "stage: reason" for stages that did not run.
  std::vector<std::string> skipped;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }

  friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

namespace internal {

class StageTimer {
 public:
  explicit StageTimer(double& sink)
      : sink_(sink), start_(std::chrono::steady_clock::now()) {}
  ~StageTimer() {
    sink_ = std::chrono::duration<double, std::milli>(
                std::chrono::steady_clock::now() - start_)
                .count();
  }

 private:
  double& sink_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace internal

inline ExperimentRecord RunPipeline(const ChromaticInstance& inst,
                                    const PipelineConfig& config,
                                    std::string instance_id = "instance") {
  ExperimentRecord rec;
  rec.instance_id = std::move(instance_id);
  rec.seed = config.seed;
  rec.n = inst.n();
  rec.num_colors = inst.num_colors();
  auto violate = [&](const std::string& what) { rec.violations.push_back(what); };
  auto skip = [&](const std::string& stage, const std::string& why) {
    rec.skipped.push_back(stage + ": " + why);
  };

  if (config.run_exact) {
    internal::StageTimer timer(rec.exact_ms);
    try {
      rec.opt_cost = SolveExact(inst, config.exact_limit).opt_cost;
    } catch (const CapacityError& e) {
      skip("exact", e.what());
    }
  }

  std::optional<ClusterLpOptimum> lp;
  if (config.run_lp) {
    internal::StageTimer timer(rec.lp_ms);
    try {
      lp = SolveClusterLp(inst, config.column_cap);
      rec.lp_value = lp->value;
      rec.lp_support = static_cast<std::int64_t>(lp->z.support_size());
      if (LpObjective(inst, lp->z) != ObjX(inst, Marginals(inst, lp->z))) {
        violate("lp objective differs from obj(x)");
      }
      if (rec.opt_cost && lp->value > *rec.opt_cost) violate("lp value exceeds opt");
    } catch (const CapacityError& e) {
      skip("lp", e.what());
    }
  }

  if (config.run_rounding) {
    if (!lp) {
      skip("rounding", "needs the lp stage");
    } else {
      internal::StageTimer timer(rec.rounding_ms);
      EstimateOptions opts;
      opts.threads = config.threads;
      RoundingStats stats =
          Estimate(inst, lp->z, config.trials, DeriveSeed(config.seed, 2), opts);
      rec.rounding_trials = stats.trials;
      rec.rounding_mean = stats.mean_cost;
      rec.rounding_stderr = stats.stderr_cost;
      rec.rounding_max_iterations = stats.max_iterations;
      if (rec.opt_cost && stats.cost_sum < *rec.opt_cost * stats.trials) {
        violate("rounding mean below opt");
      }
      if (stats.mean_cost > 2 * lp->value.get_d() + 4 * stats.stderr_cost + 1e-9) {
        violate("rounding mean exceeds 2 * lp + 4 * stderr");
      }
    }
  }

  Clustering pivot;
  if (config.run_baselines || config.run_preclustering) {
    internal::StageTimer timer(rec.baselines_ms);
    pivot = ChromaticPivot(inst, DeriveSeed(config.seed, 1));
    if (config.run_baselines) {
      rec.pivot_cost = CountDisagreements(inst, pivot);
      rec.singletons_cost = CountDisagreements(inst, Singletons(inst));
      if (rec.opt_cost && (*rec.pivot_cost < *rec.opt_cost ||
                           *rec.singletons_cost < *rec.opt_cost)) {
        violate("baseline cheaper than opt");
      }
    }
  }

  if (config.run_preclustering) {
    internal::StageTimer timer(rec.preclustering_ms);
    const PreclusterParams& params = config.params;
    Preclustering pre = BuildPreclusters(inst, pivot, params);
    AdmissibilityReport adm = BuildAdmissible(inst, pre.preclusters, params);
    PreclusteredInstance full = Assemble(pre, adm);
    if (!IsValid(inst, full)) violate("invalid preclustered instance");
    rec.precluster_cost = CountDisagreements(inst, AsClustering(pre));
    rec.num_admissible = static_cast<std::int64_t>(adm.NumAdmissiblePairs());
    std::int64_t big = 0;
    for (VertexSet k : pre.preclusters) big += Size(k) >= 2 ? 1 : 0;
    rec.num_nonsingleton_preclusters = big;
    if (!VerifyPreclusterBounds(inst, pre.preclusters, pre.precolor, params).pass) {
      violate("precluster disagreement bound fails");
    }
    const Rational charge = 1 + 2 / (params.alpha * params.beta);
    if (Rational(*rec.precluster_cost) > charge * CountDisagreements(inst, pivot)) {
      violate("preclustering cost exceeds (1 + 2/(alpha beta)) * init cost");
    }
    for (const Rational& slack : adm.bound_slack) {
      if (!rec.min_bound_slack || slack < *rec.min_bound_slack) rec.min_bound_slack = slack;
    }
    if (rec.min_bound_slack && *rec.min_bound_slack < 0) {
      violate("admissible-pair bound fails for some precluster");
    }
    if (rec.opt_cost && *rec.precluster_cost < *rec.opt_cost) {
      violate("preclustering cheaper than opt");
    }
    if (static_cast<int>(pre.preclusters.size()) <= config.respecting_limit) {
      rec.respecting_cost = SolveRespectingExact(inst, full, config.respecting_limit).cost;
      if (rec.opt_cost && *rec.respecting_cost < *rec.opt_cost) {
        violate("respecting solution cheaper than opt");
      }
    } else {
      skip("respecting", "more preclusters than the search limit");
    }
  }
  return rec;
}

namespace internal {

template <typename T>
Json OptionalJson(const std::optional<T>& v) {
  return v ? Json(*v) : Json();
}

inline Json OptionalRationalJson(const std::optional<Rational>& v) {
  return v ? Json(RationalToString(*v)) : Json();
}

template <typename T>
std::optional<T> OptionalFrom(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

inline std::optional<Rational> OptionalRationalFrom(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return ParseRational(j.get<std::string>());
}

}  // namespace internal

inline Json RecordToJson(const ExperimentRecord& r) {
  using internal::OptionalJson;
  using internal::OptionalRationalJson;
  return {{"instance_id", r.instance_id},
          {"seed", r.seed},
          {"n", r.n},
          {"num_colors", r.num_colors},
          {"opt_cost", OptionalJson(r.opt_cost)},
          {"lp_value", OptionalRationalJson(r.lp_value)},
          {"lp_support", OptionalJson(r.lp_support)},
          {"rounding_trials", OptionalJson(r.rounding_trials)},
          {"rounding_mean", OptionalJson(r.rounding_mean)},
          {"rounding_stderr", OptionalJson(r.rounding_stderr)},
          {"rounding_max_iterations", OptionalJson(r.rounding_max_iterations)},
          {"pivot_cost", OptionalJson(r.pivot_cost)},
          {"singletons_cost", OptionalJson(r.singletons_cost)},
          {"precluster_cost", OptionalJson(r.precluster_cost)},
          {"num_nonsingleton_preclusters", OptionalJson(r.num_nonsingleton_preclusters)},
          {"num_admissible", OptionalJson(r.num_admissible)},
          {"min_bound_slack", OptionalRationalJson(r.min_bound_slack)},
          {"respecting_cost", OptionalJson(r.respecting_cost)},
          {"exact_ms", r.exact_ms},
          {"lp_ms", r.lp_ms},
          {"rounding_ms", r.rounding_ms},
          {"baselines_ms", r.baselines_ms},
          {"preclustering_ms", r.preclustering_ms},
          {"skipped", r.skipped},
          {"violations", r.violations}};
}

inline ExperimentRecord RecordFromJson(const Json& j) {
  using internal::OptionalFrom;
  using internal::OptionalRationalFrom;
  ExperimentRecord r;
  try {
    r.instance_id = j.at("instance_id").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.n = j.at("n").get<int>();
    r.num_colors = j.at("num_colors").get<int>();
    r.opt_cost = OptionalFrom<std::int64_t>(j.at("opt_cost"));
    r.lp_value = OptionalRationalFrom(j.at("lp_value"));
    r.lp_support = OptionalFrom<std::int64_t>(j.at("lp_support"));
    r.rounding_trials = OptionalFrom<std::int64_t>(j.at("rounding_trials"));
    r.rounding_mean = OptionalFrom<double>(j.at("rounding_mean"));
    r.rounding_stderr = OptionalFrom<double>(j.at("rounding_stderr"));
    r.rounding_max_iterations = OptionalFrom<std::int64_t>(j.at("rounding_max_iterations"));
    r.pivot_cost = OptionalFrom<std::int64_t>(j.at("pivot_cost"));
    r.singletons_cost = OptionalFrom<std::int64_t>(j.at("singletons_cost"));
    r.precluster_cost = OptionalFrom<std::int64_t>(j.at("precluster_cost"));
    r.num_nonsingleton_preclusters =
        OptionalFrom<std::int64_t>(j.at("num_nonsingleton_preclusters"));
    r.num_admissible = OptionalFrom<std::int64_t>(j.at("num_admissible"));
    r.min_bound_slack = OptionalRationalFrom(j.at("min_bound_slack"));
    r.respecting_cost = OptionalFrom<std::int64_t>(j.at("respecting_cost"));
    r.exact_ms = j.at("exact_ms").get<double>();
    r.lp_ms = j.at("lp_ms").get<double>();
    r.rounding_ms = j.at("rounding_ms").get<double>();
    r.baselines_ms = j.at("baselines_ms").get<double>();
    r.preclustering_ms = j.at("preclustering_ms").get<double>();
    r.skipped = j.at("skipped").get<std::vector<std::string>>();
    r.violations = j.at("violations").get<std::vector<std::string>>();
  } catch (const Json::exception& e) {
    throw StructuralError(std::string("malformed record JSON: ") + e.what());
  }
  return r;
}

// CSV columns, in order. Empty cells are missing values; the two list
// columns join their entries with '|'.
inline const std::vector<std::string>& RecordCsvColumns() {
  static const std::vector<std::string> columns = {
      "instance_id",     "seed",
      "n",               "num_colors",
      "opt_cost",        "lp_value",
      "lp_support",      "rounding_trials",
      "rounding_mean",   "rounding_stderr",
      "rounding_max_iterations", "pivot_cost",
      "singletons_cost", "precluster_cost",
      "num_nonsingleton_preclusters", "num_admissible",
      "min_bound_slack", "respecting_cost",
      "exact_ms",        "lp_ms",
      "rounding_ms",     "baselines_ms",
      "preclustering_ms", "skipped",
      "violations"};
  return columns;
}

namespace internal {

inline std::string CsvEscape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::vector<std::string> CsvSplit(const std::string& line) {
  std::vector<std::string> cells(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cells.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cells.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.emplace_back();
    } else {
      cells.back() += c;
    }
  }
  return cells;
}

inline std::string JoinList(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += '|';
    out += items[i];
  }
  return out;
}

inline std::vector<std::string> SplitList(const std::string& s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::string cur;
  for (char c : s) {
    if (c == '|') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace internal

inline std::string RecordCsvHeader() {
  std::string header;
  for (const std::string& c : RecordCsvColumns()) {
    if (!header.empty()) header += ',';
    header += c;
  }
  return header;
}

inline std::string RecordToCsvRow(const ExperimentRecord& r) {
  const Json j = RecordToJson(r);
  std::string row;
  bool first = true;
  for (const std::string& col : RecordCsvColumns()) {
    if (!first) row += ',';
    first = false;
    const Json& v = j.at(col);
    std::string cell;
    if (v.is_null()) {
      cell = "";
    } else if (v.is_string()) {
      cell = v.get<std::string>();
    } else if (v.is_array()) {
      cell = internal::JoinList(v.get<std::vector<std::string>>());
    } else {
      cell = v.dump();
    }
    row += internal::CsvEscape(cell);
  }
  return row;
}

inline ExperimentRecord RecordFromCsvRow(const std::string& line) {
  const std::vector<std::string> cells = internal::CsvSplit(line);
  const auto& cols = RecordCsvColumns();
  if (cells.size() != cols.size()) {
    throw StructuralError("record CSV row has " + std::to_string(cells.size()) +
                          " cells, expected " + std::to_string(cols.size()));
  }
  // Rebuild the JSON form using the JSON encoding as the type schema.
  ExperimentRecord filled;
  filled.opt_cost = filled.lp_support = filled.rounding_trials = 0;
  filled.rounding_max_iterations = filled.pivot_cost = filled.singletons_cost = 0;
  filled.precluster_cost = filled.num_nonsingleton_preclusters = 0;
  filled.num_admissible = filled.respecting_cost = 0;
  filled.rounding_mean = filled.rounding_stderr = 0.0;
  filled.lp_value = filled.min_bound_slack = Rational(0);
  const Json schema = RecordToJson(filled);
  Json j = Json::object();
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const Json& kind = schema.at(cols[i]);
    const std::string& cell = cells[i];
    try {
      if (kind.is_array()) {
        j[cols[i]] = internal::SplitList(cell);
      } else if (kind.is_string()) {
        j[cols[i]] = (cell.empty() && cols[i] != "instance_id") ? Json() : Json(cell);
      } else if (cell.empty()) {
        j[cols[i]] = Json();
      } else {
        j[cols[i]] = Json::parse(cell);
      }
    } catch (const Json::exception& e) {
      throw StructuralError("bad CSV cell for " + cols[i] + ": " + e.what());
    }
  }
  return RecordFromJson(j);
}

}  // namespace ccc
