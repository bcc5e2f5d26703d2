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

// Command-line front end. Exit codes: 0 success, 1 an inline invariant
// failed, 2 bad input or a capacity limit.

#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "ccc/ccc.hpp"

namespace {

using ccc::Json;

struct GlobalOptions {
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";
};

void Emit(const GlobalOptions& g, const std::string& payload) {
  if (g.out.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream file(g.out, std::ios::binary);
  if (!file) throw ccc::StructuralError("cannot write '" + g.out + "'");
  file << payload;
  if (!payload.empty() && payload.back() != '\n') file << '\n';
}

ccc::PreclusterParams ParseParams(const std::string& alpha, const std::string& beta,
                                  const std::string& epsilon) {
  ccc::PreclusterParams p;
  p.alpha = ccc::ParseRational(alpha);
  p.beta = ccc::ParseRational(beta);
  p.epsilon = ccc::ParseRational(epsilon);
  p.ValidateMarking();
  p.ValidateEpsilon();
  return p;
}

std::string RecordsOut(const GlobalOptions& g,
                       const std::vector<ccc::ExperimentRecord>& records) {
  if (g.format == "csv") {
    std::string out = ccc::RecordCsvHeader() + "\n";
    for (const auto& r : records) out += ccc::RecordToCsvRow(r) + "\n";
    return out;
  }
  if (g.format == "text") {
    std::ostringstream out;
    for (const auto& r : records) {
      out << r.instance_id << ": n=" << r.n;
      if (r.opt_cost) out << " opt=" << *r.opt_cost;
      if (r.lp_value) out << " lp=" << ccc::RationalToString(*r.lp_value);
      if (r.rounding_mean) out << " rounding=" << *r.rounding_mean;
      if (r.pivot_cost) out << " pivot=" << *r.pivot_cost;
      if (r.respecting_cost) out << " respecting=" << *r.respecting_cost;
      out << (r.ok() ? " ok" : " VIOLATION");
      for (const auto& v : r.violations) out << "\n  violation: " << v;
      for (const auto& s : r.skipped) out << "\n  skipped " << s;
      out << '\n';
    }
    return out.str();
  }
  Json arr = Json::array();
  for (const auto& r : records) arr.push_back(ccc::RecordToJson(r));
  return arr.dump(2);
}

struct PipelineFlags {
  bool no_exact = false;
  bool no_lp = false;
  bool no_rounding = false;
  bool no_baselines = false;
  bool no_preclustering = false;
  int exact_limit = ccc::kDefaultExactLimit;
  std::int64_t trials = 2000;
  int respecting_limit = 10;
  std::string alpha = "1/50";
  std::string beta = "1/50";
  std::string epsilon = "1/10";
  unsigned threads = 1;

  void Register(CLI::App* app) {
    app->add_flag("--no-exact", no_exact, "Skip the exact optimum");
    app->add_flag("--no-lp", no_lp, "Skip the cluster LP");
    app->add_flag("--no-rounding", no_rounding, "Skip rounding");
    app->add_flag("--no-baselines", no_baselines, "Skip baselines");
    app->add_flag("--no-preclustering", no_preclustering, "Skip preclustering");
    app->add_option("--exact-limit", exact_limit, "Largest n for the exact stage");
    app->add_option("--trials", trials, "Rounding trials")->check(CLI::PositiveNumber);
    app->add_option("--respecting-limit", respecting_limit,
                    "Largest precluster count for the respecting search");
    app->add_option("--alpha", alpha, "Marking alpha");
    app->add_option("--beta", beta, "Marking beta");
    app->add_option("--epsilon", epsilon, "Admissibility epsilon");
    app->add_option("--threads", threads, "Rounding worker threads");
  }

  ccc::PipelineConfig Config(std::uint64_t seed) const {
    ccc::PipelineConfig c;
    c.seed = seed;
    c.run_exact = !no_exact;
    c.run_lp = !no_lp;
    c.run_rounding = !no_rounding;
    c.run_baselines = !no_baselines;
    c.run_preclustering = !no_preclustering;
    c.exact_limit = exact_limit;
    c.trials = trials;
    c.respecting_limit = respecting_limit;
    c.params = ParseParams(alpha, beta, epsilon);
    c.threads = threads;
    return c;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chromatic correlation clustering: cluster LP, rounding, preclustering"};
  app.require_subcommand(1);
  GlobalOptions g;
  app.add_option("--seed", g.seed, "Root 64-bit seed")->capture_default_str();
  app.add_option("--out", g.out, "Write output to this file instead of stdout");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  std::string model = "planted";
  ccc::PlantedModel planted;
  double plus_prob = 0.5;
  gen->add_option("--model", model)->check(CLI::IsMember({"planted", "uniform"}));
  gen->add_option("--n", planted.n);
  gen->add_option("--k", planted.k, "Planted cluster count");
  gen->add_option("--palette", planted.palette);
  gen->add_option("--flip", planted.flip_prob, "Sign flip probability");
  gen->add_option("--recolor", planted.recolor_prob, "+ edge recolor probability");
  gen->add_option("--plus-prob", plus_prob, "+ probability for the uniform model");

  // Commands taking one instance file.
  std::string instance_path;
  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("instance", instance_path, "Instance file (text or JSON)")
        ->required()
        ->check(CLI::ExistingFile);
  };

  auto* exact = app.add_subcommand("solve-exact", "Exact optimum by enumeration");
  add_instance(exact);
  int exact_limit = ccc::kDefaultExactLimit;
  exact->add_option("--limit", exact_limit, "Largest n accepted");

  auto* solve_lp = app.add_subcommand("solve-lp", "Solve the chromatic cluster LP");
  add_instance(solve_lp);
  std::int64_t column_cap = ccc::kDefaultColumnCap;
  solve_lp->add_option("--column-cap", column_cap);

  auto* round = app.add_subcommand("round", "Monte Carlo cluster-based rounding");
  add_instance(round);
  std::int64_t trials = 2000;
  std::string z_path;
  unsigned threads = 1;
  round->add_option("--trials", trials)->check(CLI::PositiveNumber);
  round->add_option("--z", z_path, "z solution JSON; defaults to the LP optimum")
      ->check(CLI::ExistingFile);
  round->add_option("--threads", threads);

  auto* baseline = app.add_subcommand("baseline", "Run a baseline algorithm");
  add_instance(baseline);
  std::string alg = "pivot";
  baseline->add_option("--alg", alg)->check(CLI::IsMember({"pivot", "singletons"}));

  auto* preclust = app.add_subcommand("preclust", "Build a preclustered instance");
  add_instance(preclust);
  std::string alpha = "1/50", beta = "1/50", epsilon = "1/10", init = "pivot";
  preclust->add_option("--alpha", alpha);
  preclust->add_option("--beta", beta);
  preclust->add_option("--epsilon", epsilon);
  preclust->add_option("--init", init, "Initial clustering")
      ->check(CLI::IsMember({"pivot", "exact"}));

  auto* pipeline = app.add_subcommand("pipeline", "Run every stage on instances");
  std::vector<std::string> pipeline_paths;
  pipeline->add_option("instances", pipeline_paths)->required()->check(CLI::ExistingFile);
  PipelineFlags pipeline_flags;
  pipeline_flags.Register(pipeline);

  auto* bench = app.add_subcommand("bench", "Pipeline over generated planted instances");
  int bench_count = 20;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  ccc::PlantedModel bench_model;
  bench->add_option("--count", bench_count)->check(CLI::PositiveNumber);
  bench->add_option("--workers", workers)->check(CLI::PositiveNumber);
  bench->add_option("--n", bench_model.n);
  bench->add_option("--k", bench_model.k);
  bench->add_option("--palette", bench_model.palette);
  bench->add_option("--flip", bench_model.flip_prob);
  bench->add_option("--recolor", bench_model.recolor_prob);
  PipelineFlags bench_flags;
  bench_flags.Register(bench);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      const ccc::ChromaticInstance inst =
          model == "planted"
              ? (planted.seed = g.seed, ccc::GeneratePlanted(planted))
              : ccc::GenerateUniform(planted.n, planted.palette, plus_prob, g.seed);
      Emit(g, g.format == "json" ? ccc::InstanceToJson(inst).dump(2)
                                 : ccc::InstanceToText(inst));
      return 0;
    }
    if (pipeline->parsed()) {
      const ccc::PipelineConfig config = pipeline_flags.Config(g.seed);
      std::vector<ccc::ExperimentRecord> records;
      bool ok = true;
      for (const std::string& path : pipeline_paths) {
        records.push_back(ccc::RunPipeline(ccc::LoadInstance(path), config, path));
        ok = ok && records.back().ok();
      }
      Emit(g, RecordsOut(g, records));
      return ok ? 0 : 1;
    }
    if (bench->parsed()) {
      const ccc::PipelineConfig config = bench_flags.Config(g.seed);
      bench_model.Validate();
      std::vector<ccc::ExperimentRecord> records(bench_count);
      std::vector<std::string> errors(bench_count);
      std::atomic<int> next{0};
      auto work = [&] {
        for (int i = next++; i < bench_count; i = next++) {
          ccc::PlantedModel m = bench_model;
          m.seed = ccc::DeriveSeed(g.seed, static_cast<std::uint64_t>(i));
          ccc::PipelineConfig c = config;
          c.seed = m.seed;
          try {
            records[i] = ccc::RunPipeline(ccc::GeneratePlanted(m), c,
                                          "planted-" + std::to_string(i));
          } catch (const std::exception& e) {
            errors[i] = e.what();
          }
        }
      };
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < std::min<unsigned>(workers, bench_count); ++w) {
        pool.emplace_back(work);
      }
      for (auto& t : pool) t.join();
      for (int i = 0; i < bench_count; ++i) {
        if (!errors[i].empty()) {
          std::cerr << "instance " << i << ": " << errors[i] << '\n';
          return 2;
        }
      }
      bool ok = true;
      for (const auto& r : records) ok = ok && r.ok();
      Emit(g, RecordsOut(g, records));
      return ok ? 0 : 1;
    }

    const ccc::ChromaticInstance inst = ccc::LoadInstance(instance_path);

    if (exact->parsed()) {
      const ccc::OptimumReport r = ccc::SolveExact(inst, exact_limit);
      if (g.format == "json") {
        Emit(g, ccc::OptimumToJson(inst, r).dump(2));
      } else {
        Emit(g, "opt_cost " + std::to_string(r.opt_cost) + "\n" +
                    ccc::ClusteringToText(inst, r.one_optimal));
      }
      return 0;
    }
    if (solve_lp->parsed()) {
      const ccc::ClusterLpOptimum lp = ccc::SolveClusterLp(inst, column_cap);
      if (g.format == "json") {
        Emit(g, Json{{"value", ccc::RationalToString(lp.value)},
                     {"num_columns", lp.num_columns},
                     {"simplex_iterations", lp.simplex_iterations},
                     {"z", ccc::FractionalToJson(inst, lp.z)}}
                    .dump(2));
      } else {
        std::string out = "value " + ccc::RationalToString(lp.value) + "\n";
        for (const auto& [col, value] : lp.z.entries) {
          out += inst.color_name(col.color) + ",";
          for (ccc::Vertex v : ccc::Members(col.set)) out += std::to_string(v) + " ";
          out.back() = ',';
          out += ccc::RationalToString(value) + "\n";
        }
        Emit(g, out);
      }
      return 0;
    }
    if (round->parsed()) {
      ccc::FractionalClusterSolution z;
      if (z_path.empty()) {
        z = ccc::SolveClusterLp(inst).z;
      } else {
        // Accept a bare entry array or the object written by solve-lp.
        const Json doc = Json::parse(ccc::ReadFile(z_path));
        z = ccc::FractionalFromJson(inst, doc.is_object() && doc.contains("z") ? doc["z"] : doc);
      }
      ccc::EstimateOptions opts;
      opts.threads = threads;
      const ccc::RoundingStats s = ccc::Estimate(inst, z, trials, g.seed, opts);
      Emit(g, g.format == "json" ? ccc::StatsToJson(inst, s).dump(2)
                                 : ccc::StatsToCsv(inst, s));
      return 0;
    }
    if (baseline->parsed()) {
      const ccc::Clustering sol =
          alg == "pivot" ? ccc::ChromaticPivot(inst, g.seed) : ccc::Singletons(inst);
      const std::int64_t cost = ccc::CountDisagreements(inst, sol);
      if (g.format == "json") {
        Emit(g, Json{{"cost", cost}, {"clustering", ccc::ClusteringToJson(inst, sol)}}
                    .dump(2));
      } else {
        Emit(g, "cost " + std::to_string(cost) + "\n" + ccc::ClusteringToText(inst, sol));
      }
      return 0;
    }
    if (preclust->parsed()) {
      const ccc::PreclusterParams params = ParseParams(alpha, beta, epsilon);
      const ccc::Clustering start = init == "pivot"
                                        ? ccc::ChromaticPivot(inst, g.seed)
                                        : ccc::SolveExact(inst).one_optimal;
      const ccc::Preclustering pre = ccc::BuildPreclusters(inst, start, params);
      const ccc::AdmissibilityReport adm =
          ccc::BuildAdmissible(inst, pre.preclusters, params);
      const ccc::PreclusterBoundReport bounds =
          ccc::VerifyPreclusterBounds(inst, pre.preclusters, pre.precolor, params);
      Json out = ccc::PreclusteredToJson(inst, ccc::Assemble(pre, adm));
      out["init_cost"] = ccc::CountDisagreements(inst, start);
      out["precluster_cost"] = ccc::CountDisagreements(inst, ccc::AsClustering(pre));
      out["report"] = ccc::AdmissibilityToJson(adm);
      out["bounds_pass"] = bounds.pass;
      Emit(g, out.dump(2));
      return bounds.pass ? 0 : 1;
    }
  } catch (const ccc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
