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

// Cluster-based randomized rounding of a feasible cluster LP solution, and a
// Monte Carlo estimator for its cost and per-pair co-clustering laws.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "ccc/cluster_lp.hpp"
#include "ccc/instance.hpp"
#include "ccc/random.hpp"

namespace ccc {

struct RoundingOptions {
  // The loop gives up after ceil(C * |supp(z)| * ln(max(n, 2))) draws.
  double iteration_constant = 40.0;
};

inline std::int64_t RoundingIterationCap(int n, std::size_t support,
                                         const RoundingOptions& options = {}) {
  return static_cast<std::int64_t>(
      std::ceil(options.iteration_constant * static_cast<double>(support) *
                std::log(static_cast<double>(std::max(n, 2)))));
}

// Draws support columns with probability proportional to z, by inverting the
// cumulative weights in double precision.
class ColumnSampler {
 public:
  explicit ColumnSampler(const FractionalClusterSolution& z) {
    double running = 0.0;
    for (const auto& [col, value] : z.entries) {
      columns_.push_back(col);
      running += value.get_d();
      cumulative_.push_back(running);
    }
    if (columns_.empty()) throw ContractError("rounding needs a nonempty support");
  }

  template <typename Rng>
  const ClusterColumn& Draw(Rng& rng) const {
    std::uniform_real_distribution<double> unit(0.0, cumulative_.back());
    const double r = unit(rng);
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), r);
    if (it == cumulative_.end()) --it;
    return columns_[it - cumulative_.begin()];
  }

  std::size_t size() const { return columns_.size(); }

 private:
  std::vector<ClusterColumn> columns_;
  std::vector<double> cumulative_;
};

struct RoundingTrace {
  Clustering clustering;
  // Draws consumed, including draws that emitted nothing.
  std::int64_t iterations = 0;
};

template <typename Rng>
RoundingTrace RoundWithSampler(const ChromaticInstance& inst,
                               const ColumnSampler& sampler, Rng& rng,
                               std::int64_t cap) {
  RoundingTrace trace;
  VertexSet remaining = inst.all();
  while (remaining != 0) {
    if (trace.iterations >= cap) {
      throw DiagnosticError("rounding iteration cap of " + std::to_string(cap) +
                            " reached");
    }
    ++trace.iterations;
    const ClusterColumn& col = sampler.Draw(rng);
    VertexSet cluster = remaining & col.set;
    if (cluster == 0) continue;
    trace.clustering.parts.push_back(cluster);
    trace.clustering.colors.push_back(col.color);
    remaining &= ~col.set;
  }
  return trace;
}

inline RoundingTrace RoundOnceTraced(const ChromaticInstance& inst,
                                     const FractionalClusterSolution& z,
                                     std::uint64_t seed,
                                     const RoundingOptions& options = {}) {
  if (!IsFeasible(inst, z)) throw ContractError("rounding needs a feasible z");
  ColumnSampler sampler(z);
  Rng rng(seed);
  return RoundWithSampler(inst, sampler, rng,
                          RoundingIterationCap(inst.n(), sampler.size(), options));
}

inline Clustering RoundOnce(const ChromaticInstance& inst,
                            const FractionalClusterSolution& z,
                            std::uint64_t seed,
                            const RoundingOptions& options = {}) {
  return RoundOnceTraced(inst, z, seed, options).clustering;
}

struct RoundingStats {
  std::int64_t trials = 0;
  double mean_cost = 0.0;
  double stderr_cost = 0.0;
  std::int64_t cost_sum = 0;
  std::int64_t cost_sum_squares = 0;
  // [color][pair]: trials where the pair did not end up in one cluster of
  // that color.
  std::vector<std::vector<std::int64_t>> not_together_colored_counts;
  // [pair]: trials where the pair ended up in one cluster.
  std::vector<std::int64_t> not_separated_counts;
  std::map<std::int64_t, std::int64_t> iteration_histogram;
  std::int64_t max_iterations = 0;
  std::int64_t iteration_cap = 0;

  double not_together_colored(Color c, std::size_t pair) const {
    return static_cast<double>(not_together_colored_counts[c][pair]) / trials;
  }
  double not_separated(std::size_t pair) const {
    return static_cast<double>(not_separated_counts[pair]) / trials;
  }

  void Merge(const RoundingStats& other) {
    trials += other.trials;
    cost_sum += other.cost_sum;
    cost_sum_squares += other.cost_sum_squares;
    for (std::size_t c = 0; c < not_together_colored_counts.size(); ++c) {
      for (std::size_t p = 0; p < not_together_colored_counts[c].size(); ++p) {
        not_together_colored_counts[c][p] += other.not_together_colored_counts[c][p];
      }
    }
    for (std::size_t p = 0; p < not_separated_counts.size(); ++p) {
      not_separated_counts[p] += other.not_separated_counts[p];
    }
    for (const auto& [it, count] : other.iteration_histogram) {
      iteration_histogram[it] += count;
    }
    max_iterations = std::max(max_iterations, other.max_iterations);
  }

  // Mean and standard error from the integer moments, so that a constant
  // cost yields exactly that mean and a zero standard error.
  void Finalize() {
    if (trials <= 0) return;
    mean_cost = static_cast<double>(cost_sum) / static_cast<double>(trials);
    if (trials < 2) {
      stderr_cost = 0.0;
      return;
    }
    const __int128 t = trials;
    const __int128 spread = t * cost_sum_squares -
                            static_cast<__int128>(cost_sum) * cost_sum;
    const double variance = static_cast<double>(spread) /
                            (static_cast<double>(trials) * (trials - 1));
    stderr_cost = std::sqrt(variance / static_cast<double>(trials));
  }
};

struct EstimateOptions {
  RoundingOptions rounding;
  // Trials are split into contiguous blocks, one per worker.
  unsigned threads = 1;
};

// Trial t draws from DeriveSeed(seed, t), so results do not depend on how
// trials are split among threads.
inline RoundingStats Estimate(const ChromaticInstance& inst,
                              const FractionalClusterSolution& z,
                              std::int64_t trials, std::uint64_t seed,
                              const EstimateOptions& options = {}) {
  if (trials < 1) throw ContractError("estimate needs at least one trial");
  if (!IsFeasible(inst, z)) throw ContractError("rounding needs a feasible z");
  const ColumnSampler sampler(z);
  const int n = inst.n();
  const std::size_t pairs = PairCount(n);
  const std::int64_t cap =
      RoundingIterationCap(n, sampler.size(), options.rounding);

  auto empty_stats = [&] {
    RoundingStats s;
    s.not_together_colored_counts.assign(inst.num_colors(),
                                         std::vector<std::int64_t>(pairs, 0));
    s.not_separated_counts.assign(pairs, 0);
    s.iteration_cap = cap;
    return s;
  };

  auto run_block = [&](std::int64_t begin, std::int64_t end, RoundingStats& s) {
    std::vector<int> cluster_of(n);
    for (std::int64_t t = begin; t < end; ++t) {
      Rng rng(DeriveSeed(seed, static_cast<std::uint64_t>(t)));
      RoundingTrace trace = RoundWithSampler(inst, sampler, rng, cap);
      const Clustering& sol = trace.clustering;
      const std::int64_t cost = CountDisagreements(inst, sol);
      ++s.trials;
      s.cost_sum += cost;
      s.cost_sum_squares += cost * cost;
      ++s.iteration_histogram[trace.iterations];
      s.max_iterations = std::max(s.max_iterations, trace.iterations);
      for (std::size_t i = 0; i < sol.parts.size(); ++i) {
        for (Vertex v : Members(sol.parts[i])) cluster_of[v] = static_cast<int>(i);
      }
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          const std::size_t p = PairIndex(n, u, v);
          const bool together = cluster_of[u] == cluster_of[v];
          if (together) ++s.not_separated_counts[p];
          for (Color c = 0; c < inst.num_colors(); ++c) {
            if (!(together && sol.colors[cluster_of[u]] == c)) {
              ++s.not_together_colored_counts[c][p];
            }
          }
        }
      }
    }
  };

  const std::int64_t workers = std::clamp<std::int64_t>(options.threads, 1, trials);
  std::vector<RoundingStats> partial(workers, empty_stats());
  if (workers == 1) {
    run_block(0, trials, partial[0]);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (std::int64_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          run_block(trials * w / workers, trials * (w + 1) / workers, partial[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  RoundingStats total = empty_stats();
  for (const RoundingStats& s : partial) total.Merge(s);
  total.Finalize();
  return total;
}

}  // namespace ccc
