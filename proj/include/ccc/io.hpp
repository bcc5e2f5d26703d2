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

// Text and JSON encodings of instances, clusterings, cluster LP solutions,
// rounding statistics and preclustered instances.
//
// Instance text format:
//   n <n>
//   colors <name> <name> ...
//   <u> <v> -            (one line per unordered pair)
//   <u> <v> + <color>
// Blank lines and lines starting with '#' are ignored. Every pair must appear
// exactly once.

#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ccc/cluster_lp.hpp"
#include "ccc/common.hpp"
#include "ccc/exact.hpp"
#include "ccc/instance.hpp"
#include "ccc/preclustering.hpp"
#include "ccc/rounding.hpp"
#include "json.hpp"

namespace ccc {

using Json = nlohmann::json;

inline std::string InstanceToText(const ChromaticInstance& inst) {
  std::ostringstream out;
  out << "n " << inst.n() << "\ncolors";
  for (const std::string& c : inst.color_names()) out << ' ' << c;
  out << '\n';
  for (Vertex u = 0; u < inst.n(); ++u) {
    for (Vertex v = u + 1; v < inst.n(); ++v) {
      const Label l = inst.label(u, v);
      out << u << ' ' << v << ' ';
      if (l == kMinus) {
        out << "-\n";
      } else {
        out << "+ " << inst.color_name(l) << '\n';
      }
    }
  }
  return out.str();
}

inline ChromaticInstance ParseInstanceText(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& what) -> StructuralError {
    return StructuralError("line " + std::to_string(line_no) + ": " + what);
  };
  auto next_line = [&](std::string& dst) {
    while (std::getline(in, dst)) {
      ++line_no;
      auto first = dst.find_first_not_of(" \t\r");
      if (first == std::string::npos || dst[first] == '#') continue;
      return true;
    }
    return false;
  };

  std::string keyword;
  int n = 0;
  if (!next_line(line)) throw StructuralError("empty instance file");
  {
    std::istringstream ls(line);
    std::string extra;
    if (!(ls >> keyword >> n) || keyword != "n" || (ls >> extra)) {
      throw fail("expected header 'n <count>'");
    }
  }
  std::vector<std::string> colors;
  if (!next_line(line)) throw fail("missing 'colors' line");
  {
    std::istringstream ls(line);
    ls >> keyword;
    if (keyword != "colors") throw fail("expected 'colors <name...>'");
    for (std::string c; ls >> c;) colors.push_back(c);
  }
  InstanceBuilder builder(n, colors);
  while (next_line(line)) {
    std::istringstream ls(line);
    long long u = 0;
    long long v = 0;
    std::string sign;
    if (!(ls >> u >> v >> sign)) throw fail("expected '<u> <v> -' or '<u> <v> + <color>'");
    if (u < 0 || v < 0 || u >= n || v >= n) throw fail("vertex out of range");
    std::string color;
    std::string extra;
    if (sign == "-") {
      if (ls >> extra) throw fail("trailing tokens after '-'");
      builder.Minus(static_cast<Vertex>(u), static_cast<Vertex>(v));
    } else if (sign == "+" || (sign.size() > 1 && sign[0] == '+')) {
      color = sign.size() > 1 ? sign.substr(1) : "";
      if (color.empty() && !(ls >> color)) throw fail("'+' needs a color");
      if (ls >> extra) throw fail("trailing tokens after color");
      auto it = std::find(colors.begin(), colors.end(), color);
      if (it == colors.end()) throw fail("unknown color '" + color + "'");
      builder.Plus(static_cast<Vertex>(u), static_cast<Vertex>(v),
                   static_cast<Color>(it - colors.begin()));
    } else {
      throw fail("edge sign must be '-' or '+'");
    }
  }
  return builder.Build();
}

// {"n": 3, "colors": ["r","b"],
//  "pairs": [{"u":0,"v":1,"sign":"+","color":"r"}, {"u":0,"v":2,"sign":"-"}, ...]}
inline Json InstanceToJson(const ChromaticInstance& inst) {
  Json pairs = Json::array();
  for (Vertex u = 0; u < inst.n(); ++u) {
    for (Vertex v = u + 1; v < inst.n(); ++v) {
      const Label l = inst.label(u, v);
      Json p = {{"u", u}, {"v", v}, {"sign", l == kMinus ? "-" : "+"}};
      if (l != kMinus) p["color"] = inst.color_name(l);
      pairs.push_back(std::move(p));
    }
  }
  return Json{{"n", inst.n()}, {"colors", inst.color_names()}, {"pairs", pairs}};
}

inline ChromaticInstance InstanceFromJson(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<std::string> colors = j.at("colors").get<std::vector<std::string>>();
    InstanceBuilder builder(n, colors);
    for (const Json& p : j.at("pairs")) {
      const int u = p.at("u").get<int>();
      const int v = p.at("v").get<int>();
      const std::string sign = p.at("sign").get<std::string>();
      if (sign == "-") {
        builder.Minus(u, v);
      } else if (sign == "+") {
        const std::string name = p.at("color").get<std::string>();
        auto it = std::find(colors.begin(), colors.end(), name);
        if (it == colors.end()) throw StructuralError("unknown color '" + name + "'");
        builder.Plus(u, v, static_cast<Color>(it - colors.begin()));
      } else {
        throw StructuralError("edge sign must be '-' or '+'");
      }
    }
    return builder.Build();
  } catch (const Json::exception& e) {
    throw StructuralError(std::string("malformed instance JSON: ") + e.what());
  }
}

// Dispatches on the first non-blank character: '{' means JSON.
inline ChromaticInstance ParseInstance(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& e) {
      throw StructuralError(std::string("malformed instance JSON: ") + e.what());
    }
    return InstanceFromJson(j);
  }
  return ParseInstanceText(text);
}

inline std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StructuralError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline ChromaticInstance LoadInstance(const std::string& path) {
  return ParseInstance(ReadFile(path));
}

// [{"color": "r", "subset": [0, 1], "value": "1/2"}, ...]
inline Json FractionalToJson(const ChromaticInstance& inst,
                             const FractionalClusterSolution& z) {
  Json out = Json::array();
  for (const auto& [col, value] : z.entries) {
    out.push_back({{"color", inst.color_name(col.color)},
                   {"subset", Members(col.set)},
                   {"value", RationalToString(value)}});
  }
  return out;
}

inline FractionalClusterSolution FractionalFromJson(const ChromaticInstance& inst,
                                                    const Json& j) {
  FractionalClusterSolution z;
  try {
    for (const Json& e : j) {
      const std::string name = e.at("color").get<std::string>();
      auto color = inst.FindColor(name);
      if (!color) throw StructuralError("unknown color '" + name + "'");
      VertexSet s = 0;
      for (int v : e.at("subset").get<std::vector<int>>()) {
        if (v < 0 || v >= inst.n()) throw StructuralError("subset vertex out of range");
        s |= Singleton(v);
      }
      Rational value = ParseRational(e.at("value").get<std::string>());
      if (s == 0) throw StructuralError("empty subset in z");
      if (!(value > 0)) throw StructuralError("z entries must be positive");
      if (!z.entries.emplace(ClusterColumn{*color, s}, value).second) {
        throw StructuralError("duplicate (color, subset) in z");
      }
    }
  } catch (const Json::exception& e) {
    throw StructuralError(std::string("malformed z JSON: ") + e.what());
  }
  return z;
}

inline Json ClusteringToJson(const ChromaticInstance& inst, const Clustering& sol) {
  Json clusters = Json::array();
  for (std::size_t i = 0; i < sol.parts.size(); ++i) {
    clusters.push_back({{"color", inst.color_name(sol.colors[i])},
                        {"vertices", Members(sol.parts[i])}});
  }
  return clusters;
}

inline Clustering ClusteringFromJson(const ChromaticInstance& inst, const Json& j) {
  Clustering sol;
  try {
    for (const Json& c : j) {
      const std::string name = c.at("color").get<std::string>();
      auto color = inst.FindColor(name);
      if (!color) throw StructuralError("unknown color '" + name + "'");
      sol.parts.push_back(MakeSet(c.at("vertices").get<std::vector<int>>()));
      sol.colors.push_back(*color);
    }
  } catch (const Json::exception& e) {
    throw StructuralError(std::string("malformed clustering JSON: ") + e.what());
  }
  RequireValid(inst, sol);
  return sol;
}

inline std::string ClusteringToText(const ChromaticInstance& inst,
                                    const Clustering& sol) {
  std::ostringstream out;
  for (std::size_t i = 0; i < sol.parts.size(); ++i) {
    out << inst.color_name(sol.colors[i]) << ':';
    for (Vertex v : Members(sol.parts[i])) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

inline Json OptimumToJson(const ChromaticInstance& inst, const OptimumReport& r) {
  Json all = Json::array();
  for (const auto& parts : r.all_optimal_partitions) {
    Json p = Json::array();
    for (VertexSet s : parts) p.push_back(Members(s));
    all.push_back(std::move(p));
  }
  return {{"opt_cost", r.opt_cost},
          {"one_optimal", ClusteringToJson(inst, r.one_optimal)},
          {"all_optimal_partitions", all},
          {"partitions_enumerated", r.partitions_enumerated}};
}

inline Json StatsToJson(const ChromaticInstance& inst, const RoundingStats& s) {
  const int n = inst.n();
  Json pairs = Json::array();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const std::size_t p = PairIndex(n, u, v);
      Json colored = Json::object();
      for (Color c = 0; c < inst.num_colors(); ++c) {
        colored[inst.color_name(c)] = s.not_together_colored(c, p);
      }
      pairs.push_back({{"u", u},
                       {"v", v},
                       {"not_separated", s.not_separated(p)},
                       {"not_together_colored", colored}});
    }
  }
  Json hist = Json::array();
  for (const auto& [it, count] : s.iteration_histogram) hist.push_back({it, count});
  return {{"trials", s.trials},
          {"mean_cost", s.mean_cost},
          {"stderr", s.stderr_cost},
          {"iteration_cap", s.iteration_cap},
          {"max_iterations", s.max_iterations},
          {"iteration_histogram", hist},
          {"pairs", pairs}};
}

// One row per (pair, color); the per-pair separation frequency repeats.
inline std::string StatsToCsv(const ChromaticInstance& inst, const RoundingStats& s) {
  std::ostringstream out;
  out << "# trials=" << s.trials << " mean_cost=" << Json(s.mean_cost).dump()
      << " stderr=" << Json(s.stderr_cost).dump() << '\n';
  out << "u,v,color,not_separated,not_together_colored\n";
  const int n = inst.n();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const std::size_t p = PairIndex(n, u, v);
      for (Color c = 0; c < inst.num_colors(); ++c) {
        out << u << ',' << v << ',' << inst.color_name(c) << ','
            << Json(s.not_separated(p)).dump() << ','
            << Json(s.not_together_colored(c, p)).dump() << '\n';
      }
    }
  }
  return out.str();
}

inline Json PreclusteredToJson(const ChromaticInstance& inst,
                               const PreclusteredInstance& pre) {
  Json parts = Json::array();
  for (std::size_t i = 0; i < pre.preclusters.size(); ++i) {
    Json k = {{"vertices", Members(pre.preclusters[i])}};
    k["color"] = pre.precolor[i] ? Json(inst.color_name(*pre.precolor[i])) : Json();
    parts.push_back(std::move(k));
  }
  Json adm = Json::array();
  for (Vertex u = 0; u < inst.n(); ++u) {
    for (Vertex v : Members(pre.admissible[u])) {
      if (u < v) adm.push_back({u, v});
    }
  }
  return {{"preclusters", parts}, {"admissible", adm}};
}

inline PreclusteredInstance PreclusteredFromJson(const ChromaticInstance& inst,
                                                 const Json& j) {
  PreclusteredInstance pre;
  pre.admissible.assign(inst.n(), 0);
  try {
    for (const Json& k : j.at("preclusters")) {
      pre.preclusters.push_back(MakeSet(k.at("vertices").get<std::vector<int>>()));
      if (k.at("color").is_null()) {
        pre.precolor.push_back(std::nullopt);
      } else {
        const std::string name = k.at("color").get<std::string>();
        auto color = inst.FindColor(name);
        if (!color) throw StructuralError("unknown color '" + name + "'");
        pre.precolor.push_back(*color);
      }
    }
    for (const Json& e : j.at("admissible")) {
      const int u = e.at(0).get<int>();
      const int v = e.at(1).get<int>();
      if (u < 0 || v < 0 || u >= inst.n() || v >= inst.n() || u == v) {
        throw StructuralError("admissible pair out of range");
      }
      pre.admissible[u] |= Singleton(v);
      pre.admissible[v] |= Singleton(u);
    }
  } catch (const Json::exception& e) {
    throw StructuralError(std::string("malformed preclustered JSON: ") + e.what());
  }
  if (!IsValid(inst, pre)) throw StructuralError("invalid preclustered instance");
  return pre;
}

inline Json AdmissibilityToJson(const AdmissibilityReport& r) {
  Json d = Json::array();
  for (const Rational& q : r.d) d.push_back(RationalToString(q));
  Json sim = Json::array();
  for (const SimilarityEntry& e : r.similarity) {
    sim.push_back({{"first", e.first},
                   {"second", e.second},
                   {"w", RationalToString(e.w)},
                   {"threshold", RationalToString(e.threshold)},
                   {"related", e.related}});
  }
  Json slack = Json::array();
  for (const Rational& q : r.bound_slack) slack.push_back(RationalToString(q));
  return {{"d", d},
          {"n1", r.n1},
          {"n2", r.n2},
          {"similarity", sim},
          {"related", r.related},
          {"num_admissible", r.NumAdmissiblePairs()},
          {"bound_slack", slack}};
}

}  // namespace ccc
