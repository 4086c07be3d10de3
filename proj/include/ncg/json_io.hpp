// Copyright 2026 The ncg Authors
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

#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncg/dynamics.hpp"
#include "ncg/equilibrium.hpp"
#include "ncg/network.hpp"

// JSON encodings. Networks: {"n": N, "edges": [[owner, other], ...]}.
// Traces: JSON lines (header, one line per step, outcome).
namespace ncg::io {

using Json = nlohmann::json;

inline Json network_to_json(const Network& net) {
  Json edges = Json::array();
  for (const auto& e : net.edges()) edges.push_back({e.owner, e.other});
  return {{"n", net.size()}, {"edges", std::move(edges)}};
}

inline Network network_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
      throw Error(ErrorCode::kParseError, "network needs 'n' and 'edges'");
    }
    const auto& jn = j.at("n");
    if (!jn.is_number_integer() || jn.get<std::int64_t>() < 0) throw Error(ErrorCode::kParseError, "'n' must be a non-negative integer");
    const auto n = jn.get<std::size_t>();
    std::vector<OwnedEdge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
          e[0].get<std::int64_t>() < 0 || e[1].get<std::int64_t>() < 0) {
        throw Error(ErrorCode::kParseError, "edge must be [owner, other] with non-negative integers: " + e.dump());
      }
      edges.push_back({e[0].get<AgentId>(), e[1].get<AgentId>()});
    }
    return Network::from_edges(n, edges);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::kParseError, ex.what());
  }
}

inline std::string write_network(const Network& net) { return network_to_json(net).dump() + "\n"; }

inline Network read_network(std::istream& in) {
  try {
    return network_from_json(Json::parse(in));
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::kParseError, ex.what());
  }
}

inline Network read_network(const std::string& text) {
  std::istringstream in(text);
  return read_network(in);
}

// Graphviz rendering; arrows point from owner to the other endpoint.
inline std::string to_dot(const Network& net, const std::string& name = "network") {
  std::ostringstream out;
  out << "digraph " << name << " {\n  node [shape=circle];\n";
  for (AgentId u = 0; u < net.size(); ++u) out << "  " << u << ";\n";
  for (const auto& e : net.edges()) out << "  " << e.owner << " -> " << e.other << ";\n";
  out << "}\n";
  return out.str();
}

inline Json witness_to_json(const Witness& w) {
  if (const auto* s = std::get_if<Strategy>(&w)) return {{"kind", "STRATEGY"}, {"targets", s->targets}};
  const auto& m = std::get<GreedyMove>(w);
  Json targets = Json::array();
  if (m.drop) targets.push_back(*m.drop);
  if (m.add) targets.push_back(*m.add);
  return {{"kind", std::string(to_string(m.kind))}, {"targets", std::move(targets)}};
}

inline Json report_to_json(const EquilibriumReport& r, const GameConfig& cfg) {
  Json verdicts = Json::object();
  for (const auto& [c, v] : r.verdicts) {
    Json entry{{"holds", v.holds()}};
    if (v.violation) {
      Json w = witness_to_json(v.violation->witness);
      w["agent"] = v.violation->agent;
      entry["witness"] = std::move(w);
      entry["cost_before"] = to_string(v.violation->before);
      entry["cost_after"] = to_string(v.violation->after);
    }
    verdicts[std::string(to_string(c))] = std::move(entry);
  }
  Json out{{"alpha", format_rational(cfg.alpha)},
           {"k", cfg.k},
           {"mode", std::string(to_string(cfg.mode))},
           {"verdicts", std::move(verdicts)}};
  if (r.beta_local) out["beta_local"] = to_string(*r.beta_local);
  if (r.beta_global) out["beta_global"] = to_string(*r.beta_global);
  return out;
}

struct TraceFile {
  GameConfig cfg;
  Regime regime = Regime::kBuy;
  std::string scheduler;
  Trace trace;
};

inline void write_trace(std::ostream& out, const Trace& trace, const GameConfig& cfg, Regime regime,
                        const std::string& scheduler) {
  out << Json{{"type", "header"},
              {"alpha", format_rational(cfg.alpha)},
              {"k", cfg.k},
              {"mode", std::string(to_string(cfg.mode))},
              {"regime", std::string(to_string(regime))},
              {"scheduler", scheduler},
              {"start", network_to_json(trace.start)}}
             .dump()
      << "\n";
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    Json line{{"type", "step"},
              {"index", i},
              {"agent", s.move.agent},
              {"before", s.move.before},
              {"after", s.move.after},
              {"hash", s.hash.hex()}};
    if (s.move.released) line["released"] = *s.move.released;
    out << line.dump() << "\n";
  }
  Json tail{{"type", "outcome"}, {"outcome", std::string(to_string(trace.outcome))}, {"steps", trace.steps.size()}};
  if (trace.outcome == Outcome::kCycle) {
    tail["cycle_start"] = trace.cycle_start;
    tail["period"] = trace.period;
  }
  out << tail.dump() << "\n";
}

namespace detail {

inline Digest parse_digest(const std::string& hex) {
  if (hex.size() != 32) throw Error(ErrorCode::kParseError, "digest must be 32 hex digits");
  try {
    return {std::stoull(hex.substr(0, 16), nullptr, 16), std::stoull(hex.substr(16), nullptr, 16)};
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParseError, "bad digest '" + hex + "'");
  }
}

inline Outcome parse_outcome(const std::string& text) {
  for (Outcome o : {Outcome::kConverged, Outcome::kCycle, Outcome::kBudgetExhausted}) {
    if (text == to_string(o)) return o;
  }
  throw Error(ErrorCode::kParseError, "unknown outcome '" + text + "'");
}

}  // namespace detail

inline TraceFile read_trace(std::istream& in) {
  TraceFile file;
  std::string line;
  bool header = false;
  bool outcome = false;
  try {
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const Json j = Json::parse(line);
      const std::string type = j.at("type").get<std::string>();
      if (type == "header") {
        file.cfg = make_config(parse_rational(j.at("alpha").get<std::string>()), j.at("k").get<int>(),
                               parse_mode(j.at("mode").get<std::string>()));
        file.regime = parse_regime(j.at("regime").get<std::string>());
        file.scheduler = j.at("scheduler").get<std::string>();
        file.trace.start = network_from_json(j.at("start"));
        header = true;
      } else if (type == "step") {
        if (!header) throw Error(ErrorCode::kParseError, "step before header");
        TraceStep s;
        s.move.agent = j.at("agent").get<AgentId>();
        s.move.before = j.at("before").get<std::vector<AgentId>>();
        s.move.after = j.at("after").get<std::vector<AgentId>>();
        if (j.contains("released")) s.move.released = j.at("released").get<AgentId>();
        s.hash = detail::parse_digest(j.at("hash").get<std::string>());
        file.trace.steps.push_back(std::move(s));
      } else if (type == "outcome") {
        file.trace.outcome = detail::parse_outcome(j.at("outcome").get<std::string>());
        if (file.trace.outcome == Outcome::kCycle) {
          file.trace.cycle_start = j.at("cycle_start").get<std::size_t>();
          file.trace.period = j.at("period").get<std::size_t>();
        }
        outcome = true;
      } else {
        throw Error(ErrorCode::kParseError, "unknown line type '" + type + "'");
      }
    }
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::kParseError, ex.what());
  }
  if (!header || !outcome) throw Error(ErrorCode::kParseError, "trace needs a header and an outcome line");
  return file;
}

}  // namespace ncg::io
