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


// Command-line front end: generate networks, certify equilibria, run
// dynamics, and emit experiment tables as CSV.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncg.hpp"
#include "ncg/json_io.hpp"

namespace {

using ncg::AgentId;
using ncg::Error;
using ncg::ErrorCode;
using ncg::GameConfig;
using ncg::Network;
using ncg::Rational;

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitInput = 2;

struct GameFlags {
  std::string alpha = "1";
  int k = 1;
  std::string mode = "sum";

  GameConfig config() const {
    return ncg::make_config(ncg::parse_rational(alpha), k, ncg::parse_mode(mode));
  }
};

void add_game_flags(CLI::App* cmd, GameFlags& flags) {
  cmd->add_option("--alpha", flags.alpha, "edge price as p/q")->capture_default_str();
  cmd->add_option("--k", flags.k, "locality radius")->capture_default_str();
  cmd->add_option("--mode", flags.mode, "sum|max")->capture_default_str();
}

Network load_network(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  return ncg::io::read_network(in);
}

// Writes to `path`, or stdout when empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << text;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, sep);) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

// ---- generate ------------------------------------------------------------

struct GenerateFlags {
  std::string family;
  int n = 0;
  int d = 0;
  int l = 0;
  int k = 2;
  std::string graph;
  std::string out;
  std::string dot;
};

int cmd_generate(const GenerateFlags& f) {
  namespace fam = ncg::families;
  Network net;
  std::string note;
  const auto n = static_cast<std::size_t>(f.n);
  if (f.family == "line") net = fam::line(n);
  else if (f.family == "star") net = fam::star(n);
  else if (f.family == "clique") net = fam::clique(n);
  else if (f.family == "balanced-clique") net = fam::balanced_clique(n);
  else if (f.family == "cycle") net = fam::directed_cycle(n);
  else if (f.family == "binary-tree") net = fam::complete_binary_tree(f.d);
  else if (f.family == "h-tree") {
    auto h = fam::h_tree(f.d, f.l);
    net = h.net;
    note = "u=" + std::to_string(h.u) + " v=" + std::to_string(h.v);
  } else if (f.family == "tree-star") {
    auto g = fam::tree_star(f.d, f.l);
    net = g.net;
    note = "leaf=" + std::to_string(g.leaf) + " y=" + std::to_string(g.y) + " z=" + std::to_string(g.z);
  } else if (f.family == "gk-nontree") {
    auto g = ncg::gk_nontree(f.k);
    net = g.net;
    note = "u=" + std::to_string(g.u) + " a=" + std::to_string(g.a) + " b_k=" + std::to_string(g.b_k);
  } else if (f.family == "ds-reduction") {
    if (f.graph.empty()) throw Error(ErrorCode::kInvalidArgument, "ds-reduction needs --graph FILE");
    const Network g = load_network(f.graph);
    fam::PlainGraph plain{g.size(), {}};
    for (const auto& e : g.edges()) plain.edges.emplace_back(e.owner, e.other);
    auto r = fam::ds_reduction(plain);
    net = r.net;
    note = "hub=" + std::to_string(r.hub) + " alpha=" + ncg::format_rational(r.alpha);
  } else if (f.family == "kne-tree") {
    auto inst = fam::kne_tree_instance(f.d, f.k);
    net = inst.net;
    note = "alpha=" + ncg::format_rational(inst.cfg.alpha) + " k=" + std::to_string(inst.cfg.k);
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown family '" + f.family + "'");
  }
  emit(f.out, ncg::io::write_network(net));
  if (!f.dot.empty()) emit(f.dot, ncg::io::to_dot(net));
  if (!note.empty()) std::cerr << note << "\n";
  return kExitOk;
}

// ---- certify -------------------------------------------------------------

int cmd_certify(const std::string& file, const GameFlags& game, const std::string& concepts_text,
                const std::string& out) {
  const Network net = load_network(file);
  const GameConfig cfg = game.config();
  std::vector<ncg::Concept> concepts;
  for (const auto& c : split(concepts_text, ',')) concepts.push_back(ncg::parse_concept(c));
  if (concepts.empty()) throw Error(ErrorCode::kInvalidArgument, "no concepts given");
  const auto report = ncg::certify(net, cfg, concepts);
  for (const auto& [c, v] : report.verdicts) {
    std::cout << ncg::to_string(c) << " ";
    if (v.holds()) {
      std::cout << "HOLDS\n";
    } else {
      const auto& w = *v.violation;
      std::cout << "VIOLATED agent " << w.agent << ": " << ncg::describe(w.witness) << " (cost "
                << ncg::to_string(w.before) << " -> " << ncg::to_string(w.after) << ")\n";
    }
  }
  if (!out.empty()) emit(out, ncg::io::report_to_json(report, cfg).dump(2) + "\n");
  return report.all_hold() ? kExitOk : kExitViolated;
}

// ---- dynamics ------------------------------------------------------------

struct DynamicsFlags {
  std::string file;
  GameFlags game;
  std::string regime = "K_BG";
  std::string scheduler = "round-robin";
  std::string script;
  std::uint64_t seed = 0;
  std::size_t budget = 10000;
  std::string out;
  std::string replay;
};

ncg::Scheduler parse_scheduler(const DynamicsFlags& f) {
  if (f.scheduler == "round-robin") return ncg::Scheduler::round_robin();
  if (f.scheduler == "random") return ncg::Scheduler::random(f.seed);
  if (f.scheduler == "max-gain") return ncg::Scheduler::max_gain();
  if (f.scheduler == "script") {
    std::vector<AgentId> order;
    for (const auto& s : split(f.script, ',')) order.push_back(static_cast<AgentId>(std::stoul(s)));
    return ncg::Scheduler::scripted(std::move(order));
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown scheduler '" + f.scheduler + "'");
}

int cmd_replay(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  const auto file = ncg::io::read_trace(in);
  const bool ok = ncg::verify_trace(file.trace, file.cfg, file.regime);
  std::cout << (ok ? "VALID" : "INVALID") << " " << ncg::to_string(file.trace.outcome) << " after "
            << file.trace.steps.size() << " moves\n";
  return ok ? kExitOk : kExitViolated;
}

int cmd_dynamics(const DynamicsFlags& f) {
  if (!f.replay.empty()) return cmd_replay(f.replay);
  if (f.file.empty()) throw Error(ErrorCode::kInvalidArgument, "dynamics needs a network file or --replay");
  const Network net = load_network(f.file);
  const GameConfig cfg = f.game.config();
  const auto regime = ncg::parse_regime(f.regime);
  const auto scheduler = parse_scheduler(f);
  const auto trace = ncg::run(net, cfg, regime, scheduler, f.budget);
  std::ostringstream jsonl;
  ncg::io::write_trace(jsonl, trace, cfg, regime, ncg::to_string(scheduler));
  emit(f.out, jsonl.str());
  std::cerr << ncg::to_string(trace.outcome) << " after " << trace.steps.size() << " moves";
  if (trace.outcome == ncg::Outcome::kCycle) {
    std::cerr << " (cycle from state " << trace.cycle_start << ", period " << trace.period << ")";
  }
  std::cerr << "\n";
  return kExitOk;
}

// ---- experiments -----------------------------------------------------------

std::string ratio_cell(const Rational& r) {
  std::ostringstream s;
  s << ncg::format_rational(r) << "," << ncg::to_double(r);
  return s.str();
}

std::string experiment_poa_line() {
  std::ostringstream out;
  out << "n,alpha,social,opt,ratio,ratio_value,is_1ne\n";
  for (int n = 4; n <= 16; n += 2) {
    const auto cfg = ncg::make_config(Rational(3), 1);
    const Network net = ncg::families::line(static_cast<std::size_t>(n));
    out << n << ",3/1," << ncg::to_string(ncg::social_cost(net, cfg)) << ","
        << ncg::to_string(ncg::opt_cost(net.size(), cfg)) << "," << ratio_cell(ncg::poa_ratio(net, cfg)) << ","
        << (ncg::is_k_ne(net, cfg).holds() ? "yes" : "no") << "\n";
  }
  return out.str();
}

std::string experiment_poa_tree() {
  std::ostringstream out;
  out << "d,k,n,alpha,ratio,ratio_value,is_kne\n";
  for (int d = 3; d <= 6; ++d) {
    for (int k = 2; k <= 3; ++k) {
      const auto inst = ncg::families::kne_tree_instance(d, k);
      std::string certified = "skipped";
      if (d <= 4) certified = ncg::is_k_ne(inst.net, inst.cfg).holds() ? "yes" : "no";
      out << d << "," << k << "," << inst.net.size() << "," << ncg::format_rational(inst.cfg.alpha) << ","
          << ratio_cell(ncg::poa_ratio(inst.net, inst.cfg)) << "," << certified << "\n";
    }
  }
  return out.str();
}

std::string formula_rows() {
  namespace fm = ncg::formulas;
  std::ostringstream out;
  out << "formula,d,k,l,closed_form,oracle,match\n";
  auto row = [&](const char* name, int d, int k, int l, std::int64_t closed, std::int64_t oracle) {
    out << name << "," << d << "," << k << "," << l << "," << closed << "," << oracle << ","
        << (closed == oracle ? "yes" : "no") << "\n";
  };
  for (int d : {2, 4, 6}) {
    const int two = 1 << (d + 1);
    int three = 1;
    for (int i = 0; i < d; ++i) three *= 3;
    for (int l : {1, two, three}) {
      auto h = fm::h_dist(d, l);
      row("h_dist", d, 0, l, h.closed_form, h.oracle);
      auto t = fm::t_dist(d);
      row("t_dist", d, 0, l, t.closed_form, t.oracle);
      auto s = fm::tree_star_leaf_dist(d, l);
      row("tree_star_leaf_dist", d, 0, l, s.closed_form, s.oracle);
      auto z = fm::after_buy_uz_dist(d, l);
      row("after_buy_uz_dist", d, 0, l, z.closed_form, z.oracle);
      auto y = fm::after_buy_uy_dist(d, l);
      row("after_buy_uy_dist", d, 0, l, y.closed_form, y.oracle);
      if (l < two) continue;
      for (int k = 2; k <= std::min(3, d); ++k) {
        auto delta = fm::delta_max_decrease(d, k, l);
        row("delta_special", d, k, l, *delta.special_form, delta.oracle);
        row("delta_general", d, k, l, delta.general_form, delta.oracle);
      }
    }
  }
  return out.str();
}

std::string experiment_cycle_hunt(std::uint64_t seed) {
  std::ostringstream out;
  out << "n,k,alpha,regime,found,expanded,seeds,cycle_start,period,verified\n";
  struct Hunt {
    std::size_t n;
    int k;
    Rational alpha;
    ncg::Regime regime;
  };
  for (const Hunt& h : {Hunt{6, 2, Rational(5, 2), ncg::Regime::kBuy}, Hunt{8, 3, Rational(7, 2), ncg::Regime::kGreedyBuy}}) {
    const auto cfg = ncg::make_config(h.alpha, h.k);
    ncg::CycleSearchOptions options;
    options.rng_seed = seed;
    const auto result = ncg::find_br_cycle(h.n, cfg, h.regime, {}, options);
    out << h.n << "," << h.k << "," << ncg::format_rational(h.alpha) << "," << ncg::to_string(h.regime) << ","
        << (result.cycle ? "yes" : "no") << "," << result.expanded << "," << result.seeds_tried << ",";
    if (result.cycle) {
      out << result.cycle->cycle_start << "," << result.cycle->period << ","
          << (ncg::verify_cycle(*result.cycle, cfg, h.regime) ? "yes" : "no") << "\n";
    } else {
      out << ",,\n";
    }
  }
  return out.str();
}

std::string experiment_ball_lemmas() {
  std::ostringstream out;
  out << "network,n,alpha,k,check,d,branch,agent,passed\n";
  struct Case {
    std::string name;
    Network net;
    GameConfig cfg;
  };
  std::vector<Case> cases;
  for (int k : {2, 4, 6}) {
    cases.push_back({"star(12)", ncg::families::star(12), ncg::make_config(Rational(3, 2), k)});
    cases.push_back({"star(12)", ncg::families::star(12), ncg::make_config(Rational(3), k)});
    cases.push_back({"clique(8)", ncg::families::clique(8), ncg::make_config(Rational(1, 2), k)});
  }
  for (int d = 3; d <= 4; ++d) {
    for (int k = 2; k <= 3; ++k) {
      auto inst = ncg::families::kne_tree_instance(d, k);
      cases.push_back({"binary_tree(" + std::to_string(d) + ")", inst.net, inst.cfg});
    }
  }
  for (const auto& c : cases) {
    const auto report = ncg::check_ball_lemmas(c.net, c.cfg);
    for (const auto& check : report.checks) {
      out << c.name << "," << c.net.size() << "," << ncg::format_rational(c.cfg.alpha) << "," << c.cfg.k << ","
          << ncg::to_string(check.lemma) << "," << check.d << ",\"" << check.branch << "\","
          << (check.agent ? std::to_string(*check.agent) : "") << "," << (check.passed ? "yes" : "no") << "\n";
    }
  }
  return out.str();
}

int cmd_experiment(const std::string& name, const std::string& out, std::uint64_t seed) {
  std::string csv;
  if (name == "poa-line-scan") csv = experiment_poa_line();
  else if (name == "poa-binary-tree-scan") csv = experiment_poa_tree();
  else if (name == "formula-grid") csv = formula_rows();
  else if (name == "br-cycle-hunt") csv = experiment_cycle_hunt(seed);
  else if (name == "ball-lemma-scan") csv = experiment_ball_lemmas();
  else throw Error(ErrorCode::kInvalidArgument, "unknown experiment '" + name + "'");
  emit(out, csv);
  return kExitOk;
}

int cmd_formulas(bool check_all, const std::string& out) {
  if (!check_all) throw Error(ErrorCode::kInvalidArgument, "formulas needs --check-all");
  const std::string csv = formula_rows();
  emit(out, csv);
  // delta_general rows are reported, not required to match.
  for (const auto& line : split(csv, '\n')) {
    if (line.rfind("delta_general", 0) == 0) continue;
    if (line.size() >= 3 && line.compare(line.size() - 3, 3, ",no") == 0) return kExitViolated;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local network creation games: generation, certification, dynamics, experiments."};
  app.require_subcommand(1);

  GenerateFlags gen;
  auto* generate = app.add_subcommand("generate", "emit a network of a named family as JSON");
  generate->add_option("--family", gen.family, "line|star|clique|balanced-clique|cycle|binary-tree|h-tree|"
                                               "tree-star|gk-nontree|ds-reduction|kne-tree")
      ->required();
  generate->add_option("--n", gen.n, "agent count");
  generate->add_option("--d", gen.d, "tree depth");
  generate->add_option("--l", gen.l, "path length or star size");
  generate->add_option("--k", gen.k, "locality radius");
  generate->add_option("--graph", gen.graph, "input graph for ds-reduction (network JSON)");
  generate->add_option("--out", gen.out, "output path (default stdout)");
  generate->add_option("--dot", gen.dot, "also write a DOT rendering");

  std::string cert_file;
  GameFlags cert_game;
  std::string concepts = "NE,kNE,GE,kGE,ASE";
  std::string cert_out;
  auto* certify = app.add_subcommand("certify", "check equilibrium concepts (exit 0 all hold, 1 violated)");
  certify->add_option("file", cert_file, "network JSON")->required();
  add_game_flags(certify, cert_game);
  certify->add_option("--concepts", concepts, "comma separated subset of NE,kNE,GE,kGE,ASE")->capture_default_str();
  certify->add_option("--out", cert_out, "write the JSON report here");

  DynamicsFlags dyn;
  auto* dynamics = app.add_subcommand("dynamics", "run sequential best-response dynamics");
  dynamics->add_option("file", dyn.file, "network JSON");
  add_game_flags(dynamics, dyn.game);
  dynamics->add_option("--regime", dyn.regime, "K_SG|K_ASG|K_GBG|K_BG")->capture_default_str();
  dynamics->add_option("--scheduler", dyn.scheduler, "round-robin|random|max-gain|script")->capture_default_str();
  dynamics->add_option("--script", dyn.script, "agent order for the script scheduler, e.g. 0,2,1");
  dynamics->add_option("--seed", dyn.seed, "seed for the random scheduler")->capture_default_str();
  dynamics->add_option("--budget", dyn.budget, "maximum number of moves")->capture_default_str();
  dynamics->add_option("--out", dyn.out, "trace output (JSON lines, default stdout)");
  dynamics->add_option("--replay", dyn.replay, "re-verify a recorded trace instead of running");

  std::string experiment_name;
  std::string experiment_out;
  std::uint64_t experiment_seed = 1;
  auto* experiment = app.add_subcommand("experiment", "run a canned experiment and emit CSV");
  experiment->add_option("name", experiment_name,
                         "poa-line-scan|poa-binary-tree-scan|formula-grid|br-cycle-hunt|ball-lemma-scan")
      ->required();
  experiment->add_option("--out", experiment_out, "CSV output (default stdout)");
  experiment->add_option("--seed", experiment_seed, "seed for randomized searches")->capture_default_str();

  bool check_all = false;
  std::string formulas_out;
  auto* formulas = app.add_subcommand("formulas", "compare closed forms against BFS evaluation");
  formulas->add_flag("--check-all", check_all, "evaluate the full grid");
  formulas->add_option("--out", formulas_out, "CSV output (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*generate) return cmd_generate(gen);
    if (*certify) return cmd_certify(cert_file, cert_game, concepts, cert_out);
    if (*dynamics) return cmd_dynamics(dyn);
    if (*experiment) return cmd_experiment(experiment_name, experiment_out, experiment_seed);
    if (*formulas) return cmd_formulas(check_all, formulas_out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
