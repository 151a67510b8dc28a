// Copyright 2026 The wmnroute Authors
// SPDX-License-Identifier: Apache-2.0

#include "properties.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "instances.hpp"
#include "wmnroute/bench.hpp"
#include "wmnroute/cli.hpp"
#include "wmnroute/errors.hpp"
#include "wmnroute/io.hpp"
#include "wmnroute/oracle.hpp"
#include "wmnroute/routing.hpp"
#include "wmnroute/simd/kernels.hpp"

namespace wmnroute::testing {

namespace {

class Checker {
 public:
  void begin_case(std::size_t index) {
    current_ = index;
    ++out_.cases;
    failed_current_ = false;
  }

  void expect(bool ok, const std::string& what) {
    if (ok || failed_current_) return;
    failed_current_ = true;
    ++out_.failures;
    if (out_.first_failure.empty()) {
      out_.first_failure = "case " + std::to_string(current_) + ": " + what;
    }
  }

  PropertyOutcome& outcome() { return out_; }

 private:
  PropertyOutcome out_;
  std::size_t current_ = 0;
  bool failed_current_ = false;
};

std::string describe(const RouteResult& r) {
  if (!r.is_found()) return "infeasible";
  return "rate " + format_decimal(r.rate) + " delay " + format_decimal(r.delay);
}

bool same_answer(const RouteResult& a, const RouteResult& b) {
  return a.status == b.status && (!a.is_found() || a.rate == b.rate);
}

/// Route with `algorithm`, or nullopt when MRA cannot grid the instance.
std::optional<RouteResult> try_route(Algorithm algorithm, const RandomInstance& inst,
                                     simd::Isa isa = simd::Isa::kAuto) {
  RouteOptions options;
  options.isa = isa;
  try {
    return route(algorithm, inst.graph, inst.query, options);
  } catch (const QuantizationError&) {
    return std::nullopt;
  }
}

// --- graph_core ------------------------------------------------------------

PropertyOutcome path_rate_is_bottleneck(const PropertyContext& ctx) {
  Checker c;
  for (std::size_t i = 0; i < ctx.cases; ++i) {
    c.begin_case(i);
    const auto inst = random_instance(ctx.seed, i);
    Xoshiro256 rng(derive_seed(ctx.seed ^ 0x11, i));
    const Path p = random_simple_path(inst.graph, rng, 9);
    const double rate = path_rate(p, inst.graph);
    c.expect(rate == p.rate(), "path_rate disagrees with Path::rate");
    if (p.hop_count() == 0) {
      c.expect(rate == kInfiniteRate, "empty path rate is not the sentinel");
      continue;
    }
    bool attained = false;
    for (const Link& l : p.links()) {
      c.expect(rate <= l.rate, "rate above a link rate");
      attained = attained || rate == l.rate;
    }
    c.expect(attained, "rate attained by no link");
  }
  return c.outcome();
}

PropertyOutcome concat_delay_is_additive(const PropertyContext& ctx) {
  Checker c;
  for (std::size_t i = 0; i < ctx.cases; ++i) {
    c.begin_case(i);
    const auto inst = random_instance(ctx.seed, i);
    Xoshiro256 rng(derive_seed(ctx.seed ^ 0x12, i));
    const Path full = random_simple_path(inst.graph, rng, 9);
    Path p(full.source());
    for (const Link& l : full.links()) {
      const double before = path_delay(p, inst.graph);
      p = path_concat(p, l);
      c.expect(path_delay(p, inst.graph) == before + l.delay, "delay not additive");
    }
  }
  return c.outcome();
}

PropertyOutcome concat_rate_is_min(const PropertyContext& ctx) {
  Checker c;
  for (std::size_t i = 0; i < ctx.cases; ++i) {
    c.begin_case(i);
    const auto inst = random_instance(ctx.seed, i);
    Xoshiro256 rng(derive_seed(ctx.seed ^ 0x13, i));
    const Path full = random_simple_path(inst.graph, rng, 9);
    Path p(full.source());
    for (const Link& l : full.links()) {
      const double before = path_rate(p, inst.graph);
      p = path_concat(p, l);
      c.expect(path_rate(p, inst.graph) == std::min(before, l.rate), "rate not min");
    }
  }
  return c.outcome();
}

PropertyOutcome single_node_path_sentinels(const PropertyContext& ctx) {
  Checker c;
  for (std::size_t i = 0; i < ctx.cases; ++i) {
    c.begin_case(i);
    const auto inst = random_instance(ctx.seed, i);
    const NodeId v = inst.query.source;
    const Path p(v);
    c.expect(path_rate(p, inst.graph) == kInfiniteRate, "rate not +inf");
    c.expect(path_delay(p, inst.graph) == 0.0, "delay not 0");
  }
  return c.outcome();
}

PropertyOutcome infinite_rate_never_on_link(const PropertyContext& ctx) {
  Checker c;
  for (std::size_t i = 0; i < ctx.cases; ++i) {
    c.begin_case(i);
    const auto inst = random_instance(ctx.seed, i);
    for (const Link& arc : inst.graph.arcs()) c.expect(std::isfinite(arc.rate), "infinite link");
    if (inst.graph.node_count() < 2) continue;
    std::vector<Link> links = inst.graph.physical_links();
    links.push_back(Link{node_id(0), node_id(1), kInfiniteRate, 1.0});
    bool rejected = false;
    try {
      (void)make_graph(inst.graph.node_count(), links, inst.graph.directedness());
    } catch (const InvalidGraph&) {
      rejected = true;
    }
    c.expect(rejected, "graph with an infinite-rate link accepted");
  }
  return c.outcome();
}

PropertyOutcome concat_rejects_cycles(const PropertyContext& ctx) {
  Checker c;
  for (std::size_t i = 0; i < ctx.cases; ++i) {
    c.begin_case(i);
    const auto inst = random_instance(ctx.seed, i);
    Xoshiro256 rng(derive_seed(ctx.seed ^ 0x14, i));
    const Path p = random_simple_path(inst.graph, rng, 9);
    c.expect(p.is_simple(), "builder produced a non-simple path");
    for (ArcId arc : inst.graph.out_arcs(p.destination())) {
      const Link& l = inst.graph.arc(arc);
      if (!p.contains(l.to)) continue;
      bool threw = false;
      try {
        (void)path_concat(p, l);
      } catch (const CycleError&) {
        threw = true;
      }
      c.expect(threw, "cycle accepted by path_concat");
    }
  }
  return c.outcome();
}

// --- topology_gen ----------------------------------------------------------

TopologyParams random_params(std::uint64_t seed, std::size_t i) {
  Xoshiro256 rng(derive_seed(seed ^ 0x21, i));
  TopologyParams p;
  p.node_count = 1 + rng.below(40);
  p.area_side = rng.uniform(10.0, 2000.0);
  p.radius = rng.uniform(1.0, p.area_side);
  p.seed = rng.next();
  const double lo = rng.uniform(0.1, 20.0);
  p.rate_model = UniformModel{lo, lo + rng.uniform(0.5, 20.0)};
  if (rng.below(2) == 0) {
    p.delay_model = ConstantModel{rng.uniform(0.0, 5.0)};
  } else {
    const double dlo = rng.uniform(0.0, 5.0);
    p.delay_model = UniformModel{dlo, dlo + rng.uniform(0.1, 5.0)};
  }
  return p;
}

PropertyOutcome geometric_links(const PropertyContext& ctx) {
  Checker c;
  for (std::size_t i = 0; i < ctx.cases; ++i) {
    c.begin_case(i);
    const TopologyParams p = random_params(ctx.seed, i);
    const Graph g = generate_topology(p);
    std::set<std::pair<std::size_t, std::size_t>> present;
    for (const Link& l : g.physical_links()) present.emplace(index_of(l.from), index_of(l.to));
    const auto pos = g.positions();
    for (std::size_t a = 0; a < p.node_count; ++a) {
      for (std::size_t b = a + 1; b < p.node_count; ++b) {
        const double dx = pos[a].x - pos[b].x;
        const double dy = pos[a].y - pos[b].y;
        const bool within = dx * dx + dy * dy <= p.radius * p.radius;
        c.expect(within == (present.count({a, b}) != 0), "link presence disagrees with distance");
      }
    }
  }
  return c.outcome();
}

PropertyOutcome generation_is_deterministic(const PropertyContext& ctx) {
  Checker c;
  for (std::size_t i = 0; i < ctx.cases; ++i) {
    c.begin_case(i);
    const TopologyParams p = random_params(ctx.seed, i);
    c.expect(save_graph_string(generate_topology(p), p) ==
                 save_graph_string(generate_topology(p), p),
             "two generations differ");
  }
  return c.outcome();
}

bool within_model(const AttributeModel& model, double v) {
  if (const auto* k = std::get_if<ConstantModel>(&model)) return v == k->value;
  const auto& u = std::get<UniformModel>(model);
  return u.lo <= v && v < u.hi;
}

PropertyOutcome draws_within_bounds(const PropertyContext& ctx) {
  Checker c;
  for (std::size_t i = 0; i < ctx.cases; ++i) {
    c.begin_case(i);
    const TopologyParams p = random_params(ctx.seed, i);
    const Graph g = generate_topology(p);
    for (const Link& l : g.arcs()) {
      c.expect(within_model(p.rate_model, l.rate), "rate outside [lo, hi)");
      c.expect(within_model(p.delay_model, l.delay), "delay outside model");
    }
  }
  return c.outcome();
}

// --- routing_dp ------------------------------------------------------------

PropertyOutcome found_results_are_feasible(const PropertyContext& ctx) {
  Checker c;
  for (std::size_t i = 0; i < ctx.cases; ++i) {
    c.begin_case(i);
    const auto inst = random_instance(ctx.seed, i);
    for (Algorithm a : kAllAlgorithms) {
      const auto r = try_route(a, inst);
      if (!r || !r->is_found()) continue;
      const std::string who(algorithm_name(a));
      const Path& p = *r->path;
      c.expect(p.source() == inst.query.source && p.destination() == inst.query.destination,
               who + ": wrong endpoints");
      c.expect(p.is_simple(), who + ": path not simple");
      c.expect(path_delay(p, inst.graph) <= inst.query.bound, who + ": delay over bound");
      c.expect(path_rate(p, inst.graph) == r->rate, who + ": reported rate not the bottleneck");
      c.expect(path_delay(p, inst.graph) == r->delay, who + ": reported delay differs");
    }
  }
  return c.outcome();
}

PropertyOutcome never_beats_the_oracle(const PropertyContext& ctx) {
  Checker c;
  for (std::size_t i = 0; i < ctx.cases; ++i) {
    c.begin_case(i);
    const auto inst = random_instance(ctx.seed, i);
    const RouteResult oracle = brute_force_route(inst.graph, inst.query);
    for (Algorithm a : kAllAlgorithms) {
      const auto r = try_route(a, inst);
      if (!r) continue;
      const std::string who(algorithm_name(a));
      if (!oracle.is_found()) {
        c.expect(!r->is_found(), who + ": found a path the oracle rules out");
      } else if (r->is_found()) {
        c.expect(r->rate <= oracle.rate, who + ": " + describe(*r) + " beats oracle " +
                                             describe(oracle));
      }
    }
  }
  return c.outcome();
}

PropertyOutcome disagreements_are_captured(const PropertyContext& ctx) {
  Checker c;
  std::size_t agree = 0;
  std::size_t captured = 0;
  CompareOptions options;
  options.counterexample_dir = ctx.scratch / "cross-agreement";
  for (std::size_t i = 0; i < ctx.cases; ++i) {
    c.begin_case(i);
    const auto inst = random_instance(ctx.seed, i);
    const AgreementReport report = compare_on_instance(inst.graph, inst.query, options, inst.params);
    const auto& d = report.outcome(Algorithm::kDijkstra).result;
    const auto& b = report.outcome(Algorithm::kBellmanFord).result;
    const auto& f = report.outcome(Algorithm::kFloydWarshall).result;
    const bool same = d && b && f && same_answer(*d, *b) && same_answer(*d, *f);
    if (same) {
      ++agree;
      continue;
    }
    c.expect(report.counterexample_path.has_value(), "disagreement not persisted");
    if (report.counterexample_path) {
      ++captured;
      c.expect(replay_counterexample(*report.counterexample_path), "bundle does not replay");
    }
  }
  std::ostringstream note;
  note << "three-way agreement " << agree << "/" << ctx.cases << ", " << captured
       << " divergences persisted";
  c.outcome().note = note.str();
  return c.outcome();
}

PropertyOutcome oracle_monotone_in_bound(const PropertyContext& ctx) {
  Checker c;
  for (std::size_t i = 0; i < ctx.cases; ++i) {
    c.begin_case(i);
    auto inst = random_instance(ctx.seed, i);
    Xoshiro256 rng(derive_seed(ctx.seed ^ 0x31, i));
    const double t1 = rng.uniform(0.0, 12.0);
    const double t2 = t1 + rng.uniform(0.0, 6.0);
    inst.query.bound = t1;
    const RouteResult r1 = brute_force_route(inst.graph, inst.query);
    inst.query.bound = t2;
    const RouteResult r2 = brute_force_route(inst.graph, inst.query);
    if (r1.is_found()) {
      c.expect(r2.is_found() && r1.rate <= r2.rate, "optimum fell as the bound grew");
    }
  }
  return c.outcome();
}

PropertyOutcome ties_are_deterministic(const PropertyContext& ctx) {
  Checker c;
  for (std::size_t i = 0; i < ctx.cases; ++i) {
    c.begin_case(i);
    const auto inst = random_instance(ctx.seed, i);
    for (Algorithm a : kAllAlgorithms) {
      c.expect(try_route(a, inst) == try_route(a, inst),
               std::string(algorithm_name(a)) + ": repeated run differs");
    }
    c.expect(brute_force_route(inst.graph, inst.query) == brute_force_route(inst.graph, inst.query),
             "brute force differs between runs");
  }
  return c.outcome();
}

PropertyOutcome simd_matches_scalar(const PropertyContext& ctx) {
  Checker c;
  if (!simd::cpu_supports(simd::Isa::kAvx2)) {
    c.outcome().note = "avx2 unavailable, scalar only";
  }
  for (std::size_t i = 0; i < ctx.cases; ++i) {
    c.begin_case(i);
    if (!simd::cpu_supports(simd::Isa::kAvx2)) continue;
    const auto inst = random_instance(ctx.seed, i);
    for (Algorithm a : {Algorithm::kDijkstra, Algorithm::kFloydWarshall}) {
      c.expect(try_route(a, inst, simd::Isa::kScalar) == try_route(a, inst, simd::Isa::kAvx2),
               std::string(algorithm_name(a)) + ": avx2 differs from scalar");
    }
  }
  return c.outcome();
}

// --- oracle ----------------------------------------------------------------

PropertyOutcome oracles_agree(const PropertyContext& ctx) {
  Checker c;
  for (std::size_t i = 0; i < ctx.cases; ++i) {
    c.begin_case(i);
    const auto inst = random_instance(ctx.seed, i);
    const RouteResult a = brute_force_route(inst.graph, inst.query);
    const RouteResult b = threshold_exact_route(inst.graph, inst.query);
    c.expect(same_answer(a, b), "brute force " + describe(a) + " vs threshold " + describe(b));
  }
  return c.outcome();
}

PropertyOutcome threshold_feasibility_monotone(const PropertyContext& ctx) {
  Checker c;
  for (std::size_t i = 0; i < ctx.cases; ++i) {
    c.begin_case(i);
    const auto inst = random_instance(ctx.seed, i);
    std::vector<double> rates;
    for (const Link& l : inst.graph.arcs()) rates.push_back(l.rate);
    std::sort(rates.begin(), rates.end());
    rates.erase(std::unique(rates.begin(), rates.end()), rates.end());
    bool previous = true;
    for (double r : rates) {
      const double d =
          min_delay_at_rate(inst.graph, inst.query.source, inst.query.destination, r);
      const bool feasible = d <= inst.query.bound;
      c.expect(previous || !feasible, "feasibility rose with the rate threshold");
      previous = feasible;
    }
  }
  return c.outcome();
}

// --- bench -----------------------------------------------------------------

PropertyOutcome bundles_replay(const PropertyContext& ctx) {
  Checker c;
  const auto dir = ctx.scratch / "replay";
  for (std::size_t i = 0; i < ctx.cases; ++i) {
    c.begin_case(i);
    const auto inst = random_instance(ctx.seed, i);
    const AgreementReport report = compare_on_instance(inst.graph, inst.query, {}, inst.params);
    const auto bundle = write_counterexample(dir, inst.graph, report);
    c.expect(replay_counterexample(bundle), "replayed report differs");
    std::filesystem::remove_all(bundle);
  }
  return c.outcome();
}

// --- cli_io ----------------------------------------------------------------

PropertyOutcome graph_file_round_trip(const PropertyContext& ctx) {
  Checker c;
  for (std::size_t i = 0; i < ctx.cases; ++i) {
    c.begin_case(i);
    const auto inst = random_instance(ctx.seed, i);
    const std::string text = save_graph_string(inst.graph, inst.params);
    const GraphFile loaded = load_graph_string(text);
    c.expect(structurally_equal(inst.graph, loaded.graph), "structure changed");
    c.expect(loaded.generator == inst.params, "generator header changed");
    c.expect(save_graph_string(loaded.graph, loaded.generator) == text, "re-save differs");
  }
  return c.outcome();
}

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
  friend bool operator==(const CliRun&, const CliRun&) = default;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return CliRun{code, out.str(), err.str()};
}

PropertyOutcome cli_is_deterministic(const PropertyContext& ctx) {
  Checker c;
  const auto dir = ctx.scratch / "cli";
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < ctx.cases; ++i) {
    c.begin_case(i);
    Xoshiro256 rng(derive_seed(ctx.seed ^ 0x51, i));
    const std::string n = std::to_string(1 + rng.below(30));
    const std::string seed = std::to_string(rng.next());
    const std::string radius = std::to_string(100 + rng.below(400));
    const auto a = (dir / "a.json").string();
    const auto b = (dir / "b.json").string();
    const CliRun ga = cli({"gen", "--n", n, "--radius", radius, "--seed", seed, "--out", a});
    const CliRun gb = cli({"gen", "--n", n, "--radius", radius, "--seed", seed, "--out", b});
    c.expect(ga == gb && ga.code == 0, "gen output differs");
    c.expect(read_text_file(a) == read_text_file(b), "gen files differ");
    const std::string algo(algorithm_name(kAllAlgorithms[rng.below(4)]));
    const std::string src = std::to_string(rng.below(std::stoul(n)));
    const std::string dst = std::to_string(rng.below(std::stoul(n)));
    const std::string tau = std::to_string(2 * rng.below(20));
    const std::vector<std::string> route{"route", "--in", a,   "--algo", algo, "--src",
                                         src,     "--dst", dst, "--tau",  tau};
    c.expect(cli(route) == cli(route), "route output differs");
    const std::vector<std::string> dot{"export", "--in", a};
    c.expect(cli(dot) == cli(dot), "export output differs");
  }
  return c.outcome();
}

PropertyOutcome exit_codes(const PropertyContext& ctx) {
  Checker c;
  const auto dir = ctx.scratch / "exit";
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < ctx.cases; ++i) {
    c.begin_case(i);
    const auto inst = random_instance(ctx.seed, i);
    const auto file = (dir / "g.json").string();
    save_graph(file, inst.graph, inst.params);
    Xoshiro256 rng(derive_seed(ctx.seed ^ 0x52, i));
    const Algorithm algorithm = kAllAlgorithms[rng.below(3)];
    const std::string src = inst.graph.name(inst.query.source);
    const std::string dst = inst.graph.name(inst.query.destination);
    const std::string tau = format_decimal(inst.query.bound);
    switch (rng.below(5)) {
      case 0: {
        const RouteResult expected = route(algorithm, inst.graph, inst.query);
        const CliRun run = cli({"route", "--in", file, "--algo", std::string(algorithm_name(algorithm)),
                                "--src", src, "--dst", dst, "--tau", tau});
        c.expect(run.code == (expected.is_found() ? kExitOk : kExitInfeasible),
                 "route exit code " + std::to_string(run.code));
        break;
      }
      case 1:
        c.expect(cli({"route", "--in", file, "--bogus"}).code == kExitUsage, "unknown flag");
        break;
      case 2:
        c.expect(cli({"route", "--in", (dir / "missing.json").string(), "--src", src, "--dst",
                      dst, "--tau", tau})
                         .code == kExitIo,
                 "missing file");
        break;
      case 3:
        c.expect(cli({"route", "--in", file, "--src", "no-such-node", "--dst", dst, "--tau", tau})
                         .code == kExitUsage,
                 "unknown node");
        break;
      default:
        c.expect(cli({"gen", "--n", "5", "--radius", "-1", "--out", (dir / "x.json").string()})
                         .code == kExitUsage,
                 "negative radius");
        break;
    }
  }
  return c.outcome();
}

}  // namespace

const std::vector<Property>& invariant_properties() {
  static const std::vector<Property> properties{
      {"graph: path rate is the bottleneck", path_rate_is_bottleneck},
      {"graph: concat delay is additive", concat_delay_is_additive},
      {"graph: concat rate is the min", concat_rate_is_min},
      {"graph: single-node path is (+inf, 0)", single_node_path_sentinels},
      {"graph: +inf rate never on a link", infinite_rate_never_on_link},
      {"graph: paths stay simple", concat_rejects_cycles},
      {"topology: links iff within radius", geometric_links},
      {"topology: generation is deterministic", generation_is_deterministic},
      {"topology: draws respect model bounds", draws_within_bounds},
      {"routing: found results are feasible", found_results_are_feasible},
      {"routing: never above the oracle", never_beats_the_oracle},
      {"routing: disagreements are persisted", disagreements_are_captured},
      {"routing: oracle optimum monotone in bound", oracle_monotone_in_bound},
      {"routing: tie-breaking is deterministic", ties_are_deterministic},
      {"routing: avx2 kernels match scalar", simd_matches_scalar},
      {"oracle: both oracles agree", oracles_agree},
      {"oracle: threshold feasibility monotone", threshold_feasibility_monotone},
      {"bench: bundles replay identically", bundles_replay},
      {"io: graph file round trip", graph_file_round_trip},
      {"cli: identical flags give identical output", cli_is_deterministic},
      {"cli: exit codes", exit_codes},
  };
  return properties;
}

}  // namespace wmnroute::testing
