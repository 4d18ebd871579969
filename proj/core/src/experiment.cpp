#include "symdepth/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "symdepth/betti.hpp"
#include "symdepth/certificate.hpp"
#include "symdepth/generators.hpp"
#include "symdepth/graph_io.hpp"
#include "symdepth/ideal_constructions.hpp"
#include "symdepth/parallel.hpp"
#include "symdepth/verify.hpp"

namespace symdepth {

namespace {

enum class SuiteKind {
  kEdgeDepth,         // depth S/I(G) >= α₂(G)
  kSymbolicChordal,   // chordal G: depth S/I(G)^{(s)} >= α₂ - s + 1
  kSymbolicSquare,    // any G, s = 2
  kColonIdentity,     // (I^{(k)} : xy) = (I^{(k-1)} : x) ∩ (I^{(k-1)} : y)
  kMixed,             // depth S/(I(H)^{(s)} + I(H')) >= α₂ - s + 1
  kDeletionClosed,    // α₂(G∖A) >= α₂(G) - |W|, A in closed neighborhoods
  kDeletionClique,    // α₂(G∖A) >= α₂(G) - d + 1, clique variant
  kCertificate,       // accepted certificate q ⟹ depth >= q
  kForest,            // I^s = I^{(s)} on forests
};

SuiteKind suite_kind(const std::string& name) {
  if (name == "cor22") return SuiteKind::kEdgeDepth;
  if (name == "thm34") return SuiteKind::kSymbolicChordal;
  if (name == "thm42") return SuiteKind::kSymbolicSquare;
  if (name == "lem41") return SuiteKind::kColonIdentity;
  if (name == "prop33") return SuiteKind::kMixed;
  if (name == "lem31") return SuiteKind::kDeletionClosed;
  if (name == "lem32") return SuiteKind::kDeletionClique;
  if (name == "prop21") return SuiteKind::kCertificate;
  if (name == "forest") return SuiteKind::kForest;
  throw std::invalid_argument("experiment: unknown suite \"" + name + "\"");
}

struct PlannedInstance {
  std::string id;
  Graph g;
  Graph h, h_prime;            // mixed suite
  std::vector<int> w, a;       // deletion suites
  MonomialIdeal ideal;         // certificate suite
  DepthCertificate cert;       // certificate suite
  int s = 1;                   // s, or k for the colon identity
  int u = -1, v = -1;          // colon edge
};

std::string instance_id(const std::string& suite, std::size_t index) {
  std::ostringstream out;
  out << suite << '-';
  std::string digits = std::to_string(index);
  for (std::size_t i = digits.size(); i < 6; ++i) out << '0';
  out << digits;
  return out.str();
}

std::vector<int> random_vertex_subset(std::uint64_t allowed, double p, Rng& rng) {
  std::vector<int> out;
  while (allowed) {
    int v = std::countr_zero(allowed);
    allowed &= allowed - 1;
    if (rng.bernoulli(p)) out.push_back(v);
  }
  return out;
}

Graph random_graph_with_edge(int n, double p, Rng& rng) {
  for (;;) {
    Graph g = erdos_renyi(n, p, rng);
    if (g.edge_count() > 0) return g;
  }
}

/// A random spanning subgraph of a chordal g that is itself chordal;
/// falls back to g itself (always chordal) if sampling keeps failing.
Graph random_chordal_subgraph(const Graph& g, Rng& rng) {
  for (int attempt = 0; attempt < 25; ++attempt) {
    Graph h(g.vertex_count());
    for (auto [u, v] : g.edges()) {
      if (rng.bernoulli(0.5)) h.add_edge(u, v);
    }
    if (is_chordal(h).chordal) return h;
  }
  return g;
}

std::vector<PlannedInstance> plan_instances(const ExperimentConfig& cfg, SuiteKind kind) {
  Rng rng(cfg.seed);
  std::vector<PlannedInstance> plan;
  const bool exhaustive = cfg.family == "exhaustive";
  std::size_t counter = 0;
  auto next_id = [&]() { return instance_id(cfg.suite, counter++); };

  auto for_each_s = [&](const Graph& g, auto&& push) {
    for (int s = cfg.s_min; s <= cfg.s_max; ++s) push(g, s);
  };

  switch (kind) {
    case SuiteKind::kEdgeDepth:
    case SuiteKind::kSymbolicSquare: {
      auto push = [&](const Graph& g, int s) {
        PlannedInstance inst;
        inst.id = next_id();
        inst.g = g;
        inst.s = s;
        plan.push_back(std::move(inst));
      };
      int s = kind == SuiteKind::kEdgeDepth ? 1 : 2;
      if (exhaustive) {
        for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
          for (std::uint64_t code = 0; code < labeled_graph_count(n); ++code)
            push(labeled_graph(n, code), s);
        }
      } else {
        for (int i = 0; i < cfg.random_count; ++i)
          push(erdos_renyi(rng.uniform_int(cfg.n_min, cfg.n_max), cfg.edge_probability, rng), s);
      }
      break;
    }
    case SuiteKind::kSymbolicChordal: {
      auto push = [&](const Graph& g, int s) {
        PlannedInstance inst;
        inst.id = next_id();
        inst.g = g;
        inst.s = s;
        plan.push_back(std::move(inst));
      };
      if (exhaustive) {
        for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
          for (std::uint64_t code = 0; code < labeled_graph_count(n); ++code) {
            Graph g = labeled_graph(n, code);
            if (is_chordal(g).chordal) for_each_s(g, push);
          }
        }
      } else {
        for (int i = 0; i < cfg.random_count; ++i)
          for_each_s(random_chordal(rng.uniform_int(cfg.n_min, cfg.n_max), rng), push);
      }
      break;
    }
    case SuiteKind::kColonIdentity: {
      for (int i = 0; i < cfg.random_count; ++i) {
        PlannedInstance inst;
        inst.id = next_id();
        inst.g = random_graph_with_edge(rng.uniform_int(std::max(cfg.n_min, 2), cfg.n_max),
                                        cfg.edge_probability, rng);
        auto edges = inst.g.edges();
        auto [u, v] = edges[static_cast<std::size_t>(
            rng.uniform_int(0, static_cast<int>(edges.size()) - 1))];
        inst.u = u;
        inst.v = v;
        inst.s = rng.uniform_int(std::max(cfg.s_min, 2), std::max(cfg.s_max, 2));
        plan.push_back(std::move(inst));
      }
      break;
    }
    case SuiteKind::kMixed: {
      for (int i = 0; i < cfg.random_count; ++i) {
        Graph g = random_chordal(rng.uniform_int(cfg.n_min, cfg.n_max), rng);
        Graph h = random_chordal_subgraph(g, rng);
        Graph h_prime(g.vertex_count());
        for (auto [u, v] : g.edges()) {
          if (!h.has_edge(u, v)) h_prime.add_edge(u, v);
        }
        for (int s = cfg.s_min; s <= cfg.s_max; ++s) {
          PlannedInstance inst;
          inst.id = next_id();
          inst.g = g;
          inst.h = h;
          inst.h_prime = h_prime;
          inst.s = s;
          plan.push_back(std::move(inst));
        }
      }
      break;
    }
    case SuiteKind::kDeletionClosed: {
      for (int i = 0; i < cfg.random_count; ++i) {
        PlannedInstance inst;
        inst.id = next_id();
        int n = rng.uniform_int(cfg.n_min, cfg.n_max);
        inst.g = erdos_renyi(n, cfg.edge_probability, rng);
        int w_size = rng.uniform_int(0, std::min(3, n));
        std::vector<int> order(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) order[static_cast<std::size_t>(j)] = j;
        for (int j = n - 1; j > 0; --j)
          std::swap(order[static_cast<std::size_t>(j)],
                    order[static_cast<std::size_t>(rng.uniform_int(0, j))]);
        inst.w.assign(order.begin(), order.begin() + w_size);
        std::uint64_t allowed = 0;
        for (int x : inst.w) allowed |= inst.g.closed_neighbors(x);
        inst.a = random_vertex_subset(allowed, 0.5, rng);
        plan.push_back(std::move(inst));
      }
      break;
    }
    case SuiteKind::kDeletionClique: {
      for (int i = 0; i < cfg.random_count; ++i) {
        PlannedInstance inst;
        inst.id = next_id();
        int n = std::max(rng.uniform_int(cfg.n_min, cfg.n_max), 1);
        inst.g = random_chordal(n, rng);
        int x1 = rng.uniform_int(0, n - 1);
        inst.w.push_back(x1);
        std::uint64_t clique_mask = std::uint64_t{1} << x1;
        std::uint64_t candidates = inst.g.neighbors(x1);
        while (candidates != 0 && rng.bernoulli(0.6)) {
          std::vector<int> pool;
          std::uint64_t rest = candidates;
          while (rest) {
            pool.push_back(std::countr_zero(rest));
            rest &= rest - 1;
          }
          int w = pool[static_cast<std::size_t>(
              rng.uniform_int(0, static_cast<int>(pool.size()) - 1))];
          inst.w.push_back(w);
          clique_mask |= std::uint64_t{1} << w;
          candidates &= inst.g.neighbors(w);
        }
        std::uint64_t open_union = 0;
        for (int x : inst.w) open_union |= inst.g.neighbors(x);
        std::uint64_t base = inst.g.neighbors(x1) & ~clique_mask;
        std::uint64_t optional_pool = open_union & ~base & ~(std::uint64_t{1} << x1);
        std::vector<int> extra = random_vertex_subset(optional_pool, 0.4, rng);
        std::uint64_t rest = base;
        while (rest) {
          inst.a.push_back(std::countr_zero(rest));
          rest &= rest - 1;
        }
        inst.a.insert(inst.a.end(), extra.begin(), extra.end());
        std::sort(inst.a.begin(), inst.a.end());
        plan.push_back(std::move(inst));
      }
      break;
    }
    case SuiteKind::kCertificate: {
      for (int i = 0; i < cfg.random_count; ++i) {
        PlannedInstance inst;
        inst.id = next_id();
        int n = rng.uniform_int(cfg.n_min, cfg.n_max);
        inst.ideal = random_monomial_ideal(n, 10, 3, rng);
        inst.cert = random_valid_certificate(inst.ideal, rng);
        plan.push_back(std::move(inst));
      }
      break;
    }
    case SuiteKind::kForest: {
      auto push = [&](const Graph& g, int s) {
        PlannedInstance inst;
        inst.id = next_id();
        inst.g = g;
        inst.s = s;
        plan.push_back(std::move(inst));
      };
      if (exhaustive) {
        for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
          for (std::uint64_t code = 0; code < labeled_tree_count(n); ++code)
            for_each_s(labeled_tree(n, code), push);
        }
      } else {
        for (int i = 0; i < cfg.random_count; ++i)
          for_each_s(random_tree(rng.uniform_int(cfg.n_min, cfg.n_max), rng), push);
      }
      break;
    }
  }
  return plan;
}

/// Entrywise oracle comparison plus depth agreement across characteristics;
/// returns an empty string on success. Only ideals small enough for the
/// independent oracle are checked.
std::string cross_validate_ideal(const MonomialIdeal& ideal, const std::vector<int>& chars) {
  if (ideal.is_unit() || ideal.generators().size() > 14) return "";
  FieldSpec primary{chars.empty() ? 0 : chars.front()};
  BettiTable sweep = betti_table(ideal, primary);
  BettiTable taylor = betti_via_taylor(ideal, primary);
  if (!(sweep == taylor)) return "betti oracle mismatch on " + ideal.to_string();
  int d0 = depth(ideal, primary);
  for (std::size_t i = 1; i < chars.size(); ++i) {
    int dp = depth(ideal, FieldSpec{chars[i]});
    if (dp != d0) {
      return "depth differs between characteristics " + std::to_string(primary.characteristic) +
             " and " + std::to_string(chars[i]) + " on " + ideal.to_string();
    }
  }
  return "";
}

VerificationReport equality_report(const PlannedInstance& inst, const Graph& g, bool equal,
                                   const std::string& note) {
  VerificationReport r;
  r.id = inst.id;
  r.n = g.vertex_count();
  r.edge_count = g.edge_count();
  r.chordal = is_chordal(g).chordal;
  r.s = inst.s;
  r.alpha2 = 0;
  r.depth = equal ? 1 : 0;
  r.bound = 1;
  r.slack = r.depth - r.bound;
  r.verdict = equal ? "holds" : "violated";
  r.guaranteed = true;
  r.characteristic = 0;
  r.graph_json = serialize_graph(g);
  r.note = note;
  return r;
}

VerificationReport evaluate_instance(const PlannedInstance& inst, SuiteKind kind,
                                     const ExperimentConfig& cfg) {
  FieldSpec field{cfg.characteristics.empty() ? 0 : cfg.characteristics.front()};
  switch (kind) {
    case SuiteKind::kEdgeDepth:
    case SuiteKind::kSymbolicSquare:
    case SuiteKind::kSymbolicChordal: {
      bool require_chordal = kind == SuiteKind::kSymbolicChordal;
      VerificationReport r =
          check_symbolic_depth_bound(inst.g, inst.s, require_chordal, field, cfg.generator_cap);
      r.id = inst.id;
      if (cfg.cross_validate) {
        std::string failure =
            cross_validate_ideal(symbolic_power(inst.g, inst.s, cfg.generator_cap),
                                 cfg.characteristics);
        if (!failure.empty()) {
          r.verdict = "violated";
          r.guaranteed = true;
          r.note = failure;
        }
      }
      return r;
    }
    case SuiteKind::kColonIdentity: {
      const int n = inst.g.vertex_count();
      bool equal = check_colon_identity(inst.g, inst.u, inst.v, inst.s, cfg.generator_cap);
      nlohmann::ordered_json note;
      note["identity"] = "colon";
      note["edge"] = {inst.u, inst.v};
      note["k"] = inst.s;
      VerificationReport r = equality_report(inst, inst.g, equal, note.dump());
      if (cfg.cross_validate && equal) {
        Monomial xu = Monomial::variable(n, inst.u);
        Monomial xv = Monomial::variable(n, inst.v);
        MonomialIdeal lhs = colon(symbolic_power(inst.g, inst.s, cfg.generator_cap), xu * xv);
        std::string failure = cross_validate_ideal(lhs, cfg.characteristics);
        if (!failure.empty()) {
          r.verdict = "violated";
          r.note = failure;
        }
      }
      return r;
    }
    case SuiteKind::kMixed: {
      VerificationReport r =
          check_mixed_bound(inst.h, inst.h_prime, inst.s, field, cfg.generator_cap);
      r.id = inst.id;
      if (cfg.cross_validate) {
        std::string failure = cross_validate_ideal(
            mixed_ideal(inst.h, inst.h_prime, inst.s, cfg.generator_cap), cfg.characteristics);
        if (!failure.empty()) {
          r.verdict = "violated";
          r.guaranteed = true;
          r.note = failure;
        }
      }
      return r;
    }
    case SuiteKind::kDeletionClosed:
    case SuiteKind::kDeletionClique: {
      DeletionLemma mode = kind == SuiteKind::kDeletionClosed
                               ? DeletionLemma::kClosedNeighborhoods
                               : DeletionLemma::kCliqueOpenNeighborhoods;
      VerificationReport r = check_packing_deletion_lemmas(inst.g, inst.w, inst.a, mode);
      r.id = inst.id;
      return r;
    }
    case SuiteKind::kCertificate: {
      CertificateCheck check = check_certificate(inst.ideal, inst.cert);
      VerificationReport r;
      r.id = inst.id;
      r.n = inst.ideal.dimension();
      r.edge_count = 0;
      r.chordal = false;
      r.s = 0;
      r.characteristic = field.characteristic;
      int depth_value = depth(inst.ideal, field);
      r.alpha2 = check.q;
      r.depth = depth_value;
      r.bound = check.q;
      r.slack = depth_value - check.q;
      r.verdict = check.accepted && r.slack >= 0 ? "holds" : "violated";
      r.guaranteed = true;
      nlohmann::ordered_json note;
      note["ideal"] = inst.ideal.to_string();
      note["rows"] = nlohmann::ordered_json::array();
      for (const CertificateRow& row : inst.cert.rows) {
        note["rows"].push_back({{"center", row.center}, {"witnesses", row.witnesses}});
      }
      if (!check.accepted) note["rejection"] = check.reason;
      r.note = note.dump();
      return r;
    }
    case SuiteKind::kForest: {
      bool equal = check_forest_power_coincidence(inst.g, inst.s, cfg.generator_cap);
      nlohmann::ordered_json note;
      note["identity"] = "ordinary-vs-symbolic-power";
      return equality_report(inst, inst.g, equal, note.dump());
    }
  }
  throw std::logic_error("evaluate_instance: unreachable");
}

void validate_config(const ExperimentConfig& cfg) {
  suite_kind(cfg.suite);
  if (cfg.n_min < 1 || cfg.n_max > 12 || cfg.n_min > cfg.n_max)
    throw std::invalid_argument("experiment: n range must satisfy 1 <= n_min <= n_max <= 12");
  if (cfg.s_min < 1 || cfg.s_max > 4 || cfg.s_min > cfg.s_max)
    throw std::invalid_argument("experiment: s range must satisfy 1 <= s_min <= s_max <= 4");
  if (cfg.random_count < 0) throw std::invalid_argument("experiment: random_count negative");
  if (cfg.edge_probability < 0.0 || cfg.edge_probability > 1.0)
    throw std::invalid_argument("experiment: edge_probability outside [0, 1]");
  if (cfg.family != "erdos_renyi" && cfg.family != "random_chordal" &&
      cfg.family != "random_tree" && cfg.family != "exhaustive")
    throw std::invalid_argument("experiment: unknown family \"" + cfg.family + "\"");
  if (cfg.characteristics.empty())
    throw std::invalid_argument("experiment: characteristics must be nonempty");
  for (int c : cfg.characteristics) {
    if (c != 0 && !FieldSpec::is_prime(c))
      throw std::invalid_argument("experiment: characteristics must be 0 or prime");
  }
  if (cfg.generator_cap < 1) throw std::invalid_argument("experiment: generator_cap must be >= 1");
}

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& json_text) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("experiment config: malformed JSON: ") + e.what());
  }
  if (!parsed.is_object()) throw std::invalid_argument("experiment config: expected an object");

  ExperimentConfig cfg;
  const std::set<std::string> known{"suite",          "n_min",           "n_max",
                                    "s_min",          "s_max",           "random_count",
                                    "seed",           "characteristics", "family",
                                    "edge_probability", "cross_validate", "include_timings",
                                    "generator_cap",  "csv_path",        "json_path"};
  for (const auto& [key, value] : parsed.items()) {
    if (!known.count(key))
      throw std::invalid_argument("experiment config: unknown field \"" + key + "\"");
  }
  try {
    cfg.suite = parsed.at("suite").get<std::string>();
    if (parsed.contains("n_min")) cfg.n_min = parsed.at("n_min").get<int>();
    if (parsed.contains("n_max")) cfg.n_max = parsed.at("n_max").get<int>();
    if (parsed.contains("s_min")) cfg.s_min = parsed.at("s_min").get<int>();
    if (parsed.contains("s_max")) cfg.s_max = parsed.at("s_max").get<int>();
    if (parsed.contains("random_count")) cfg.random_count = parsed.at("random_count").get<int>();
    if (parsed.contains("seed")) cfg.seed = parsed.at("seed").get<std::uint64_t>();
    if (parsed.contains("characteristics"))
      cfg.characteristics = parsed.at("characteristics").get<std::vector<int>>();
    if (parsed.contains("family")) cfg.family = parsed.at("family").get<std::string>();
    if (parsed.contains("edge_probability"))
      cfg.edge_probability = parsed.at("edge_probability").get<double>();
    if (parsed.contains("cross_validate"))
      cfg.cross_validate = parsed.at("cross_validate").get<bool>();
    if (parsed.contains("include_timings"))
      cfg.include_timings = parsed.at("include_timings").get<bool>();
    if (parsed.contains("generator_cap"))
      cfg.generator_cap = parsed.at("generator_cap").get<int>();
    if (parsed.contains("csv_path")) cfg.csv_path = parsed.at("csv_path").get<std::string>();
    if (parsed.contains("json_path")) cfg.json_path = parsed.at("json_path").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("experiment config: bad field type: ") + e.what());
  }
  validate_config(cfg);
  return cfg;
}

ExperimentConfig read_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_experiment_config(buffer.str());
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  validate_config(cfg);
  SuiteKind kind = suite_kind(cfg.suite);
  std::vector<PlannedInstance> plan = plan_instances(cfg, kind);

  std::vector<VerificationReport> reports(plan.size());
  // Early exit after a violation is only safe sequentially: with one worker
  // the instances before the first violation are exactly the evaluated ones,
  // so truncation yields the same bytes a full evaluation would.
  const bool sequential = worker_count() <= 1;
  std::atomic<bool> stop{false};
  parallel_for_index(plan.size(), [&](std::size_t i) {
    if (sequential && stop.load(std::memory_order_relaxed)) {
      // Filled in so truncation below only sees real evaluations.
      reports[i].id = plan[i].id;
      reports[i].verdict = "skipped";
      reports[i].guaranteed = false;
      return;
    }
    auto started = std::chrono::steady_clock::now();
    try {
      reports[i] = evaluate_instance(plan[i], kind, cfg);
    } catch (const std::exception& e) {
      VerificationReport r;
      r.id = plan[i].id;
      r.n = plan[i].g.vertex_count();
      r.s = plan[i].s;
      r.verdict = "violated";
      r.guaranteed = true;
      r.note = std::string("evaluation error: ") + e.what();
      if (plan[i].g.vertex_count() > 0) r.graph_json = serialize_graph(plan[i].g);
      reports[i] = std::move(r);
    }
    if (cfg.include_timings) {
      auto elapsed = std::chrono::steady_clock::now() - started;
      reports[i].ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    if (reports[i].guaranteed && reports[i].verdict == "violated")
      stop.store(true, std::memory_order_relaxed);
  });

  ExperimentResult result;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    result.reports.push_back(reports[i]);
    if (reports[i].guaranteed && reports[i].verdict == "violated") break;
  }

  result.exit_code = summarize_exit_code(result.reports);
  if (result.exit_code != 0) {
    const VerificationReport& bad = result.reports.back();
    result.reproducer_path =
        (cfg.csv_path.empty() ? std::string("reproducer") : cfg.csv_path) + ".reproducer.json";
    std::ofstream out(result.reproducer_path);
    out << reproducer_json(bad) << '\n';
  }

  if (!cfg.csv_path.empty()) {
    std::ofstream out(cfg.csv_path);
    if (!out) throw std::runtime_error("cannot write " + cfg.csv_path);
    out << reports_to_csv(result.reports);
  }
  if (!cfg.json_path.empty()) {
    std::ofstream out(cfg.json_path);
    if (!out) throw std::runtime_error("cannot write " + cfg.json_path);
    out << reports_to_json(result.reports) << '\n';
  }
  return result;
}

}  // namespace symdepth
