#include "pdbep/runner.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <thread>

#include "pdbep/errors.hpp"
#include "pdbep/generator.hpp"
#include "pdbep/greedy.hpp"
#include "pdbep/oracle.hpp"
#include "pdbep/rng.hpp"
#include "pdbep/rounding.hpp"
#include "pdbep/tree.hpp"
#include "pdbep/weighted.hpp"

namespace pdbep::harness {

Algorithm algorithm_from_name(const std::string& name) {
  if (name == "add") return Algorithm::kAddition;
  if (name == "delete") return Algorithm::kDeletion;
  if (name == "round") return Algorithm::kRounding;
  if (name == "weighted") return Algorithm::kWeighted;
  if (name == "tree") return Algorithm::kTree;
  if (name == "exact") return Algorithm::kExact;
  if (name == "auto") return Algorithm::kAuto;
  throw ParameterError("unknown algorithm '" + name + "'");
}

std::string algorithm_name(Algorithm alg) {
  switch (alg) {
    case Algorithm::kAddition: return "add";
    case Algorithm::kDeletion: return "delete";
    case Algorithm::kRounding: return "round";
    case Algorithm::kWeighted: return "weighted";
    case Algorithm::kTree: return "tree";
    case Algorithm::kExact: return "exact";
    case Algorithm::kAuto: return "auto";
  }
  return "?";
}

bool is_tree_instance(const Instance& inst) {
  const std::size_t n = inst.vertex_count();
  if (inst.edge_count() + 1 != n) return false;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (EdgeId e : inst.incident(queue[head])) {
      const Edge& ed = inst.edge(e);
      const VertexId w = ed.u == queue[head] ? ed.v : ed.u;
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return queue.size() == n;
}

Algorithm resolve_auto(const Instance& inst) {
  if (is_tree_instance(inst)) return Algorithm::kTree;
  if (inst.weighted()) return Algorithm::kWeighted;
  return Algorithm::kDeletion;
}

std::string instance_digest(const Instance& inst) {
  const std::string text = inst.serialize();
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[hash & 0xf];
    hash >>= 4;
  }
  return out;
}

Instance unweighted_view(const Instance& inst) {
  std::vector<long long> bounds(inst.vertex_count());
  for (VertexId v = 0; v < inst.vertex_count(); ++v) bounds[v] = inst.bound(v);
  return Instance::create(inst.vertex_count(), inst.edges(),
                          std::move(bounds));
}

Instance relabel(const Instance& inst, std::uint64_t seed) {
  const std::size_t n = inst.vertex_count();
  std::vector<VertexId> perm(n);
  for (VertexId v = 0; v < n; ++v) perm[v] = v;
  SplitMix64 rng(derive_seed(seed, 0x7265));
  rng.shuffle(perm);

  std::vector<Edge> edges = inst.edges();
  for (Edge& e : edges) {
    e.u = perm[e.u];
    e.v = perm[e.v];
  }
  std::vector<long long> bounds(n);
  for (VertexId v = 0; v < n; ++v) bounds[perm[v]] = inst.bound(v);
  std::optional<std::vector<Rational>> weights;
  if (inst.weighted()) {
    weights.emplace();
    for (EdgeId e = 0; e < inst.edge_count(); ++e) {
      weights->push_back(inst.weight(e));
    }
  }
  return Instance::create(n, std::move(edges), std::move(bounds),
                          std::move(weights));
}

bool RunReport::all_ok() const {
  if (!feasible || !bound_ok) return false;
  for (const NamedCheck& c : checks) {
    if (!c.ok) return false;
  }
  return true;
}

nlohmann::ordered_json RunReport::to_json(bool include_timing) const {
  nlohmann::ordered_json j;
  j["schema"] = "pdbep-run/1";
  j["digest"] = digest;
  j["solver"] = solver;
  j["order"] = order;
  j["eps"] = format_rational(eps);
  j["n"] = n;
  j["m"] = m;
  j["weighted"] = instance_weighted;
  j["size"] = size;
  j["value"] = format_rational(value);
  j["feasible"] = feasible;
  j["bound"] = {{"name", bound_name}, {"value", format_rational(bound_value)}};
  j["bound_ok"] = bound_ok;
  j["ratio"] = ratio ? format_rational(*ratio) : "inf";
  nlohmann::ordered_json checks_json = nlohmann::ordered_json::array();
  for (const NamedCheck& c : checks) {
    checks_json.push_back({{"name", c.name}, {"ok", c.ok}});
  }
  j["checks"] = std::move(checks_json);
  j["long_run"] = long_run;
  j["packing"] = packing.ids();
  if (include_timing) j["timing"] = {{"wall_ms", wall_ms}};
  return j;
}

RunReport run(const Instance& inst, Algorithm alg, const RunParams& params) {
  if (alg == Algorithm::kAuto) alg = resolve_auto(inst);

  RunReport report;
  report.digest = instance_digest(inst);
  report.solver = algorithm_name(alg);
  report.eps = params.eps;
  report.n = inst.vertex_count();
  report.m = inst.edge_count();
  report.instance_weighted = inst.weighted();

  // Cardinality solvers ignore weights; measure them against the stripped
  // instance so value, bound and ratio talk about the same objective.
  const bool weight_aware =
      alg == Algorithm::kWeighted || alg == Algorithm::kExact;
  const Instance view =
      !weight_aware && inst.weighted() ? unweighted_view(inst) : inst;

  std::vector<EdgeId> order;
  if (params.order_seed &&
      (alg == Algorithm::kAddition || alg == Algorithm::kDeletion)) {
    order = greedy::shuffled_order(view, *params.order_seed);
    report.order = "seed:" + std::to_string(*params.order_seed);
  }

  std::optional<Rational> exact_value;  // filled when the oracle ran
  const auto t0 = std::chrono::steady_clock::now();
  switch (alg) {
    case Algorithm::kAddition:
      report.packing = greedy::edge_addition(view, order).first;
      break;
    case Algorithm::kDeletion:
      report.packing = greedy::edge_deletion(view, order);
      break;
    case Algorithm::kRounding: {
      auto [p, state] = rounding::solve_ip2(view, params.eps, params.pivot);
      report.packing = std::move(p);
      report.long_run = state.long_run;
      // Output potential must hold up against the first relaxation value.
      const Rational lhs = state.root_lp_value * (Rational(1) - params.eps);
      const Rational rhs = Rational(3, 2) *
                           rounding::phi_value(view, report.packing,
                                               params.eps);
      report.checks.push_back({"phi-root", lhs <= rhs});
      break;
    }
    case Algorithm::kWeighted: {
      weighted::PartitionSolveResult r = weighted::partition_solve(view);
      report.packing = r.best;
      // Every heavy-set weight shows up once per heavy endpoint.
      Rational covered = Rational(2) * r.weights.core;
      for (const auto& ce : r.partition.cross) covered += view.weight(ce.e);
      report.checks.push_back(
          {"coverage", covered == weighted::weighted_upper_bound(view)});
      break;
    }
    case Algorithm::kTree: {
      // The core routine insists on one connected tree; forests split into
      // components solved independently, summing the exact optima.
      const std::size_t n = view.vertex_count();
      std::vector<int> comp(n, -1);
      int comps = 0;
      for (VertexId s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<VertexId> queue{s};
        comp[s] = comps;
        for (std::size_t head = 0; head < queue.size(); ++head) {
          for (EdgeId e : view.incident(queue[head])) {
            const Edge& ed = view.edge(e);
            const VertexId w = ed.u == queue[head] ? ed.v : ed.u;
            if (comp[w] < 0) {
              comp[w] = comps;
              queue.push_back(w);
            }
          }
        }
        ++comps;
      }
      if (comps <= 1) {
        tree::TreeDpResult r = tree::tree_dp(view, params.root);
        report.packing = r.witness;
        report.checks.push_back(
            {"witness-value",
             r.value == static_cast<long long>(r.witness.size())});
        break;
      }
      if (params.root && *params.root >= n) {
        throw ParameterError("root vertex out of range");
      }
      long long total = 0;
      std::vector<EdgeId> merged;
      for (int c = 0; c < comps; ++c) {
        std::vector<VertexId> index(n, 0);
        std::vector<long long> bounds;
        for (VertexId u = 0; u < n; ++u) {
          if (comp[u] == c) {
            index[u] = static_cast<VertexId>(bounds.size());
            bounds.push_back(view.bound(u));
          }
        }
        std::vector<Edge> edges;
        std::vector<EdgeId> ids;
        for (EdgeId e = 0; e < view.edge_count(); ++e) {
          const Edge& ed = view.edge(e);
          if (comp[ed.u] == c) {
            edges.push_back({index[ed.u], index[ed.v]});
            ids.push_back(e);
          }
        }
        if (edges.empty()) continue;
        Instance sub = Instance::create(bounds.size(), edges, bounds);
        std::optional<VertexId> sub_root;
        if (params.root && comp[*params.root] == c) {
          sub_root = index[*params.root];
        }
        tree::TreeDpResult r = tree::tree_dp(sub, sub_root);
        total += r.value;
        for (EdgeId e : r.witness) merged.push_back(ids[e]);
      }
      report.packing = EdgePacking(merged);
      report.checks.push_back(
          {"witness-value",
           total == static_cast<long long>(report.packing.size())});
      break;
    }
    case Algorithm::kExact: {
      oracle::OracleResult r =
          oracle::exact_opt(view, {params.oracle_limit, true});
      report.packing = r.witness;
      exact_value = r.value;
      break;
    }
    case Algorithm::kAuto:
      throw SolverError("auto must be resolved before dispatch");
  }
  const auto t1 = std::chrono::steady_clock::now();
  report.wall_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();

  report.size = report.packing.size();
  report.value = packing_weight(view, report.packing);
  report.feasible = is_feasible(view, report.packing);

  if (alg == Algorithm::kExact) {
    report.bound_name = "exact";
    report.bound_value = *exact_value;
    report.checks.push_back(
        {"witness-value", report.value == *exact_value});
  } else if (view.edge_count() <= params.oracle_limit) {
    report.bound_name = "exact";
    report.bound_value =
        oracle::exact_opt(view, {params.oracle_limit, true}).value;
  } else if (view.weighted()) {
    report.bound_name = "heavy-weight";
    report.bound_value = weighted::weighted_upper_bound(view);
  } else {
    report.bound_name = "bound-sum";
    report.bound_value = Rational(upper_bound(view));
  }
  report.bound_ok = report.value <= report.bound_value;
  if (report.value > 0) {
    report.ratio = report.bound_value / report.value;
  } else if (report.bound_value == 0) {
    report.ratio = Rational(1);
  }

  const Rational sum_bounds(upper_bound(view));
  switch (alg) {
    case Algorithm::kAddition:
      report.checks.push_back(
          {"factor4", Rational(4) * report.value >= sum_bounds});
      break;
    case Algorithm::kDeletion: {
      report.checks.push_back(
          {"factor2", Rational(2) * report.value >= sum_bounds});
      std::vector<long long> deg = packing_degrees(view, report.packing);
      bool saturated = true;
      for (VertexId v = 0; v < view.vertex_count(); ++v) {
        if (deg[v] < view.bound(v)) saturated = false;
      }
      report.checks.push_back({"saturation", saturated});
      break;
    }
    case Algorithm::kRounding:
      if (report.bound_name == "exact") {
        const Rational keep = Rational(1) - params.eps;
        report.checks.push_back(
            {"factor3",
             report.bound_value * keep * keep <= Rational(3) * report.value});
      }
      break;
    case Algorithm::kWeighted:
      if (report.bound_name == "exact") {
        const long long bits =
            view.vertex_count() >= 2
                ? std::bit_width(view.vertex_count() - 1)
                : 0;
        report.checks.push_back(
            {"log-factor", report.bound_value <=
                               Rational(2 + 2 * bits) * report.value});
      }
      break;
    case Algorithm::kTree:
      if (report.bound_name == "exact") {
        report.checks.push_back(
            {"matches-exact", report.value == report.bound_value});
      }
      break;
    default:
      break;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Batch generation and certification.

Instance batch_instance(std::uint64_t seed, int index, std::size_t n_max,
                        bool allow_weighted) {
  if (n_max < 2) throw ParameterError("batch needs n_max >= 2");
  SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(index)));
  GeneratorSpec spec;
  spec.seed = rng.next();
  spec.n = 2 + rng.below(n_max - 1);

  const int kind = index % 10;
  const bool weighted = allow_weighted && (kind == 8 || kind == 9);
  switch (kind) {
    case 0:
      spec.family = Family::kUniform;
      spec.m = 1 + rng.below(std::max<std::size_t>(2 * spec.n, 2));
      spec.m = std::min(spec.m, spec.n * (spec.n - 1) / 2);
      spec.bounds = BoundPolicy::kUniform;
      break;
    case 1:
      spec.family = Family::kTree;
      spec.bounds = BoundPolicy::kFixed;
      spec.fixed_bound = 1 + static_cast<long long>(rng.below(2));
      break;
    case 2:
      spec.family = Family::kStar;
      spec.bounds = BoundPolicy::kUniform;
      break;
    case 3:
      spec.family = Family::kPath;
      spec.bounds = BoundPolicy::kFixed;
      spec.fixed_bound = 1 + static_cast<long long>(rng.below(2));
      break;
    case 4:
      spec.family = Family::kComplete;
      spec.n = std::min<std::size_t>(spec.n, 9);
      spec.bounds = BoundPolicy::kFixed;
      spec.fixed_bound = 1;
      break;
    case 5:
      spec.family = Family::kUniform;
      spec.multigraph = true;
      spec.m = 1 + rng.below(2 * spec.n);
      spec.bounds = BoundPolicy::kUniform;
      break;
    case 6:
      spec.family = Family::kUniform;
      spec.m = std::min(3 * spec.n, spec.n * (spec.n - 1) / 2);
      spec.m = std::max<std::size_t>(spec.m, 1);
      spec.bounds = BoundPolicy::kFraction;
      spec.fraction = Rational(1, 2);
      break;
    case 7:
      spec.family = Family::kTree;
      spec.bounds = BoundPolicy::kUniform;
      break;
    case 8:
      spec.family = Family::kUniform;
      spec.m = 1 + rng.below(std::max<std::size_t>(2 * spec.n, 2));
      spec.m = std::min(spec.m, spec.n * (spec.n - 1) / 2);
      spec.bounds = BoundPolicy::kUniform;
      break;
    case 9:
      spec.family = Family::kStar;
      spec.bounds = BoundPolicy::kFraction;
      spec.fraction = Rational(2, 3);
      break;
    default:
      break;
  }
  if (weighted) spec.weights = {{0, 10}};
  return generate(spec);
}

void parallel_for_index(std::size_t count,
                        const std::function<void(std::size_t)>& fn) {
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()),
                            count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  }
  for (std::thread& t : pool) t.join();
}

CertifyConfig CertifyConfig::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw ParameterError(std::string("bad certify config: ") + ex.what());
  }
  CertifyConfig config;
  config.name = j.value("name", config.name);
  config.seed = j.value("seed", config.seed);
  config.count = j.value("count", config.count);
  config.n_max = j.value("n_max", config.n_max);
  config.oracle_limit = j.value("oracle_limit", config.oracle_limit);
  config.weighted_mix = j.value("weighted_mix", config.weighted_mix);
  if (j.contains("eps")) {
    config.eps_values.clear();
    for (const auto& item : j.at("eps")) {
      config.eps_values.push_back(parse_rational(item.get<std::string>()));
    }
  }
  if (config.count < 1) throw ParameterError("certify count must be >= 1");
  if (config.eps_values.empty()) {
    throw ParameterError("certify needs at least one eps");
  }
  return config;
}

nlohmann::ordered_json CertifyConfig::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["seed"] = seed;
  j["count"] = count;
  j["n_max"] = n_max;
  j["oracle_limit"] = oracle_limit;
  j["weighted_mix"] = weighted_mix;
  nlohmann::ordered_json eps = nlohmann::ordered_json::array();
  for (const Rational& e : eps_values) eps.push_back(format_rational(e));
  j["eps"] = std::move(eps);
  return j;
}

nlohmann::ordered_json CertifySummary::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "pdbep-certify/1";
  j["config"] = config.to_json();
  j["instances"] = instances;
  j["runs"] = runs;
  j["ok"] = ok;
  j["violations"] = violations;
  nlohmann::ordered_json solvers = nlohmann::ordered_json::array();
  for (const SolverStats& s : per_solver) {
    nlohmann::ordered_json row;
    row["solver"] = s.solver;
    row["runs"] = s.runs;
    row["violations"] = s.violations;
    row["worst_ratio"] =
        s.worst_ratio ? format_rational(*s.worst_ratio) : "inf";
    solvers.push_back(std::move(row));
  }
  j["per_solver"] = std::move(solvers);
  return j;
}

std::string CertifySummary::to_text() const {
  std::string out;
  out += "certify '" + config.name + "': " + std::to_string(instances) +
         " instances, " + std::to_string(runs) + " runs, " +
         (ok ? "all certificates hold" : "CERTIFICATE VIOLATIONS") + "\n";
  for (const SolverStats& s : per_solver) {
    out += "  " + s.solver + ": " + std::to_string(s.runs) + " runs, " +
           std::to_string(s.violations) + " violations, worst ratio " +
           (s.worst_ratio ? format_rational(*s.worst_ratio) : "inf") + "\n";
  }
  for (const std::string& v : violations) {
    out += "  violation: " + v + "\n";
  }
  return out;
}

CertifySummary certify(const CertifyConfig& config) {
  CertifySummary summary;
  summary.config = config;
  summary.instances = config.count;

  struct Slot {
    std::vector<RunReport> reports;
  };
  std::vector<Slot> slots(static_cast<std::size_t>(config.count));

  parallel_for_index(static_cast<std::size_t>(config.count),
                     [&](std::size_t i) {
    const Instance inst = batch_instance(config.seed, static_cast<int>(i),
                                         config.n_max, config.weighted_mix);
    RunParams params;
    params.oracle_limit = config.oracle_limit;

    std::vector<RunReport>& out = slots[i].reports;
    out.push_back(run(inst, Algorithm::kAddition, params));
    out.push_back(run(inst, Algorithm::kDeletion, params));
    for (const Rational& eps : config.eps_values) {
      RunParams rp = params;
      rp.eps = eps;
      out.push_back(run(inst, Algorithm::kRounding, rp));
    }
    if (inst.weighted()) {
      out.push_back(run(inst, Algorithm::kWeighted, params));
    }
    if (is_tree_instance(inst)) {
      out.push_back(run(inst, Algorithm::kTree, params));
    }
    if (inst.edge_count() <= config.oracle_limit) {
      out.push_back(run(inst, Algorithm::kExact, params));
    }
  });

  std::vector<SolverStats> stats;
  auto stat_of = [&](const std::string& solver) -> SolverStats& {
    for (SolverStats& s : stats) {
      if (s.solver == solver) return s;
    }
    stats.push_back({solver, 0, 0, {}});
    return stats.back();
  };

  for (int i = 0; i < config.count; ++i) {
    for (const RunReport& report : slots[static_cast<std::size_t>(i)].reports) {
      ++summary.runs;
      SolverStats& s = stat_of(report.solver);
      ++s.runs;
      if (!report.ratio) {
        // value 0 under a positive bound: only fine when nothing at all
        // can be packed, which the exact bound would have caught.
      } else if (!s.worst_ratio || *report.ratio > *s.worst_ratio) {
        s.worst_ratio = report.ratio;
      }
      if (!report.all_ok()) {
        ++s.violations;
        std::string what;
        if (!report.feasible) what = "infeasible output";
        if (!report.bound_ok) {
          what += what.empty() ? "" : "; ";
          what += "value above bound";
        }
        for (const NamedCheck& c : report.checks) {
          if (!c.ok) {
            what += what.empty() ? "" : "; ";
            what += "check '" + c.name + "' failed";
          }
        }
        summary.violations.push_back("instance " + std::to_string(i) +
                                     " digest " + report.digest + " solver " +
                                     report.solver + ": " + what);
      }
    }
  }
  std::sort(stats.begin(), stats.end(),
            [](const SolverStats& a, const SolverStats& b) {
              return a.solver < b.solver;
            });
  summary.per_solver = std::move(stats);
  summary.ok = summary.violations.empty();
  return summary;
}

}  // namespace pdbep::harness
