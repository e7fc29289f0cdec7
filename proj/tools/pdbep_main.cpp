// Command-line front end: solve one instance, generate instances, run a
// certification batch, or print the relaxation-gap table.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pdbep/errors.hpp"
#include "pdbep/generator.hpp"
#include "pdbep/lp.hpp"
#include "pdbep/rounding.hpp"
#include "pdbep/runner.hpp"

namespace {

using namespace pdbep;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParameterError("cannot open output file '" + path + "'");
  out << text;
}

int run_solve(const std::string& input, const std::string& alg_name,
              const std::string& eps_text, const std::string& order,
              long long root, const std::string& format,
              const std::string& dump_lp, const std::string& trace,
              const std::string& pivot_name, bool timing) {
  Instance inst = Instance::parse(read_input(input));

  harness::RunParams params;
  params.eps = parse_rational(eps_text);
  if (order != "natural") {
    if (order.rfind("seed:", 0) != 0) {
      throw ParameterError("--order must be 'natural' or 'seed:<k>'");
    }
    params.order_seed = std::stoull(order.substr(5));
  }
  if (root >= 0) params.root = static_cast<VertexId>(root);
  if (pivot_name == "bland") {
    params.pivot = lp::PivotRule::kBland;
  } else if (pivot_name != "dantzig-bland") {
    throw ParameterError("--pivot must be 'bland' or 'dantzig-bland'");
  }

  if (!dump_lp.empty()) {
    std::vector<bool> committed(inst.vertex_count(), false);
    std::vector<long long> capacity(inst.vertex_count());
    for (VertexId v = 0; v < inst.vertex_count(); ++v) {
      capacity[v] = inst.bound(v);
    }
    std::string text =
        "\\ relaxation lp1\n" + lp::to_lp_format(lp::build_lp1(inst).lp) +
        "\\ relaxation lp2\n" +
        lp::to_lp_format(
            lp::build_lp2(inst, committed, capacity, params.eps).lp);
    write_output(dump_lp, text);
  }

  const harness::Algorithm alg = harness::algorithm_from_name(alg_name);
  if (!trace.empty()) {
    harness::Algorithm resolved =
        alg == harness::Algorithm::kAuto ? harness::resolve_auto(inst) : alg;
    if (resolved != harness::Algorithm::kRounding) {
      throw ParameterError("--trace needs the rounding solver");
    }
    auto [out, state] = rounding::solve_ip2(harness::unweighted_view(inst),
                                            params.eps, params.pivot);
    std::string text;
    for (std::size_t i = 0; i < state.log.size(); ++i) {
      const rounding::IterationRecord& rec = state.log[i];
      nlohmann::ordered_json row;
      row["step"] = i;
      row["lp_index"] = rec.lp_index;
      row["forced"] = rec.forced;
      row["residual"] = rec.residual_edges;
      row["zeroed"] = rec.zeroed;
      if (rec.rounded) {
        row["rounded"] = *rec.rounded;
        row["endpoint"] = *rec.chosen_endpoint;
        row["y"] = format_rational(rec.y_value);
        row["capacity_chosen"] = rec.capacity_chosen;
        row["relax_chosen"] = format_rational(rec.relax_chosen);
        row["capacity_other"] = rec.capacity_other;
        row["relax_other"] = format_rational(rec.relax_other);
      }
      text += row.dump() + "\n";
    }
    write_output(trace, text);
  }

  harness::RunReport report = harness::run(inst, alg, params);

  if (format == "json") {
    std::cout << report.to_json(timing).dump(2) << "\n";
  } else {
    std::cout << "s " << format_rational(report.value) << "\n";
    for (EdgeId e : report.packing) std::cout << "x " << e << "\n";
  }
  if (report.long_run) {
    std::cerr << "warning: rounding took more relaxation solves than "
                 "vertices + 1\n";
  }
  if (!report.all_ok()) {
    std::cerr << "certificate violation on digest " << report.digest << "\n";
    return 1;
  }
  return 0;
}

int run_gen(const std::string& family, std::size_t n, std::size_t m,
            bool multigraph, const std::string& bounds, long long bound_value,
            const std::string& fraction, const std::string& weights,
            std::uint64_t seed, const std::string& output) {
  harness::GeneratorSpec spec;
  spec.family = harness::family_from_name(family);
  spec.n = n;
  spec.m = m;
  spec.multigraph = multigraph;
  spec.bounds = harness::bound_policy_from_name(bounds);
  spec.fixed_bound = bound_value;
  spec.fraction = parse_rational(fraction);
  if (!weights.empty()) {
    auto comma = weights.find(',');
    if (comma == std::string::npos) {
      throw ParameterError("--weights needs the form lo,hi");
    }
    spec.weights = {{std::stoll(weights.substr(0, comma)),
                     std::stoll(weights.substr(comma + 1))}};
  }
  spec.seed = seed;
  write_output(output, harness::generate(spec).serialize());
  return 0;
}

int run_certify(const std::string& config_path, const std::string& format) {
  harness::CertifyConfig config;
  if (!config_path.empty()) {
    config = harness::CertifyConfig::from_json_text(read_input(config_path));
  }
  harness::CertifySummary summary = harness::certify(config);
  if (format == "json") {
    std::cout << summary.to_json().dump(2) << "\n";
  } else {
    std::cout << summary.to_text();
  }
  return summary.ok ? 0 : 1;
}

int run_gap(const std::vector<int>& sizes, std::size_t oracle_limit,
            const std::string& format) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int n : sizes) {
    lp::GapDemoResult gap = lp::gap_demo(n, oracle_limit);
    const Rational ratio = gap.lp1_value / gap.ip_bound;
    if (format == "json") {
      nlohmann::ordered_json row;
      row["n"] = n;
      row["lp1"] = format_rational(gap.lp1_value);
      row["ip_bound"] = format_rational(gap.ip_bound);
      row["ip_exact"] = gap.ip_exact;
      row["ratio"] = format_rational(ratio);
      rows.push_back(std::move(row));
    } else {
      std::cout << "n=" << n << " lp1=" << format_rational(gap.lp1_value)
                << " ip" << (gap.ip_exact ? "=" : "<=")
                << format_rational(gap.ip_bound)
                << " ratio=" << format_rational(ratio) << "\n";
    }
  }
  if (format == "json") std::cout << rows.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"degree-bounded edge packing toolkit"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "solve one instance");
  std::string input = "-";
  std::string alg = "auto";
  std::string eps = "1/100";
  std::string order = "natural";
  long long root = -1;
  std::string format = "text";
  std::string dump_lp;
  std::string trace;
  std::string pivot = "dantzig-bland";
  bool timing = false;
  solve->add_option("--input,-i", input, "instance file, '-' for stdin");
  solve->add_option("--alg,-a", alg,
                    "add|delete|round|weighted|tree|exact|auto");
  solve->add_option("--eps", eps, "rounding penalty parameter");
  solve->add_option("--order", order, "'natural' or 'seed:<k>'");
  solve->add_option("--root", root, "tree root vertex");
  solve->add_option("--format,-f", format, "text|json");
  solve->add_option("--dump-lp", dump_lp, "write both relaxations to a file");
  solve->add_option("--trace", trace,
                    "write the rounding iteration log as json lines");
  solve->add_option("--pivot", pivot, "bland|dantzig-bland");
  solve->add_flag("--timing", timing, "include wall time in json output");

  auto* gen = app.add_subcommand("gen", "generate an instance");
  std::string family = "uniform";
  std::size_t gen_n = 8;
  std::size_t gen_m = 8;
  bool multigraph = false;
  std::string bounds = "degree";
  long long bound_value = 1;
  std::string fraction = "1/2";
  std::string weights;
  std::uint64_t seed = 1;
  std::string output = "-";
  gen->add_option("--family", family, "uniform|tree|complete|star|path");
  gen->add_option("--n", gen_n, "vertex count");
  gen->add_option("--m", gen_m, "edge count (uniform family)");
  gen->add_flag("--multigraph", multigraph, "allow parallel edges");
  gen->add_option("--bounds", bounds, "degree|fixed|uniform|fraction");
  gen->add_option("--bound-value", bound_value, "bound for --bounds=fixed");
  gen->add_option("--fraction", fraction, "ratio for --bounds=fraction");
  gen->add_option("--weights", weights, "lo,hi integer weight range");
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--output,-o", output, "output file, '-' for stdout");

  auto* certify = app.add_subcommand("certify", "run a certification batch");
  std::string config_path;
  std::string certify_format = "text";
  certify->add_option("--config,-c", config_path, "json config file");
  certify->add_option("--format,-f", certify_format, "text|json");

  auto* gap = app.add_subcommand("gap", "relaxation gap growth on cliques");
  std::vector<int> gap_sizes{8, 12, 16};
  std::size_t gap_oracle = 24;
  std::string gap_format = "text";
  gap->add_option("--n", gap_sizes, "clique sizes");
  gap->add_option("--oracle-limit", gap_oracle,
                  "edge cap for the exhaustive reference");
  gap->add_option("--format,-f", gap_format, "text|json");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      return run_solve(input, alg, eps, order, root, format, dump_lp, trace,
                       pivot, timing);
    }
    if (gen->parsed()) {
      return run_gen(family, gen_n, gen_m, multigraph, bounds, bound_value,
                     fraction, weights, seed, output);
    }
    if (certify->parsed()) {
      return run_certify(config_path, certify_format);
    }
    if (gap->parsed()) {
      return run_gap(gap_sizes, gap_oracle, gap_format);
    }
  } catch (const ParseError& ex) {
    std::cerr << "parse error: " << ex.what() << "\n";
    return 2;
  } catch (const ParameterError& ex) {
    std::cerr << "parameter error: " << ex.what() << "\n";
    return 2;
  } catch (const StructureError& ex) {
    std::cerr << "structure error: " << ex.what() << "\n";
    return 2;
  } catch (const RefusalError& ex) {
    std::cerr << "refused: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
