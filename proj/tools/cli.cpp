#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "shc/acd.hpp"
#include "shc/aggregate.hpp"
#include "shc/dimacs.hpp"
#include "shc/error.hpp"
#include "shc/happiness.hpp"
#include "shc/sbm.hpp"
#include "shc/solve.hpp"
#include "shc/suite.hpp"

namespace shc::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

void add_suite_options(CLI::App& cmd, SuiteSpec& spec) {
  cmd.add_option("--n-min", spec.n_min, "Smallest vertex count")->capture_default_str();
  cmd.add_option("--n-max", spec.n_max, "Vertex count upper bound (exclusive)")->capture_default_str();
  cmd.add_option("--n-step", spec.n_step, "Step between vertex counts")->capture_default_str();
  cmd.add_option("--per-n", spec.instances_per_n, "Instances per vertex count")->capture_default_str();
  cmd.add_option("--k-min", spec.k_min, "Smallest colour count")->capture_default_str();
  cmd.add_option("--k-max", spec.k_max, "Largest colour count")->capture_default_str();
  cmd.add_option("--p-max", spec.p_max, "p drawn from (0, p-max]")->capture_default_str();
  cmd.add_option("--q-ratio", spec.q_ratio, "q drawn from (0, q-ratio * p]")->capture_default_str();
  cmd.add_option("--rho-min", spec.rho_min, "rho drawn from (rho-min, rho-max]")->capture_default_str();
  cmd.add_option("--rho-max", spec.rho_max)->capture_default_str();
  cmd.add_option("--precolour-fraction", spec.precolour_fraction)->capture_default_str();
  cmd.add_option("--epsilon", spec.epsilon, "Confidence parameter for the finite-n threshold")->capture_default_str();
  cmd.add_option("--seed", spec.master_seed, "Master seed")->capture_default_str();
}

std::vector<Algo> parse_algos(const std::vector<std::string>& names) {
  std::vector<Algo> out;
  for (const auto& name : names) {
    auto a = algo_from_string(name);
    if (!a) throw Error(ErrorCode::InvalidArgument, "unknown algorithm '" + name + "'");
    out.push_back(*a);
  }
  return out;
}

fs::path default_sidecar(const fs::path& instance) {
  fs::path gt = instance;
  gt.replace_extension(".gt");
  return gt;
}

struct GenArgs {
  SuiteSpec spec;
  fs::path out_dir = "suite";
  std::optional<std::size_t> limit;
  // Single-instance mode.
  std::optional<std::size_t> n;
  int k = 4;
  double p = 0.3;
  double q = 0.05;
  std::optional<double> rho;
  std::string stem = "instance";
};

int run_gen(const GenArgs& a, std::ostream& out) {
  if (a.n) {
    SbmParams params;
    params.n = *a.n;
    params.k = a.k;
    params.p = a.p;
    params.q = a.q;
    params.precolour_fraction = a.spec.precolour_fraction;
    params.epsilon = a.spec.epsilon;
    params.seed = a.spec.master_seed;
    const SbmInstance inst = generate(params);
    fs::create_directories(a.out_dir);
    const fs::path col = a.out_dir / (a.stem + ".col");
    write_instance_file(col, inst.to_instance(a.rho));
    write_ground_truth(a.out_dir / (a.stem + ".gt"), inst.communities);
    const auto t = thresholds(params);
    ordered_json j = {{"file", col.string()},
                      {"n", params.n},
                      {"m", inst.graph.edge_count()},
                      {"mu", t.mu},
                      {"xi_tilde", t.xi_tilde},
                      {"xi", t.xi}};
    if (a.rho) j["regime"] = std::string(to_string(classify_regime(*a.rho, t)));
    out << j.dump() << '\n';
    return 0;
  }
  write_suite(a.spec, a.out_dir, a.limit);
  std::size_t count = a.spec.instance_count();
  if (a.limit) count = std::min(count, *a.limit);
  out << ordered_json{{"instances", count}, {"manifest", (a.out_dir / "manifest.jsonl").string()}}.dump() << '\n';
  return 0;
}

struct SolveArgs {
  fs::path instance;
  std::string algo = "cels";
  std::optional<double> rho;
  SolveOptions options;
  std::optional<std::size_t> max_gens;
  std::optional<fs::path> ground_truth;
  bool timing = false;
};

int run_solve(SolveArgs a, std::ostream& out) {
  const auto algo = algo_from_string(a.algo);
  if (!algo) throw Error(ErrorCode::InvalidArgument, "unknown algorithm '" + a.algo + "'");
  const Instance inst = read_instance_file(a.instance);
  const std::optional<double> rho = a.rho ? a.rho : inst.metadata.rho;
  if (!rho) throw Error(ErrorCode::InvalidArgument, "no --rho given and the instance header has no rho");
  if (*rho < 0.0 || *rho > 1.0) throw Error(ErrorCode::InvalidArgument, "rho must lie in [0, 1]");
  a.options.ce.max_generations = a.max_gens;

  const SolveResult res = solve(*algo, inst.graph, inst.precolouring, *rho, a.options);

  ordered_json j;
  j["algo"] = a.algo;
  j["n"] = inst.graph.vertex_count();
  j["m"] = inst.graph.edge_count();
  j["k"] = inst.precolouring.k();
  j["rho"] = *rho;
  j["seed"] = a.options.ce.seed;
  j["happy"] = res.happy;
  j["alpha"] = res.alpha;
  j["generations"] = res.generations;
  j["samples_evaluated"] = res.samples_evaluated;
  j["converged"] = res.converged;
  const fs::path gt = a.ground_truth.value_or(default_sidecar(a.instance));
  if (a.ground_truth || fs::exists(gt)) {
    const auto communities = read_ground_truth(gt, inst.graph.vertex_count());
    j["acd"] = acd(communities, res.best, inst.precolouring.k());
  }
  if (a.timing) j["wall_time"] = res.wall_time;
  j["colouring"] = std::vector<int>(res.best.values().begin(), res.best.values().end());
  out << j.dump() << '\n';
  return 0;
}

struct BenchArgs {
  SuiteSpec spec;
  std::vector<std::string> algos{"ce", "cels"};
  Budget budget;
  RunSuiteOptions options;
  fs::path ledger = "ledger.jsonl";
};

int run_bench(BenchArgs a, std::ostream& out, std::ostream& err) {
  const auto algos = parse_algos(a.algos);
  a.options.ledger = a.ledger;
  a.options.on_record = [&err](const ExperimentRecord& r) {
    err << r.instance_id << ' ' << r.algo << " alpha=" << r.alpha << " regime=" << to_string(r.regime) << '\n';
  };
  if (!a.options.resume && fs::exists(a.ledger)) fs::remove(a.ledger);
  const auto produced = run_suite(a.spec, algos, a.budget, a.options);
  out << ordered_json{{"ledger", a.ledger.string()}, {"records_written", produced.size()}}.dump() << '\n';
  return 0;
}

struct StatsArgs {
  fs::path ledger = "ledger.jsonl";
  std::string group_by = "algo";
  std::optional<fs::path> csv;
  std::optional<fs::path> welch;
  bool histogram = false;
};

int run_stats(const StatsArgs& a, std::ostream& out) {
  const auto group = group_by_from_string(a.group_by);
  if (!group) throw Error(ErrorCode::InvalidArgument, "unknown --group-by '" + a.group_by + "'");
  const auto records = read_ledger(a.ledger);
  const auto table = aggregate(records, *group);
  if (a.csv) {
    std::ofstream f(*a.csv, std::ios::trunc);
    if (!f) throw Error(ErrorCode::IoError, "cannot write " + a.csv->string());
    write_csv(f, table, a.histogram);
  } else {
    write_csv(out, table, a.histogram);
  }
  if (a.welch) {
    std::ofstream f(*a.welch, std::ios::trunc);
    if (!f) throw Error(ErrorCode::IoError, "cannot write " + a.welch->string());
    write_welch_csv(f, welch_matrix(records));
  }
  return 0;
}

struct OracleArgs {
  fs::path instance;
  std::optional<double> rho;
  std::size_t budget_limit = std::size_t{1} << 24;
};

int run_oracle(const OracleArgs& a, std::ostream& out) {
  const Instance inst = read_instance_file(a.instance);
  const std::optional<double> rho = a.rho ? a.rho : inst.metadata.rho;
  if (!rho) throw Error(ErrorCode::InvalidArgument, "no --rho given and the instance header has no rho");
  const auto best = exhaustive_optimum(inst.graph, inst.precolouring, *rho, a.budget_limit);
  ordered_json j;
  j["n"] = inst.graph.vertex_count();
  j["rho"] = *rho;
  j["happy"] = best.happy;
  j["alpha"] = static_cast<double>(best.happy) / static_cast<double>(inst.graph.vertex_count());
  j["colouring"] = std::vector<int>(best.colouring.values().begin(), best.colouring.values().end());
  out << j.dump() << '\n';
  return 0;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Soft happy colouring solvers and SBM benchmark harness", "shc"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate SBM instances (.col + .gt sidecar, manifest.jsonl)");
  add_suite_options(*gen_cmd, gen.spec);
  gen_cmd->add_option("--out-dir", gen.out_dir, "Output directory")->capture_default_str();
  gen_cmd->add_option("--limit", gen.limit, "Write only the first N suite instances");
  gen_cmd->add_option("--n", gen.n, "Single-instance mode: vertex count");
  gen_cmd->add_option("--k", gen.k, "Single-instance mode: communities")->capture_default_str();
  gen_cmd->add_option("--p", gen.p, "Single-instance mode: intra-community probability")->capture_default_str();
  gen_cmd->add_option("--q", gen.q, "Single-instance mode: inter-community probability")->capture_default_str();
  gen_cmd->add_option("--rho", gen.rho, "Single-instance mode: rho recorded in the header");
  gen_cmd->add_option("--stem", gen.stem, "Single-instance mode: file stem")->capture_default_str();

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance and print a JSON result");
  solve_cmd->add_option("--instance", solve_args.instance, "Extended DIMACS instance")->required();
  solve_cmd->add_option("--algo", solve_args.algo, "ce | cels | lmc | ls | rls")->capture_default_str();
  solve_cmd->add_option("--rho", solve_args.rho, "Happiness proportion (default: header value)");
  solve_cmd->add_option("--time-limit", solve_args.options.ce.time_limit, "Seconds")->capture_default_str();
  solve_cmd->add_option("--pop", solve_args.options.ce.population_size)->capture_default_str();
  solve_cmd->add_option("--elite-frac", solve_args.options.ce.elite_fraction)->capture_default_str();
  solve_cmd->add_option("--beta", solve_args.options.ce.beta, "Smoothing factor")->capture_default_str();
  solve_cmd->add_option("--seed", solve_args.options.ce.seed)->capture_default_str();
  solve_cmd->add_option("--max-gens", solve_args.max_gens, "Generation cap");
  solve_cmd->add_option("--workers", solve_args.options.ce.workers, "Sampling threads")->capture_default_str();
  solve_cmd->add_option("--max-passes", solve_args.options.rls_max_passes, "RLS pass cap")->capture_default_str();
  solve_cmd->add_flag("--literal-incumbent", solve_args.options.ce.literal_incumbent,
                      "Replace the incumbent with every generation's best");
  solve_cmd->add_option("--gt", solve_args.ground_truth, "Ground-truth sidecar (default: <stem>.gt if present)");
  solve_cmd->add_flag("--timing", solve_args.timing, "Include wall_time in the output");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run algorithms over a generated suite into a JSON-lines ledger");
  add_suite_options(*bench_cmd, bench.spec);
  bench_cmd->add_option("--algos", bench.algos, "Algorithms")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--budget", bench.budget.time_limit, "Seconds per (instance, algorithm)")
      ->capture_default_str();
  bench_cmd->add_option("--max-gens", bench.budget.max_generations, "Generation cap");
  bench_cmd->add_option("--out", bench.ledger, "Ledger path")->capture_default_str();
  bench_cmd->add_flag("--resume", bench.options.resume, "Skip pairs already in the ledger");
  bench_cmd->add_option("--workers", bench.options.workers, "Concurrent runs")->capture_default_str();
  bench_cmd->add_option("--limit", bench.options.limit, "Run only the first N instances");

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Aggregate a ledger to CSV and compute pairwise Welch tests");
  stats_cmd->add_option("--ledger", stats.ledger)->capture_default_str();
  stats_cmd->add_option("--group-by", stats.group_by, "algo | regime | n | rho | k")->capture_default_str();
  stats_cmd->add_option("--csv", stats.csv, "CSV output path (default stdout)");
  stats_cmd->add_flag("--hist", stats.histogram, "Append hist_0..hist_99 columns");
  stats_cmd->add_option("--welch", stats.welch, "Write the Welch p-value matrix CSV here");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive optimum of a small instance");
  oracle_cmd->add_option("--instance", oracle.instance)->required();
  oracle_cmd->add_option("--rho", oracle.rho);
  oracle_cmd->add_option("--budget-limit", oracle.budget_limit, "Maximum extensions to enumerate")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    app.exit(e, msg, msg);
    err << msg.str();
    return e.get_exit_code();
  }

  try {
    if (*gen_cmd) return run_gen(gen, out);
    if (*solve_cmd) return run_solve(solve_args, out);
    if (*bench_cmd) return run_bench(bench, out, err);
    if (*stats_cmd) return run_stats(stats, out);
    if (*oracle_cmd) return run_oracle(oracle, out);
  } catch (const std::exception& e) {
    err << "shc: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace shc::cli
