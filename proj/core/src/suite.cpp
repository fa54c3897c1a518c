#include "shc/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <json.hpp>
#include <mutex>
#include <set>
#include <thread>

#include "shc/acd.hpp"
#include "shc/error.hpp"

namespace shc {

using nlohmann::json;

std::size_t SuiteSpec::instance_count() const noexcept {
  if (n_max <= n_min || n_step == 0) return 0;
  return ((n_max - n_min + n_step - 1) / n_step) * instances_per_n;
}

void SuiteSpec::validate() const {
  auto fail = [](const char* msg) { throw Error(ErrorCode::InvalidArgument, msg); };
  if (n_max <= n_min || n_step == 0 || instances_per_n == 0) fail("empty n grid");
  if (k_min < 2 || k_max < k_min) fail("k range must satisfy 2 <= k_min <= k_max");
  if (n_min < static_cast<std::size_t>(k_min)) fail("n_min must be at least k_min");
  if (!(p_max > 0.0 && p_max <= 1.0)) fail("p_max must lie in (0, 1]");
  if (!(q_ratio > 0.0 && q_ratio < 1.0)) fail("q_ratio must lie in (0, 1)");
  if (!(rho_min >= 0.0 && rho_min < rho_max && rho_max <= 1.0)) fail("rho range must satisfy 0 <= min < max <= 1");
}

SuiteInstance make_suite_instance(const SuiteSpec& spec, std::size_t index) {
  spec.validate();
  const std::uint64_t seed = mix(spec.master_seed, index);
  Rng rng = make_stream(seed, {0x5eedULL});
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  // 1 - U[0, 1) lies in (0, 1].
  auto open_closed = [&] { return 1.0 - unit(rng); };

  SbmParams params;
  params.n = spec.n_min + (index / spec.instances_per_n) * spec.n_step;
  const int k_hi = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(spec.k_max), params.n));
  params.k = std::uniform_int_distribution<int>(spec.k_min, k_hi)(rng);
  params.p = spec.p_max * open_closed();
  params.q = spec.q_ratio * params.p * open_closed();
  params.precolour_fraction = spec.precolour_fraction;
  params.epsilon = spec.epsilon;
  params.seed = seed;
  const double rho = spec.rho_min + (spec.rho_max - spec.rho_min) * open_closed();

  SuiteInstance inst;
  char id[32];
  std::snprintf(id, sizeof id, "i%06zu", index);
  inst.id = id;
  inst.index = index;
  inst.sbm = generate(params);
  inst.rho = rho;
  inst.thresholds = thresholds(params);
  inst.regime = classify_regime(rho, inst.thresholds);
  return inst;
}

std::string to_json_line(const ExperimentRecord& r) {
  json j = {
      {"instance", r.instance_id},
      {"n", r.n},
      {"k", r.k},
      {"p", r.p},
      {"q", r.q},
      {"rho", r.rho},
      {"seed", r.seed},
      {"mu", r.mu},
      {"xi_tilde", r.xi_tilde},
      {"regime", std::string(to_string(r.regime))},
      {"algo", r.algo},
      {"alpha", r.alpha},
      {"happy", r.happy},
      {"acd", r.acd},
      {"wall_time", r.wall_time},
      {"generations", r.generations},
      {"converged", r.converged},
  };
  return j.dump();
}

ExperimentRecord record_from_json_line(std::string_view line) {
  try {
    const json j = json::parse(line);
    ExperimentRecord r;
    r.instance_id = j.at("instance").get<std::string>();
    r.n = j.at("n").get<std::size_t>();
    r.k = j.at("k").get<int>();
    r.p = j.at("p").get<double>();
    r.q = j.at("q").get<double>();
    r.rho = j.at("rho").get<double>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.mu = j.at("mu").get<double>();
    r.xi_tilde = j.at("xi_tilde").get<double>();
    const auto regime = regime_from_string(j.at("regime").get<std::string>());
    if (!regime) throw Error(ErrorCode::SyntaxError, "unknown regime");
    r.regime = *regime;
    r.algo = j.at("algo").get<std::string>();
    r.alpha = j.at("alpha").get<double>();
    r.happy = j.at("happy").get<std::size_t>();
    r.acd = j.at("acd").get<double>();
    r.wall_time = j.at("wall_time").get<double>();
    r.generations = j.at("generations").get<std::size_t>();
    r.converged = j.at("converged").get<bool>();
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::SyntaxError, std::string("ledger record: ") + e.what());
  }
}

std::vector<ExperimentRecord> read_ledger(const std::filesystem::path& path) {
  std::vector<ExperimentRecord> out;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      out.push_back(record_from_json_line(line));
    } catch (const Error&) {
      if (in.peek() != std::char_traits<char>::eof()) throw;
    }
  }
  return out;
}

namespace {

// Cuts a partial last line left by an interrupted append.
void drop_partial_tail(const std::filesystem::path& path) {
  std::error_code ec;
  const auto size = std::filesystem::file_size(path, ec);
  if (ec || size == 0) return;
  std::ifstream in(path, std::ios::binary);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (text.back() == '\n') return;
  const auto last = text.rfind('\n');
  std::filesystem::resize_file(path, last == std::string::npos ? 0 : last + 1);
}

}  // namespace

std::uint64_t solver_seed(const SuiteInstance& inst, Algo algo) noexcept {
  return mix(inst.sbm.params.seed, {0xce5017e5ULL, static_cast<std::uint64_t>(algo)});
}

ExperimentRecord run_one(const SuiteInstance& inst, Algo algo, const Budget& budget) {
  SolveOptions options;
  options.ce.time_limit = budget.time_limit;
  options.ce.max_generations = budget.max_generations;
  options.ce.seed = solver_seed(inst, algo);
  options.rls_max_passes = budget.rls_max_passes;
  const SolveResult res = solve(algo, inst.sbm.graph, inst.sbm.precolouring, inst.rho, options);

  ExperimentRecord r;
  r.instance_id = inst.id;
  r.n = inst.sbm.params.n;
  r.k = inst.sbm.params.k;
  r.p = inst.sbm.params.p;
  r.q = inst.sbm.params.q;
  r.rho = inst.rho;
  r.seed = inst.sbm.params.seed;
  r.mu = inst.thresholds.mu;
  r.xi_tilde = inst.thresholds.xi_tilde;
  r.regime = inst.regime;
  r.algo = std::string(to_string(algo));
  r.alpha = res.alpha;
  r.happy = res.happy;
  r.acd = acd(inst.sbm.communities, res.best, inst.sbm.params.k);
  r.wall_time = res.wall_time;
  r.generations = res.generations;
  r.converged = res.converged;
  return r;
}

std::vector<ExperimentRecord> run_suite(const SuiteSpec& spec, std::span<const Algo> algos, const Budget& budget,
                                        const RunSuiteOptions& options) {
  spec.validate();
  std::set<std::pair<std::string, std::string>> done;
  if (options.resume && !options.ledger.empty()) {
    drop_partial_tail(options.ledger);
    for (const auto& r : read_ledger(options.ledger)) done.emplace(r.instance_id, r.algo);
  }

  std::size_t count = spec.instance_count();
  if (options.limit) count = std::min(count, *options.limit);

  struct Task {
    std::size_t index;
    Algo algo;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < count; ++i) {
    char id[32];
    std::snprintf(id, sizeof id, "i%06zu", i);
    for (Algo a : algos) {
      if (!done.contains({id, std::string(to_string(a))})) tasks.push_back({i, a});
    }
  }

  std::ofstream ledger;
  if (!options.ledger.empty()) {
    ledger.open(options.ledger, std::ios::app);
    if (!ledger) throw Error(ErrorCode::IoError, "cannot open ledger " + options.ledger.string());
  }

  std::vector<std::optional<ExperimentRecord>> results(tasks.size());
  std::mutex sink;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;

  auto worker = [&] {
    while (!failed) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size()) return;
      try {
        const SuiteInstance inst = make_suite_instance(spec, tasks[t].index);
        ExperimentRecord rec = run_one(inst, tasks[t].algo, budget);
        std::lock_guard lock(sink);
        if (ledger.is_open()) {
          ledger << to_json_line(rec) << '\n';
          ledger.flush();
          if (!ledger) throw Error(ErrorCode::IoError, "ledger write failed");
        }
        if (options.on_record) options.on_record(rec);
        results[t] = std::move(rec);
      } catch (...) {
        std::lock_guard lock(sink);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min(options.workers, tasks.size()));
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }
  if (error) std::rethrow_exception(error);

  std::vector<ExperimentRecord> out;
  out.reserve(results.size());
  for (auto& r : results) {
    if (r) out.push_back(std::move(*r));
  }
  return out;
}

void write_suite(const SuiteSpec& spec, const std::filesystem::path& dir, std::optional<std::size_t> limit) {
  spec.validate();
  std::filesystem::create_directories(dir);
  std::ofstream manifest(dir / "manifest.jsonl", std::ios::trunc);
  if (!manifest) throw Error(ErrorCode::IoError, "cannot write manifest in " + dir.string());

  std::size_t count = spec.instance_count();
  if (limit) count = std::min(count, *limit);
  for (std::size_t i = 0; i < count; ++i) {
    const SuiteInstance inst = make_suite_instance(spec, i);
    const auto& params = inst.sbm.params;
    write_instance_file(dir / (inst.id + ".col"), inst.sbm.to_instance(inst.rho));
    write_ground_truth(dir / (inst.id + ".gt"), inst.sbm.communities);
    json j = {
        {"instance", inst.id},
        {"file", inst.id + ".col"},
        {"n", params.n},
        {"k", params.k},
        {"p", params.p},
        {"q", params.q},
        {"rho", inst.rho},
        {"seed", params.seed},
        {"precolour_fraction", params.precolour_fraction},
        {"epsilon", params.epsilon},
        {"m", inst.sbm.graph.edge_count()},
        {"mu", inst.thresholds.mu},
        {"xi_tilde", inst.thresholds.xi_tilde},
        {"xi", inst.thresholds.xi},
        {"regime", std::string(to_string(inst.regime))},
    };
    manifest << j.dump() << '\n';
  }
  if (!manifest) throw Error(ErrorCode::IoError, "manifest write failed");
}

}  // namespace shc
