#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shc/sbm.hpp"
#include "shc/solve.hpp"

namespace shc {

/// Benchmark grid. Instance i has n = n_min + (i / instances_per_n) * n_step;
/// k, p, q, rho are drawn uniformly from their ranges with the instance's
/// derived seed mix(master_seed, i).
struct SuiteSpec {
  std::size_t n_min = 200;
  std::size_t n_max = 3000;  // exclusive
  std::size_t n_step = 1;
  std::size_t instances_per_n = 10;
  int k_min = 2;
  int k_max = 20;
  double p_max = 1.0;       // p ~ U(0, p_max]
  double q_ratio = 0.5;     // q ~ U(0, q_ratio * p]
  double rho_min = 0.0;     // rho ~ U(rho_min, rho_max]
  double rho_max = 1.0;
  double precolour_fraction = 0.05;
  double epsilon = 0.1;
  std::uint64_t master_seed = 1;

  std::size_t instance_count() const noexcept;
  /// Throws Error{InvalidArgument}.
  void validate() const;
};

struct SuiteInstance {
  std::string id;
  std::size_t index = 0;
  SbmInstance sbm;
  double rho = 0.0;
  RegimeThresholds thresholds;
  Regime regime = Regime::Mild;
};

SuiteInstance make_suite_instance(const SuiteSpec& spec, std::size_t index);

struct ExperimentRecord {
  std::string instance_id;
  std::size_t n = 0;
  int k = 0;
  double p = 0.0;
  double q = 0.0;
  double rho = 0.0;
  std::uint64_t seed = 0;
  double mu = 0.0;
  double xi_tilde = 0.0;
  Regime regime = Regime::Mild;
  std::string algo;
  double alpha = 0.0;
  std::size_t happy = 0;
  double acd = 0.0;
  double wall_time = 0.0;
  std::size_t generations = 0;
  bool converged = false;

  friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

/// One JSON object per line, no trailing newline.
std::string to_json_line(const ExperimentRecord& r);
/// Throws Error{SyntaxError} on malformed input.
ExperimentRecord record_from_json_line(std::string_view line);

/// Reads every record in a JSON-lines ledger; a truncated final line (from an
/// interrupted append) is skipped.
std::vector<ExperimentRecord> read_ledger(const std::filesystem::path& path);

struct Budget {
  double time_limit = 600.0;
  std::optional<std::size_t> max_generations;
  std::size_t rls_max_passes = 50;
};

struct RunSuiteOptions {
  std::filesystem::path ledger;  // empty: keep records in memory only
  bool resume = false;           // skip (instance, algo) pairs already in the ledger
  std::size_t workers = 1;       // concurrent (instance, algo) pairs
  std::optional<std::size_t> limit;  // run only the first `limit` instances
  std::function<void(const ExperimentRecord&)> on_record;
};

/// Solver seed for an (instance, algorithm) pair.
std::uint64_t solver_seed(const SuiteInstance& inst, Algo algo) noexcept;

ExperimentRecord run_one(const SuiteInstance& inst, Algo algo, const Budget& budget);

/// Runs every algorithm on every suite instance, appending each record to the
/// ledger as soon as it completes. Returns the newly produced records; with
/// resume, pairs already present are skipped. Throws Error{IoError}.
std::vector<ExperimentRecord> run_suite(const SuiteSpec& spec, std::span<const Algo> algos, const Budget& budget,
                                        const RunSuiteOptions& options = {});

/// Writes <dir>/<id>.col, <dir>/<id>.gt and a manifest.jsonl line per instance.
void write_suite(const SuiteSpec& spec, const std::filesystem::path& dir, std::optional<std::size_t> limit = {});

}  // namespace shc
