#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "shc/colouring.hpp"
#include "shc/graph.hpp"
#include "shc/rng.hpp"

namespace shc {

/// Per-free-vertex categorical distributions over colours 1..k, stored flat
/// (row i belongs to vertices()[i], entry j to colour j + 1).
class ProbModel {
 public:
  ProbModel() = default;
  /// Uniform 1/k rows for the given vertices.
  ProbModel(std::vector<Vertex> vertices, int k);

  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  std::span<const Vertex> vertices() const noexcept { return vertices_; }

  std::span<const double> row(std::size_t i) const noexcept {
    return {probs_.data() + i * static_cast<std::size_t>(k_), static_cast<std::size_t>(k_)};
  }
  std::span<double> row(std::size_t i) noexcept {
    return {probs_.data() + i * static_cast<std::size_t>(k_), static_cast<std::size_t>(k_)};
  }

  friend bool operator==(const ProbModel&, const ProbModel&) = default;

 private:
  int k_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<double> probs_;
};

ProbModel init_probs(const PartialColouring& pc, int k);

/// Draws every modelled vertex's colour from its row; other entries untouched.
void draw_colouring(const ProbModel& model, std::span<Colour> sigma, Rng& rng);

/// In-place post-processing of a freshly drawn sample (the LS hook).
using Improver = std::function<void(std::span<Colour>, Rng&)>;

/// `size` colourings extending pc, sample i drawn from its own stream
/// mix(stream_seed, i). With an improver, each raw draw is replaced by
/// improver(draw) using the same stream.
std::vector<Colouring> sample_population(const PartialColouring& pc, const ProbModel& model, std::size_t size,
                                         std::uint64_t stream_seed, const Improver& improver = {});

/// Indices of the elite_size highest scores; ties at the cutoff go to the
/// earlier index. Result is ordered best first.
std::vector<std::size_t> select_elite(std::span<const std::size_t> scores, std::size_t elite_size);

std::vector<Colouring> select_elite(const std::vector<Colouring>& population, std::span<const std::size_t> scores,
                                    std::size_t elite_size);

/// P_v <- beta * (elite frequency of each colour at v) + (1 - beta) * P_v.
void update_probs_in_place(ProbModel& model, std::span<const std::span<const Colour>> elite, double beta);
ProbModel update_probs(const ProbModel& old, const std::vector<Colouring>& elite, double beta);

struct CeParams {
  std::size_t population_size = 20;
  double elite_fraction = 0.15;
  double beta = 0.1;
  double time_limit = 600.0;  // seconds of wall clock
  std::optional<std::size_t> max_generations;
  std::uint64_t seed = 0;
  bool use_ls = false;
  /// Sampling threads; results are identical for every value.
  std::size_t workers = 1;
  /// Overwrite the incumbent with each generation's best, even when worse.
  bool literal_incumbent = false;

  /// max(1, round(elite_fraction * population_size)), capped at population_size.
  std::size_t elite_size() const noexcept;
  /// Throws Error{InvalidArgument} on out-of-range fields.
  void validate() const;
};

struct SolveResult {
  Colouring best;
  std::size_t happy = 0;
  double alpha = 0.0;
  std::size_t generations = 0;
  std::size_t samples_evaluated = 0;
  double wall_time = 0.0;  // seconds; a generation running at the deadline is completed
  bool converged = false;  // happy == n
};

/// Cross-entropy search over extensions of pc maximising H_rho. Samples are
/// drawn from the model (and passed through one LS pass when use_ls), scored,
/// the best-ever sample is kept as incumbent, and the model is smoothed toward
/// the elite. Stops once time_limit or max_generations is reached, or when every
/// vertex is happy. At least one generation runs whenever a free vertex exists.
SolveResult run(const Graph& g, const PartialColouring& pc, double rho, const CeParams& params);

}  // namespace shc
