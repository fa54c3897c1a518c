#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "shc/colouring.hpp"
#include "shc/dimacs.hpp"
#include "shc/graph.hpp"

namespace shc {

struct SbmParams {
  std::size_t n = 0;
  int k = 2;
  double p = 0.5;   // intra-community edge probability, (0, 1]
  double q = 0.1;   // inter-community edge probability, (0, p)
  double precolour_fraction = 0.05;
  std::uint64_t seed = 0;
  double epsilon = 0.1;
};

/// Throws Error{InvalidArgument} unless 0 < q < p <= 1, k >= 2, n >= k,
/// 0 < precolour_fraction <= 1 and 0 < epsilon < 1.
void validate(const SbmParams& params);

struct SbmInstance {
  Graph graph;
  std::vector<int> communities;  // per vertex, 1..k
  PartialColouring precolouring;
  SbmParams params;

  /// Planted colouring: every vertex coloured by its community.
  Colouring planted() const;
  /// DIMACS view with k, p, q, seed, n_communities (and rho if given) in the header.
  Instance to_instance(std::optional<double> rho = std::nullopt) const;
};

/// Samples G(n, k, p, q) with balanced communities and a per-community
/// precolouring of ceil(fraction * size) uniformly chosen members. Vertex
/// labels are a uniform permutation of the block layout. Bit-reproducible from
/// params.seed.
SbmInstance generate(const SbmParams& params);

struct RegimeThresholds {
  double mu = 0;
  double xi_tilde = 0;
  double xi = 0;
  /// False when the log argument of the finite-n threshold is non-positive;
  /// that branch is then taken as -inf and xi clamps to 0.
  bool xi_log_branch_finite = true;
};

/// Thresholds from raw parameters; only requires p > 0, q >= 0, k >= 2, n >= 1.
RegimeThresholds compute_thresholds(int k, double p, double q, std::size_t n, double epsilon);
RegimeThresholds thresholds(const SbmParams& params);

/// (k/n) ln(eps) - [q(k-1)(e^rho - 1) + p(e^rho - e)]; positive iff the planted
/// colouring's feasibility inequality holds.
double feasibility_margin(const SbmParams& params, double rho);

enum class Regime { Mild, Intermediate, Tight };

/// Mild: rho < mu. Intermediate: mu <= rho <= xi_tilde. Tight: rho > xi_tilde.
Regime classify_regime(double rho, const RegimeThresholds& t) noexcept;

std::string_view to_string(Regime r) noexcept;
std::optional<Regime> regime_from_string(std::string_view s) noexcept;

}  // namespace shc
