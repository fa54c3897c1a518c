#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "shc/colouring.hpp"
#include "shc/graph.hpp"

namespace shc {

/// ceil(rho * degree), with the product nudged down by 1e-12 so exact integer
/// products (rho = 0.5, degree = 4) do not round up through float error.
std::size_t happy_threshold(std::size_t degree, double rho) noexcept;

struct HappinessReport {
  std::size_t happy_count = 0;
  double alpha = 0.0;
  std::vector<bool> per_vertex;
};

bool is_happy(const Graph& g, std::span<const Colour> sigma, Vertex v, double rho) noexcept;
inline bool is_happy(const Graph& g, const Colouring& sigma, Vertex v, double rho) noexcept {
  return is_happy(g, sigma.values(), v, rho);
}

HappinessReport evaluate(const Graph& g, const Colouring& sigma, double rho);

/// H_rho without the per-vertex vector; the scoring path of the solvers.
std::size_t happy_count(const Graph& g, std::span<const Colour> sigma, double rho) noexcept;

/// Free vertices of pc that are rho-unhappy under sigma, ascending.
std::vector<Vertex> unhappy_free_vertices(const Graph& g, const Colouring& sigma, double rho,
                                          const PartialColouring& pc);

/// Same-colour neighbour counts maintained under single-vertex recolouring,
/// O(deg(v)) per update.
class HappinessTracker {
 public:
  HappinessTracker(const Graph& g, std::span<const Colour> sigma, double rho);

  void recolour(Vertex v, Colour c);

  Colour colour(Vertex v) const noexcept { return colours_[v]; }
  std::span<const Colour> colours() const noexcept { return colours_; }
  bool happy(Vertex v) const noexcept { return same_[v] >= threshold_[v]; }
  std::size_t happy_count() const noexcept { return happy_count_; }
  std::size_t same_colour_neighbours(Vertex v) const noexcept { return same_[v]; }

 private:
  void set_same(Vertex v, std::uint32_t value) noexcept;

  const Graph* g_;
  std::vector<Colour> colours_;
  std::vector<std::uint32_t> same_;
  std::vector<std::uint32_t> threshold_;
  std::size_t happy_count_ = 0;
};

struct OptimumResult {
  Colouring colouring;
  std::size_t happy = 0;
};

/// Brute-force maximiser of H_rho over all k^|free| extensions of pc. Ties go to
/// the lexicographically smallest colour vector over the free vertices.
/// Throws Error{BudgetExceeded} when k^|free| > budget_limit.
OptimumResult exhaustive_optimum(const Graph& g, const PartialColouring& pc, double rho,
                                 std::size_t budget_limit = std::size_t{1} << 24);

}  // namespace shc
