#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "shc/colouring.hpp"
#include "shc/graph.hpp"
#include "shc/rng.hpp"

namespace shc {

struct HeuristicOutcome {
  Colouring colouring;
  std::size_t passes = 0;
  std::size_t recoloured = 0;  // vertices whose final colour differs from the input
};

/// Local Maximal Colouring. Repeatedly picks a uniformly random uncoloured
/// vertex adjacent to the coloured set and gives it the plurality colour of its
/// coloured neighbours. When that frontier is empty while vertices remain
/// uncoloured, a uniformly random uncoloured vertex is seeded with a uniformly
/// random colour.
Colouring lmc(const Graph& g, const PartialColouring& pc, Rng& rng);

/// Reusable single-pass local search bound to one instance. The inner loop of
/// the hybrid solver calls pass() on every sample.
class LocalSearch {
 public:
  LocalSearch(const Graph& g, const PartialColouring& pc, double rho);

  /// One pass: U = unhappy free vertices at entry, visited in uniformly random
  /// order; each v takes the plurality colour of N(v) under the working
  /// colouring if it differs from its own. Returns the number of moves.
  std::size_t pass(std::span<Colour> sigma, Rng& rng);

 private:
  const Graph* g_;
  const PartialColouring* pc_;
  double rho_;
  PluralityCounter counter_;
  std::vector<Vertex> unhappy_;
};

Colouring ls(const Graph& g, const Colouring& sigma, const PartialColouring& pc, double rho, Rng& rng);

/// Repeated LS passes, refilling U before each. Stops when U is empty, a pass
/// makes no move, or max_passes passes have run.
HeuristicOutcome rls(const Graph& g, const Colouring& sigma, const PartialColouring& pc, double rho, Rng& rng,
                     std::size_t max_passes = 50);

}  // namespace shc
