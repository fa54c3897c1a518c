#pragma once

// Test-only reference implementations. Each is written independently of the
// library code path it checks: plain loops, integer arithmetic, brute force.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "shc/graph.hpp"

namespace shc::testing {

/// Happiness with rho = num/den in exact integer arithmetic.
inline bool happy_rational(const Graph& g, const std::vector<Colour>& sigma, Vertex v, std::int64_t num,
                           std::int64_t den) {
  std::int64_t same = 0;
  for (Vertex u : g.neighbours(v)) same += sigma[u] == sigma[v];
  const auto d = static_cast<std::int64_t>(g.degree(v));
  const std::int64_t threshold = (num * d + den - 1) / den;
  return same >= threshold;
}

/// ACD by enumerating every bijection colour -> community.
inline double acd_brute_force(const std::vector<int>& communities, const std::vector<Colour>& sigma, int k) {
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 1);
  std::size_t best = 0;
  do {
    std::size_t agree = 0;
    for (std::size_t v = 0; v < sigma.size(); ++v) agree += perm[sigma[v] - 1] == communities[v];
    best = std::max(best, agree);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<double>(best) / static_cast<double>(sigma.size());
}

/// Half-width of a 3-sigma binomial band for a proportion estimated from
/// `trials` draws with success probability p.
inline double three_sigma(double p, double trials) { return 3.0 * std::sqrt(p * (1.0 - p) / trials); }

/// Erdos-Renyi G(n, p) by all-pairs coin flips.
inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph::build(n, edges);
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::build(n, edges);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph::build(n, edges);
}

/// Star with centre 0 and leaves 1..leaves.
inline Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph::build(leaves + 1, edges);
}

}  // namespace shc::testing
