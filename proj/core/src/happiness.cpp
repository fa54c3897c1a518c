#include "shc/happiness.hpp"

#include <cmath>
#include <string>

#include "shc/error.hpp"

namespace shc {

std::size_t happy_threshold(std::size_t degree, double rho) noexcept {
  const double t = std::ceil(rho * static_cast<double>(degree) - 1e-12);
  return t <= 0.0 ? 0 : static_cast<std::size_t>(t);
}

namespace {

std::size_t same_colour(const Graph& g, std::span<const Colour> sigma, Vertex v) noexcept {
  const Colour c = sigma[v];
  std::size_t same = 0;
  for (Vertex u : g.neighbours(v)) same += sigma[u] == c;
  return same;
}

}  // namespace

bool is_happy(const Graph& g, std::span<const Colour> sigma, Vertex v, double rho) noexcept {
  return same_colour(g, sigma, v) >= happy_threshold(g.degree(v), rho);
}

HappinessReport evaluate(const Graph& g, const Colouring& sigma, double rho) {
  const std::size_t n = g.vertex_count();
  HappinessReport r;
  r.per_vertex.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    const bool h = is_happy(g, sigma.values(), v, rho);
    r.per_vertex[v] = h;
    r.happy_count += h;
  }
  r.alpha = n == 0 ? 0.0 : static_cast<double>(r.happy_count) / static_cast<double>(n);
  return r;
}

std::size_t happy_count(const Graph& g, std::span<const Colour> sigma, double rho) noexcept {
  std::size_t count = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) count += is_happy(g, sigma, v, rho);
  return count;
}

std::vector<Vertex> unhappy_free_vertices(const Graph& g, const Colouring& sigma, double rho,
                                          const PartialColouring& pc) {
  std::vector<Vertex> out;
  for (Vertex v : pc.free_vertices()) {
    if (!is_happy(g, sigma.values(), v, rho)) out.push_back(v);
  }
  return out;
}

HappinessTracker::HappinessTracker(const Graph& g, std::span<const Colour> sigma, double rho)
    : g_(&g), colours_(sigma.begin(), sigma.end()), same_(g.vertex_count()), threshold_(g.vertex_count()) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    same_[v] = static_cast<std::uint32_t>(same_colour(g, colours_, v));
    threshold_[v] = static_cast<std::uint32_t>(happy_threshold(g.degree(v), rho));
    happy_count_ += happy(v);
  }
}

void HappinessTracker::set_same(Vertex v, std::uint32_t value) noexcept {
  happy_count_ -= happy(v);
  same_[v] = value;
  happy_count_ += happy(v);
}

void HappinessTracker::recolour(Vertex v, Colour c) {
  const Colour old = colours_[v];
  if (old == c) return;
  std::uint32_t same = 0;
  for (Vertex u : g_->neighbours(v)) {
    const Colour cu = colours_[u];
    if (cu == old) set_same(u, same_[u] - 1);
    if (cu == c) {
      set_same(u, same_[u] + 1);
      ++same;
    }
  }
  colours_[v] = c;
  set_same(v, same);
}

OptimumResult exhaustive_optimum(const Graph& g, const PartialColouring& pc, double rho, std::size_t budget_limit) {
  const auto free = pc.free_vertices();
  const auto k = static_cast<std::size_t>(pc.k());

  std::size_t space = 1;
  for (std::size_t i = 0; i < free.size(); ++i) {
    if (space > budget_limit / k) {
      throw Error(ErrorCode::BudgetExceeded, std::to_string(k) + "^" + std::to_string(free.size()) +
                                                 " extensions exceed budget " + std::to_string(budget_limit));
    }
    space *= k;
  }
  if (space > budget_limit) throw Error(ErrorCode::BudgetExceeded, "extension count exceeds budget");

  // Odometer over free vertices with the last one fastest: lexicographic order,
  // so a strict improvement test keeps the smallest maximiser.
  Colouring current = Colouring::from_partial(pc, 1);
  HappinessTracker tracker(g, current.values(), rho);
  Colouring best = current;
  std::size_t best_happy = tracker.happy_count();

  for (std::size_t step = 1; step < space; ++step) {
    std::size_t pos = free.size();
    while (pos > 0) {
      --pos;
      const Vertex v = free[pos];
      if (tracker.colour(v) < k) {
        tracker.recolour(v, static_cast<Colour>(tracker.colour(v) + 1));
        break;
      }
      tracker.recolour(v, 1);
    }
    if (tracker.happy_count() > best_happy) {
      best_happy = tracker.happy_count();
      best = Colouring(pc.k(), std::vector<Colour>(tracker.colours().begin(), tracker.colours().end()));
    }
  }
  return {std::move(best), best_happy};
}

}  // namespace shc
