#include "shc/heuristics.hpp"

#include <algorithm>

#include "shc/happiness.hpp"

namespace shc {
namespace {

/// Vector-backed set with O(1) insert, erase and uniform pick.
class IndexedSet {
 public:
  explicit IndexedSet(std::size_t universe) : pos_(universe, kAbsent) {}

  bool contains(Vertex v) const noexcept { return pos_[v] != kAbsent; }
  bool empty() const noexcept { return items_.empty(); }
  std::size_t size() const noexcept { return items_.size(); }
  Vertex at(std::size_t i) const noexcept { return items_[i]; }

  void insert(Vertex v) {
    if (contains(v)) return;
    pos_[v] = items_.size();
    items_.push_back(v);
  }

  void erase(Vertex v) {
    const std::size_t i = pos_[v];
    if (i == kAbsent) return;
    items_[i] = items_.back();
    pos_[items_[i]] = i;
    items_.pop_back();
    pos_[v] = kAbsent;
  }

 private:
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pos_;
  std::vector<Vertex> items_;
};

std::size_t count_changes(std::span<const Colour> a, std::span<const Colour> b) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += a[i] != b[i];
  return n;
}

// Prefetches offsets and adjacency lists of vertices a few steps ahead in order.
void prefetch_ahead(const Graph& g, std::span<const Vertex> order, std::size_t i) {
  constexpr std::size_t kLookahead = 8;
  if (i + 2 * kLookahead < order.size()) g.prefetch_offsets(order[i + 2 * kLookahead]);
  if (i + kLookahead < order.size()) {
    const auto ahead = g.neighbours(order[i + kLookahead]);
    for (std::size_t j = 0; j < ahead.size(); j += 16) prefetch(ahead.data() + j);
  }
}

}  // namespace

Colouring lmc(const Graph& g, const PartialColouring& pc, Rng& rng) {
  const std::size_t n = g.vertex_count();
  std::vector<Colour> colours(pc.values().begin(), pc.values().end());
  PluralityCounter counter(pc.k());

  IndexedSet uncoloured(n);
  IndexedSet frontier(n);
  for (Vertex v : pc.free_vertices()) uncoloured.insert(v);
  for (Vertex v : pc.free_vertices()) {
    for (Vertex u : g.neighbours(v)) {
      if (colours[u] != kFree) {
        frontier.insert(v);
        break;
      }
    }
  }

  auto colour_vertex = [&](Vertex v, Colour c) {
    colours[v] = c;
    uncoloured.erase(v);
    frontier.erase(v);
    for (Vertex u : g.neighbours(v)) {
      if (colours[u] == kFree) frontier.insert(u);
    }
  };

  std::uniform_int_distribution<int> any_colour(1, pc.k());
  while (!uncoloured.empty()) {
    if (frontier.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, uncoloured.size() - 1);
      const Vertex seed = uncoloured.at(pick(rng));
      colour_vertex(seed, static_cast<Colour>(any_colour(rng)));
      continue;
    }
    std::uniform_int_distribution<std::size_t> pick(0, frontier.size() - 1);
    const Vertex v = frontier.at(pick(rng));
    colour_vertex(v, *counter.pick(g, v, colours, rng));
  }
  return Colouring(pc.k(), std::move(colours));
}

LocalSearch::LocalSearch(const Graph& g, const PartialColouring& pc, double rho)
    : g_(&g), pc_(&pc), rho_(rho), counter_(pc.k()) {}

std::size_t LocalSearch::pass(std::span<Colour> sigma, Rng& rng) {
  unhappy_.clear();
  for (Vertex v : pc_->free_vertices()) {
    if (!is_happy(*g_, sigma, v, rho_)) unhappy_.push_back(v);
  }
  std::shuffle(unhappy_.begin(), unhappy_.end(), rng);

  std::size_t moves = 0;
  for (std::size_t i = 0; i < unhappy_.size(); ++i) {
    prefetch_ahead(*g_, unhappy_, i);
    const Vertex v = unhappy_[i];
    // Unhappy implies a positive threshold, so deg(v) >= 1.
    const Colour q = *counter_.pick(*g_, v, sigma, rng);
    if (q != sigma[v]) {
      sigma[v] = q;
      ++moves;
    }
  }
  return moves;
}

Colouring ls(const Graph& g, const Colouring& sigma, const PartialColouring& pc, double rho, Rng& rng) {
  Colouring out = sigma;
  LocalSearch search(g, pc, rho);
  search.pass(out.values(), rng);
  return out;
}

HeuristicOutcome rls(const Graph& g, const Colouring& sigma, const PartialColouring& pc, double rho, Rng& rng,
                     std::size_t max_passes) {
  HappinessTracker tracker(g, sigma.values(), rho);
  PluralityCounter counter(pc.k());
  std::vector<Vertex> unhappy;

  std::size_t passes = 0;
  while (passes < max_passes) {
    unhappy.clear();
    for (Vertex v : pc.free_vertices()) {
      if (!tracker.happy(v)) unhappy.push_back(v);
    }
    if (unhappy.empty()) break;
    std::shuffle(unhappy.begin(), unhappy.end(), rng);
    ++passes;

    std::size_t moves = 0;
    for (std::size_t i = 0; i < unhappy.size(); ++i) {
      prefetch_ahead(g, unhappy, i);
      const Vertex v = unhappy[i];
      const Colour q = *counter.pick(g, v, tracker.colours(), rng);
      if (q != tracker.colour(v)) {
        tracker.recolour(v, q);
        ++moves;
      }
    }
    if (moves == 0) break;
  }

  Colouring out(sigma.k(), std::vector<Colour>(tracker.colours().begin(), tracker.colours().end()));
  const std::size_t changed = count_changes(sigma.values(), out.values());
  return {std::move(out), passes, changed};
}

}  // namespace shc
