#include "shc/colouring.hpp"

#include <string>

#include "shc/error.hpp"

namespace shc {

PartialColouring::PartialColouring(int k, std::vector<Colour> assign) : k_(k), assign_(std::move(assign)) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "k must be at least 2, got " + std::to_string(k));
  for (std::size_t v = 0; v < assign_.size(); ++v) {
    if (assign_[v] > k_) {
      throw Error(ErrorCode::ColourOutOfRange,
                  "vertex " + std::to_string(v) + " has colour " + std::to_string(assign_[v]));
    }
    if (assign_[v] == kFree) free_.push_back(static_cast<Vertex>(v));
  }
}

PartialColouring PartialColouring::all_free(std::size_t n, int k) {
  return PartialColouring(k, std::vector<Colour>(n, kFree));
}

Colouring::Colouring(int k, std::vector<Colour> assign) : k_(k), assign_(std::move(assign)) {
  for (std::size_t v = 0; v < assign_.size(); ++v) {
    if (assign_[v] == kFree || assign_[v] > k_) {
      throw Error(ErrorCode::ColourOutOfRange,
                  "vertex " + std::to_string(v) + " has colour " + std::to_string(assign_[v]));
    }
  }
}

Colouring Colouring::from_partial(const PartialColouring& pc, Colour fill) {
  std::vector<Colour> assign(pc.values().begin(), pc.values().end());
  for (Vertex v : pc.free_vertices()) assign[v] = fill;
  return Colouring(pc.k(), std::move(assign));
}

bool Colouring::extends(const PartialColouring& pc) const noexcept {
  if (pc.size() != size() || pc.k() != k_) return false;
  for (std::size_t v = 0; v < size(); ++v) {
    if (pc[static_cast<Vertex>(v)] != kFree && pc[static_cast<Vertex>(v)] != assign_[v]) return false;
  }
  return true;
}

Colouring random_completion(const PartialColouring& pc, Rng& rng) {
  auto sigma = Colouring::from_partial(pc, 1);
  std::uniform_int_distribution<int> colour(1, pc.k());
  for (Vertex v : pc.free_vertices()) sigma.set(v, static_cast<Colour>(colour(rng)));
  return sigma;
}

std::optional<Colour> PluralityCounter::pick(const Graph& g, Vertex v, std::span<const Colour> colours,
                                             Rng& rng) {
  touched_.clear();
  std::uint32_t best = 0;
  for (Vertex u : g.neighbours(v)) {
    const Colour c = colours[u];
    if (c == kFree) continue;
    if (counts_[c]++ == 0) touched_.push_back(c);
    if (counts_[c] > best) best = counts_[c];
  }
  if (touched_.empty()) return std::nullopt;

  ties_.clear();
  for (Colour c : touched_) {
    if (counts_[c] == best) ties_.push_back(c);
    counts_[c] = 0;
  }
  if (ties_.size() == 1) return ties_.front();
  std::uniform_int_distribution<std::size_t> pick(0, ties_.size() - 1);
  return ties_[pick(rng)];
}

Colour plurality_colour(const Graph& g, Vertex v, const Colouring& sigma, Rng& rng) {
  if (g.degree(v) == 0) throw Error(ErrorCode::IsolatedVertex, "vertex " + std::to_string(v));
  PluralityCounter counter(sigma.k());
  return *counter.pick(g, v, sigma.values(), rng);
}

}  // namespace shc
