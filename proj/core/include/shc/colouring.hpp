#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "shc/graph.hpp"
#include "shc/rng.hpp"
#include "shc/types.hpp"

namespace shc {

/// Precolouring of a graph: entries are 1..k or kFree. The non-free vertices
/// form the fixed set V'.
class PartialColouring {
 public:
  PartialColouring() = default;
  /// Throws Error{InvalidArgument} for k < 2, Error{ColourOutOfRange} for an entry > k.
  PartialColouring(int k, std::vector<Colour> assign);

  static PartialColouring all_free(std::size_t n, int k);

  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return assign_.size(); }
  Colour operator[](Vertex v) const noexcept { return assign_[v]; }
  bool is_free(Vertex v) const noexcept { return assign_[v] == kFree; }

  std::span<const Colour> values() const noexcept { return assign_; }
  /// Free vertices in ascending order.
  std::span<const Vertex> free_vertices() const noexcept { return free_; }
  std::size_t precoloured_count() const noexcept { return assign_.size() - free_.size(); }

  friend bool operator==(const PartialColouring& a, const PartialColouring& b) noexcept {
    return a.k_ == b.k_ && a.assign_ == b.assign_;
  }

 private:
  int k_ = 0;
  std::vector<Colour> assign_;
  std::vector<Vertex> free_;
};

/// Total k-colouring.
class Colouring {
 public:
  Colouring() = default;
  /// Throws Error{ColourOutOfRange} if any entry is kFree or exceeds k.
  Colouring(int k, std::vector<Colour> assign);

  /// Copies the precolouring and fills every free vertex with `fill`.
  static Colouring from_partial(const PartialColouring& pc, Colour fill);

  int k() const noexcept { return k_; }
  std::size_t size() const noexcept { return assign_.size(); }
  Colour operator[](Vertex v) const noexcept { return assign_[v]; }
  void set(Vertex v, Colour c) noexcept { assign_[v] = c; }

  std::span<const Colour> values() const noexcept { return assign_; }
  std::span<Colour> values() noexcept { return assign_; }

  bool extends(const PartialColouring& pc) const noexcept;

  friend bool operator==(const Colouring&, const Colouring&) = default;

 private:
  int k_ = 0;
  std::vector<Colour> assign_;
};

/// Completes pc by drawing every free vertex's colour uniformly from 1..k.
Colouring random_completion(const PartialColouring& pc, Rng& rng);

/// Reusable counting buffer for plurality queries; O(deg(v)) per query.
class PluralityCounter {
 public:
  explicit PluralityCounter(int k) : counts_(static_cast<std::size_t>(k) + 1, 0) {}

  /// Plurality colour among the coloured (non-free) neighbours of v, ties broken
  /// uniformly at random. Returns nullopt when no neighbour is coloured.
  std::optional<Colour> pick(const Graph& g, Vertex v, std::span<const Colour> colours, Rng& rng);

 private:
  std::vector<std::uint32_t> counts_;
  std::vector<Colour> touched_;
  std::vector<Colour> ties_;
};

/// Most frequent colour in N(v) under sigma; ties broken uniformly via rng.
/// Throws Error{IsolatedVertex} when deg(v) = 0.
Colour plurality_colour(const Graph& g, Vertex v, const Colouring& sigma, Rng& rng);

}  // namespace shc
