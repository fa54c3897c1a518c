#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "shc/types.hpp"

namespace shc {

inline void prefetch([[maybe_unused]] const void* p) noexcept {
#if defined(__GNUC__) || defined(__clang__)
  __builtin_prefetch(p);
#endif
}

/// Immutable simple undirected graph in compressed (offset-indexed) adjacency
/// form. Neighbour lists are sorted ascending.
class Graph {
 public:
  Graph() = default;

  /// Builds the canonical graph on vertices 0..n-1. Duplicate pairs, in either
  /// orientation, collapse to one edge and are tallied in duplicates_collapsed().
  /// Throws Error{EndpointOutOfRange | SelfLoop | InvalidArgument}.
  static Graph build(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }

  /// Hints the CPU to start loading v's offsets entry.
  void prefetch_offsets(Vertex v) const noexcept { prefetch(offsets_.data() + v); }
  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  std::span<const Vertex> neighbours(Vertex v) const noexcept {
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  bool has_edge(Vertex u, Vertex v) const noexcept;

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  std::size_t duplicates_collapsed() const noexcept { return duplicates_; }

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.offsets_ == b.offsets_ && a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
  std::size_t duplicates_ = 0;
};

}  // namespace shc
