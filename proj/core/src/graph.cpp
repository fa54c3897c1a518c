#include "shc/graph.hpp"

#include <algorithm>
#include <string>

#include "shc/error.hpp"

namespace shc {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EndpointOutOfRange: return "EndpointOutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::InconsistentHeader: return "InconsistentHeader";
    case ErrorCode::ColourOutOfRange: return "ColourOutOfRange";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::DegenerateSamples: return "DegenerateSamples";
    case ErrorCode::EmptyGroup: return "EmptyGroup";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Graph Graph::build(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "graph needs at least one vertex");

  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorCode::EndpointOutOfRange,
                  "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") with n=" + std::to_string(n));
    }
    if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(e.u));
    canon.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(canon.begin(), canon.end());
  auto last = std::unique(canon.begin(), canon.end());

  Graph g;
  g.duplicates_ = static_cast<std::size_t>(canon.end() - last);
  canon.erase(last, canon.end());

  g.offsets_.assign(n + 1, 0);
  for (const auto& e : canon) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];

  // Sorted edge order fills every list ascending: all (w, v) with w < v arrive
  // before any (v, x) with x > v.
  g.adjacency_.resize(2 * canon.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& e : canon) {
    g.adjacency_[cursor[e.u]++] = e.v;
    g.adjacency_[cursor[e.v]++] = e.u;
  }
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  auto nb = neighbours(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : neighbours(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

}  // namespace shc
