#pragma once

#include <cstdint>

namespace shc {

using Vertex = std::uint32_t;

/// Colours are 1..k; 0 marks a free (uncoloured) vertex.
using Colour = std::uint16_t;
inline constexpr Colour kFree = 0;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

}  // namespace shc
