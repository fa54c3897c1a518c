#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "shc/colouring.hpp"

namespace shc {

/// k x k confusion counts, m[c - 1][j - 1] = |{v : sigma(v) = c, community(v) = j}|.
using ConfusionMatrix = std::vector<std::vector<std::int64_t>>;

ConfusionMatrix confusion_matrix(std::span<const int> communities, std::span<const Colour> sigma, int k);

/// Maximum-weight perfect matching on a square matrix (Hungarian method,
/// O(k^3)). Returns assignment[row] = column.
std::vector<std::size_t> max_weight_assignment(const ConfusionMatrix& weights);

/// Accuracy of community detection: the best agreement fraction over all
/// bijections between colours and communities.
double acd(std::span<const int> communities, const Colouring& sigma, int k);

}  // namespace shc
