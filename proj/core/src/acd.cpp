#include "shc/acd.hpp"

#include <limits>
#include <string>

#include "shc/error.hpp"

namespace shc {

ConfusionMatrix confusion_matrix(std::span<const int> communities, std::span<const Colour> sigma, int k) {
  if (communities.size() != sigma.size()) throw Error(ErrorCode::InvalidArgument, "community/colouring size mismatch");
  ConfusionMatrix m(static_cast<std::size_t>(k), std::vector<std::int64_t>(static_cast<std::size_t>(k), 0));
  for (std::size_t v = 0; v < sigma.size(); ++v) {
    const int c = sigma[v];
    const int j = communities[v];
    if (c < 1 || c > k || j < 1 || j > k) {
      throw Error(ErrorCode::ColourOutOfRange, "vertex " + std::to_string(v) + " outside 1..k");
    }
    ++m[static_cast<std::size_t>(c - 1)][static_cast<std::size_t>(j - 1)];
  }
  return m;
}

std::vector<std::size_t> max_weight_assignment(const ConfusionMatrix& weights) {
  // Shortest augmenting path formulation on costs -w, 1-based with a dummy
  // column 0 (potentials u over rows, v over columns).
  const std::size_t k = weights.size();
  constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> u(k + 1, 0), v(k + 1, 0), min_to(k + 1);
  std::vector<std::size_t> row_of(k + 1, 0), prev(k + 1, 0);
  std::vector<bool> used(k + 1);

  for (std::size_t i = 1; i <= k; ++i) {
    row_of[0] = i;
    std::size_t col = 0;
    std::fill(min_to.begin(), min_to.end(), inf);
    std::fill(used.begin(), used.end(), false);
    do {
      used[col] = true;
      const std::size_t row = row_of[col];
      std::int64_t delta = inf;
      std::size_t next = 0;
      for (std::size_t j = 1; j <= k; ++j) {
        if (used[j]) continue;
        const std::int64_t reduced = -weights[row - 1][j - 1] - u[row] - v[j];
        if (reduced < min_to[j]) {
          min_to[j] = reduced;
          prev[j] = col;
        }
        if (min_to[j] < delta) {
          delta = min_to[j];
          next = j;
        }
      }
      for (std::size_t j = 0; j <= k; ++j) {
        if (used[j]) {
          u[row_of[j]] += delta;
          v[j] -= delta;
        } else {
          min_to[j] -= delta;
        }
      }
      col = next;
    } while (row_of[col] != 0);
    do {
      const std::size_t p = prev[col];
      row_of[col] = row_of[p];
      col = p;
    } while (col != 0);
  }

  std::vector<std::size_t> assignment(k, 0);
  for (std::size_t j = 1; j <= k; ++j) assignment[row_of[j] - 1] = j - 1;
  return assignment;
}

double acd(std::span<const int> communities, const Colouring& sigma, int k) {
  if (sigma.size() == 0) return 0.0;
  const auto m = confusion_matrix(communities, sigma.values(), k);
  const auto assignment = max_weight_assignment(m);
  std::int64_t matched = 0;
  for (std::size_t c = 0; c < assignment.size(); ++c) matched += m[c][assignment[c]];
  return static_cast<double>(matched) / static_cast<double>(sigma.size());
}

}  // namespace shc
