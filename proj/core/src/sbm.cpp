#include "shc/sbm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "shc/error.hpp"
#include "shc/rng.hpp"

namespace shc {
namespace {

/// Calls f(i) for each i in [0, total) independently with probability p,
/// jumping between successes with geometric skips.
template <typename F>
void for_each_bernoulli(std::uint64_t total, double p, Rng& rng, F&& f) {
  if (total == 0 || p <= 0.0) return;
  if (p >= 1.0) {
    for (std::uint64_t i = 0; i < total; ++i) f(i);
    return;
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double log_q = std::log1p(-p);
  std::uint64_t i = 0;
  while (true) {
    const double skip = std::floor(std::log1p(-unit(rng)) / log_q);
    if (skip >= static_cast<double>(total - i)) return;
    i += static_cast<std::uint64_t>(skip);
    f(i);
    if (++i >= total) return;
  }
}

void sample_within(std::size_t begin, std::size_t size, double p, Rng& rng, std::vector<Edge>& out) {
  // Pair index enumerates (row, col) with col < row, row-major.
  const std::uint64_t total = static_cast<std::uint64_t>(size) * (size - 1) / 2;
  std::uint64_t row = 1;
  std::uint64_t row_start = 0;
  for_each_bernoulli(total, p, rng, [&](std::uint64_t idx) {
    while (idx >= row_start + row) {
      row_start += row;
      ++row;
    }
    out.push_back({static_cast<Vertex>(begin + (idx - row_start)), static_cast<Vertex>(begin + row)});
  });
}

void sample_between(std::size_t a_begin, std::size_t a_size, std::size_t b_begin, std::size_t b_size, double q,
                    Rng& rng, std::vector<Edge>& out) {
  const std::uint64_t total = static_cast<std::uint64_t>(a_size) * b_size;
  for_each_bernoulli(total, q, rng, [&](std::uint64_t idx) {
    out.push_back({static_cast<Vertex>(a_begin + idx / b_size), static_cast<Vertex>(b_begin + idx % b_size)});
  });
}

}  // namespace

void validate(const SbmParams& params) {
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::InvalidArgument, msg); };
  if (params.k < 2) fail("k must be at least 2");
  if (params.n < static_cast<std::size_t>(params.k)) fail("n must be at least k");
  if (!(params.p > 0.0 && params.p <= 1.0)) fail("p must lie in (0, 1]");
  if (!(params.q > 0.0 && params.q < params.p)) fail("q must lie in (0, p)");
  if (!(params.precolour_fraction > 0.0 && params.precolour_fraction <= 1.0)) {
    fail("precolour_fraction must lie in (0, 1]");
  }
  if (!(params.epsilon > 0.0 && params.epsilon < 1.0)) fail("epsilon must lie in (0, 1)");
}

Colouring SbmInstance::planted() const {
  std::vector<Colour> assign(communities.begin(), communities.end());
  return Colouring(params.k, std::move(assign));
}

Instance SbmInstance::to_instance(std::optional<double> rho) const {
  InstanceMetadata meta;
  meta.k = params.k;
  meta.rho = rho;
  meta.p = params.p;
  meta.q = params.q;
  meta.seed = params.seed;
  meta.n_communities = params.k;
  return Instance{graph, precolouring, meta};
}

SbmInstance generate(const SbmParams& params) {
  validate(params);
  const std::size_t n = params.n;
  const auto k = static_cast<std::size_t>(params.k);
  Rng rng = make_stream(params.seed);

  std::vector<std::size_t> block_begin(k + 1, 0);
  for (std::size_t b = 0; b < k; ++b) block_begin[b + 1] = block_begin[b] + n / k + (b < n % k ? 1 : 0);

  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), Vertex{0});
  std::shuffle(label.begin(), label.end(), rng);

  std::vector<Edge> edges;
  for (std::size_t a = 0; a < k; ++a) {
    const std::size_t a_size = block_begin[a + 1] - block_begin[a];
    sample_within(block_begin[a], a_size, params.p, rng, edges);
    for (std::size_t b = a + 1; b < k; ++b) {
      sample_between(block_begin[a], a_size, block_begin[b], block_begin[b + 1] - block_begin[b], params.q, rng,
                     edges);
    }
  }
  for (auto& e : edges) e = {label[e.u], label[e.v]};

  SbmInstance inst;
  inst.params = params;
  inst.graph = Graph::build(n, edges);
  inst.communities.assign(n, 0);
  std::vector<Colour> pre(n, kFree);
  for (std::size_t b = 0; b < k; ++b) {
    std::vector<Vertex> members(label.begin() + static_cast<std::ptrdiff_t>(block_begin[b]),
                                label.begin() + static_cast<std::ptrdiff_t>(block_begin[b + 1]));
    for (Vertex v : members) inst.communities[v] = static_cast<int>(b + 1);
    const double want = std::ceil(params.precolour_fraction * static_cast<double>(members.size()) - 1e-12);
    const auto count = std::clamp<std::size_t>(static_cast<std::size_t>(want), 1, members.size());
    std::shuffle(members.begin(), members.end(), rng);
    for (std::size_t i = 0; i < count; ++i) pre[members[i]] = static_cast<Colour>(b + 1);
  }
  inst.precolouring = PartialColouring(params.k, std::move(pre));
  return inst;
}

RegimeThresholds compute_thresholds(int k, double p, double q, std::size_t n, double epsilon) {
  if (k < 2 || n == 0 || !(p > 0.0) || q < 0.0 || !(epsilon > 0.0 && epsilon < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "thresholds need k >= 2, n >= 1, p > 0, q >= 0, 0 < epsilon < 1");
  }
  const double others = static_cast<double>(k - 1) * q;
  const double denom = p + others;

  RegimeThresholds t;
  t.mu = q / denom;
  t.xi_tilde = p / denom;

  const double arg =
      (static_cast<double>(k) / static_cast<double>(n) * std::log(epsilon) + p * std::numbers::e + others) / denom;
  double branch = -std::numeric_limits<double>::infinity();
  if (arg > 0.0) {
    branch = std::log(arg);
  } else {
    t.xi_log_branch_finite = false;
  }
  t.xi = std::max(std::min(branch, t.xi_tilde), 0.0);
  return t;
}

RegimeThresholds thresholds(const SbmParams& params) {
  validate(params);
  return compute_thresholds(params.k, params.p, params.q, params.n, params.epsilon);
}

double feasibility_margin(const SbmParams& params, double rho) {
  const double k = params.k;
  const double e_rho = std::exp(rho);
  return k / static_cast<double>(params.n) * std::log(params.epsilon) -
         (params.q * (k - 1.0) * (e_rho - 1.0) + params.p * (e_rho - std::numbers::e));
}

Regime classify_regime(double rho, const RegimeThresholds& t) noexcept {
  if (rho < t.mu) return Regime::Mild;
  if (rho <= t.xi_tilde) return Regime::Intermediate;
  return Regime::Tight;
}

std::string_view to_string(Regime r) noexcept {
  switch (r) {
    case Regime::Mild: return "mild";
    case Regime::Intermediate: return "intermediate";
    case Regime::Tight: return "tight";
  }
  return "unknown";
}

std::optional<Regime> regime_from_string(std::string_view s) noexcept {
  if (s == "mild") return Regime::Mild;
  if (s == "intermediate") return Regime::Intermediate;
  if (s == "tight") return Regime::Tight;
  return std::nullopt;
}

}  // namespace shc
