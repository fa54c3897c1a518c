#include "shc/solve.hpp"

#include <array>
#include <chrono>

#include "shc/happiness.hpp"
#include "shc/heuristics.hpp"

namespace shc {
namespace {

constexpr std::array kAlgos{Algo::Ce, Algo::CeLs, Algo::Lmc, Algo::Ls, Algo::Rls};

}  // namespace

std::string_view to_string(Algo a) noexcept {
  switch (a) {
    case Algo::Ce: return "ce";
    case Algo::CeLs: return "cels";
    case Algo::Lmc: return "lmc";
    case Algo::Ls: return "ls";
    case Algo::Rls: return "rls";
  }
  return "unknown";
}

std::optional<Algo> algo_from_string(std::string_view s) noexcept {
  for (Algo a : kAlgos) {
    if (to_string(a) == s) return a;
  }
  return std::nullopt;
}

std::span<const Algo> all_algos() noexcept { return kAlgos; }

SolveResult solve(Algo algo, const Graph& g, const PartialColouring& pc, double rho, const SolveOptions& options) {
  if (algo == Algo::Ce || algo == Algo::CeLs) {
    CeParams params = options.ce;
    params.use_ls = algo == Algo::CeLs;
    return run(g, pc, rho, params);
  }

  const auto start = std::chrono::steady_clock::now();
  Rng rng = make_stream(options.ce.seed);
  SolveResult r;
  r.generations = 1;
  r.samples_evaluated = 1;
  switch (algo) {
    case Algo::Lmc:
      r.best = lmc(g, pc, rng);
      break;
    case Algo::Ls:
      r.best = ls(g, random_completion(pc, rng), pc, rho, rng);
      break;
    case Algo::Rls: {
      auto outcome = rls(g, random_completion(pc, rng), pc, rho, rng, options.rls_max_passes);
      r.best = std::move(outcome.colouring);
      r.generations = outcome.passes;
      break;
    }
    default:
      break;
  }
  const std::size_t n = g.vertex_count();
  r.happy = happy_count(g, r.best.values(), rho);
  r.alpha = static_cast<double>(r.happy) / static_cast<double>(n);
  r.converged = r.happy == n;
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace shc
