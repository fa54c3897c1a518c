#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "shc/ce_solver.hpp"

namespace shc {

enum class Algo { Ce, CeLs, Lmc, Ls, Rls };

std::string_view to_string(Algo a) noexcept;
std::optional<Algo> algo_from_string(std::string_view s) noexcept;
std::span<const Algo> all_algos() noexcept;

struct SolveOptions {
  CeParams ce;                   // seed and budget are shared by every algorithm
  std::size_t rls_max_passes = 50;
};

/// Uniform entry point over all algorithms. `ce` and `cels` run the
/// cross-entropy search (use_ls is forced accordingly); `lmc` builds from the
/// precolouring; `ls` and `rls` improve a uniformly random completion.
/// generations reports RLS passes and 1 for lmc/ls.
SolveResult solve(Algo algo, const Graph& g, const PartialColouring& pc, double rho, const SolveOptions& options);

}  // namespace shc
