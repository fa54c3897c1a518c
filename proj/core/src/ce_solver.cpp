#include "shc/ce_solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <thread>

#include "shc/error.hpp"
#include "shc/happiness.hpp"
#include "shc/heuristics.hpp"

namespace shc {

ProbModel::ProbModel(std::vector<Vertex> vertices, int k)
    : k_(k), vertices_(std::move(vertices)), probs_(vertices_.size() * static_cast<std::size_t>(k), 1.0 / k) {}

ProbModel init_probs(const PartialColouring& pc, int k) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "k must be at least 2");
  return ProbModel(std::vector<Vertex>(pc.free_vertices().begin(), pc.free_vertices().end()), k);
}

void draw_colouring(const ProbModel& model, std::span<Colour> sigma, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto k = static_cast<std::size_t>(model.k());
  for (std::size_t i = 0; i < model.size(); ++i) {
    const auto row = model.row(i);
    const double u = unit(rng);
    double acc = 0.0;
    std::size_t chosen = k;
    std::size_t last_positive = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (row[j] > 0.0) last_positive = j;
      acc += row[j];
      if (u < acc) {
        chosen = j;
        break;
      }
    }
    // Rounding can leave the cumulative sum just below u.
    if (chosen == k) chosen = last_positive;
    sigma[model.vertices()[i]] = static_cast<Colour>(chosen + 1);
  }
}

std::vector<Colouring> sample_population(const PartialColouring& pc, const ProbModel& model, std::size_t size,
                                         std::uint64_t stream_seed, const Improver& improver) {
  std::vector<Colouring> out;
  out.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    Rng rng = make_stream(stream_seed, {i});
    auto sigma = Colouring::from_partial(pc, 1);
    draw_colouring(model, sigma.values(), rng);
    if (improver) improver(sigma.values(), rng);
    out.push_back(std::move(sigma));
  }
  return out;
}

std::vector<std::size_t> select_elite(std::span<const std::size_t> scores, std::size_t elite_size) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  elite_size = std::min(elite_size, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(elite_size), order.end(),
                    [&](std::size_t a, std::size_t b) { return scores[a] != scores[b] ? scores[a] > scores[b] : a < b; });
  order.resize(elite_size);
  return order;
}

std::vector<Colouring> select_elite(const std::vector<Colouring>& population, std::span<const std::size_t> scores,
                                    std::size_t elite_size) {
  if (population.size() != scores.size()) throw Error(ErrorCode::InvalidArgument, "population/score size mismatch");
  std::vector<Colouring> out;
  for (std::size_t i : select_elite(scores, elite_size)) out.push_back(population[i]);
  return out;
}

void update_probs_in_place(ProbModel& model, std::span<const std::span<const Colour>> elite, double beta) {
  if (elite.empty()) throw Error(ErrorCode::InvalidArgument, "elite set is empty");
  const auto k = static_cast<std::size_t>(model.k());
  const double share = 1.0 / static_cast<double>(elite.size());
  std::vector<double> raw(k);
  for (std::size_t i = 0; i < model.size(); ++i) {
    const Vertex v = model.vertices()[i];
    std::fill(raw.begin(), raw.end(), 0.0);
    for (const auto& member : elite) raw[member[v] - 1] += share;
    auto row = model.row(i);
    for (std::size_t j = 0; j < k; ++j) row[j] = beta == 1.0 ? raw[j] : row[j] + beta * (raw[j] - row[j]);
  }
}

ProbModel update_probs(const ProbModel& old, const std::vector<Colouring>& elite, double beta) {
  std::vector<std::span<const Colour>> rows;
  rows.reserve(elite.size());
  for (const auto& c : elite) rows.push_back(c.values());
  ProbModel next = old;
  update_probs_in_place(next, rows, beta);
  return next;
}

std::size_t CeParams::elite_size() const noexcept {
  const auto rounded = static_cast<std::size_t>(std::llround(elite_fraction * static_cast<double>(population_size)));
  return std::clamp<std::size_t>(rounded, 1, std::max<std::size_t>(population_size, 1));
}

void CeParams::validate() const {
  auto fail = [](const char* msg) { throw Error(ErrorCode::InvalidArgument, msg); };
  if (population_size < 2) fail("population_size must be at least 2");
  if (!(elite_fraction > 0.0 && elite_fraction <= 1.0)) fail("elite_fraction must lie in (0, 1]");
  if (!(beta > 0.0 && beta <= 1.0)) fail("beta must lie in (0, 1]");
  if (!(time_limit >= 0.0)) fail("time_limit must be non-negative");
  if (workers == 0) fail("workers must be at least 1");
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Runs body(i, worker) for i in [0, count); worker w takes i = w, w + W, ...
template <typename Body>
void parallel_for(std::size_t count, std::size_t workers, Body&& body) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i, 0);
    return;
  }
  workers = std::min(workers, count);
  std::vector<std::jthread> threads;
  threads.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) body(i, w);
    });
  }
  for (std::size_t i = 0; i < count; i += workers) body(i, 0);
}

}  // namespace

SolveResult run(const Graph& g, const PartialColouring& pc, double rho, const CeParams& params) {
  params.validate();
  if (pc.size() != g.vertex_count()) throw Error(ErrorCode::InvalidArgument, "precolouring size differs from n");
  const auto start = Clock::now();
  const std::size_t n = g.vertex_count();

  SolveResult result;
  if (pc.free_vertices().empty()) {
    result.best = Colouring::from_partial(pc, 1);
    result.happy = happy_count(g, result.best.values(), rho);
    result.alpha = static_cast<double>(result.happy) / static_cast<double>(n);
    result.converged = result.happy == n;
    result.wall_time = seconds_since(start);
    return result;
  }

  ProbModel model = init_probs(pc, pc.k());
  const std::size_t pop_size = params.population_size;
  const std::size_t elite_size = params.elite_size();
  const std::size_t workers = std::min(params.workers, pop_size);

  std::vector<std::vector<Colour>> population(pop_size, std::vector<Colour>(pc.values().begin(), pc.values().end()));
  std::vector<std::size_t> scores(pop_size, 0);
  std::vector<LocalSearch> searches;
  if (params.use_ls) searches.assign(workers, LocalSearch(g, pc, rho));

  std::vector<Colour> incumbent;
  std::size_t incumbent_happy = 0;
  std::vector<std::span<const Colour>> elite_rows;

  std::size_t generation = 0;
  while (true) {
    if (!incumbent.empty() && incumbent_happy == n) break;
    if (params.max_generations && generation >= *params.max_generations) break;
    if (generation > 0 && seconds_since(start) >= params.time_limit) break;

    const std::uint64_t stream_seed = mix(params.seed, generation);
    parallel_for(pop_size, workers, [&](std::size_t i, std::size_t w) {
      Rng rng = make_stream(stream_seed, {i});
      auto& sigma = population[i];
      draw_colouring(model, sigma, rng);
      if (params.use_ls) searches[w].pass(sigma, rng);
      scores[i] = happy_count(g, sigma, rho);
    });
    result.samples_evaluated += pop_size;
    ++generation;

    const auto elite = select_elite(scores, elite_size);
    const std::size_t leader = elite.front();
    if (params.literal_incumbent || incumbent.empty() || scores[leader] > incumbent_happy) {
      incumbent = population[leader];
      incumbent_happy = scores[leader];
    }

    elite_rows.clear();
    for (std::size_t i : elite) elite_rows.emplace_back(population[i]);
    update_probs_in_place(model, elite_rows, params.beta);
  }

  result.best = Colouring(pc.k(), std::move(incumbent));
  result.happy = incumbent_happy;
  result.alpha = static_cast<double>(incumbent_happy) / static_cast<double>(n);
  result.generations = generation;
  result.converged = incumbent_happy == n;
  result.wall_time = seconds_since(start);
  return result;
}

}  // namespace shc
