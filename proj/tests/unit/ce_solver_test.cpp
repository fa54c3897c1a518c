#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "shc/ce_solver.hpp"
#include "shc/error.hpp"
#include "shc/happiness.hpp"
#include "shc/heuristics.hpp"
#include "shc/rng.hpp"
#include "shc/sbm.hpp"
#include "shc/welch.hpp"

namespace shc {
namespace {

SbmInstance small_sbm(std::uint64_t seed, std::size_t n = 120, int k = 3) {
  SbmParams params;
  params.n = n;
  params.k = k;
  params.p = 0.25;
  params.q = 0.05;
  params.seed = seed;
  return generate(params);
}

CeParams fixed_generations(std::size_t gens, std::uint64_t seed, bool use_ls) {
  CeParams params;
  params.max_generations = gens;
  params.time_limit = 1e9;
  params.seed = seed;
  params.use_ls = use_ls;
  return params;
}

TEST(InitProbs, Uniform) {
  const auto model = init_probs(PartialColouring::all_free(5, 4), 4);
  ASSERT_EQ(model.size(), 5u);
  for (std::size_t i = 0; i < model.size(); ++i) {
    for (double x : model.row(i)) EXPECT_DOUBLE_EQ(x, 0.25);
  }
  EXPECT_EQ(init_probs(PartialColouring(2, {1, 2}), 2).size(), 0u);
  const auto three = init_probs(PartialColouring(2, {0, 1, 0, 0}), 2);
  ASSERT_EQ(three.size(), 3u);
  EXPECT_EQ(three.vertices()[0], 0u);
  EXPECT_EQ(three.vertices()[2], 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_DOUBLE_EQ(three.row(i)[0], 0.5);
    EXPECT_DOUBLE_EQ(three.row(i)[1], 0.5);
  }
}

TEST(SamplePopulation, DegenerateModel) {
  const PartialColouring pc(3, {1, 0, 0, 0});
  auto model = init_probs(pc, 3);
  const std::vector<Colour> encoded{3, 1, 2};
  for (std::size_t i = 0; i < model.size(); ++i) {
    auto row = model.row(i);
    std::fill(row.begin(), row.end(), 0.0);
    row[encoded[i] - 1] = 1.0;
  }
  for (const auto& s : sample_population(pc, model, 50, 9)) EXPECT_EQ(s, Colouring(3, {1, 3, 1, 2}));
}

TEST(SamplePopulation, UniformFrequency) {
  const PartialColouring pc(2, {0, 2});
  const auto model = init_probs(pc, 2);
  constexpr std::size_t draws = 10000;
  const auto samples = sample_population(pc, model, draws, 31337);
  std::size_t ones = 0;
  for (const auto& s : samples) {
    ones += s[0] == 1;
    EXPECT_EQ(s[1], 2);
  }
  EXPECT_NEAR(ones / double(draws), 0.5, testing::three_sigma(0.5, draws));
}

TEST(SamplePopulation, ImproverForcesStarFixpoint) {
  // Leaves precoloured 3, centre free: one LS pass always sends the centre to 3.
  const auto g = testing::star_graph(5);
  const PartialColouring pc(3, {0, 3, 3, 3, 3, 3});
  LocalSearch search(g, pc, 1.0);
  const Improver improve = [&](std::span<Colour> sigma, Rng& rng) { search.pass(sigma, rng); };
  const auto model = init_probs(pc, 3);
  for (const auto& s : sample_population(pc, model, 100, 4, improve)) {
    EXPECT_EQ(s, Colouring(3, {3, 3, 3, 3, 3, 3}));
  }
}

TEST(SamplePopulation, ImprovedSamplesAreLsOutputs) {
  const auto sbm = small_sbm(2);
  const auto& pc = sbm.precolouring;
  LocalSearch search(sbm.graph, pc, 0.6);
  const Improver improve = [&](std::span<Colour> sigma, Rng& rng) { search.pass(sigma, rng); };
  const auto model = init_probs(pc, pc.k());
  const auto raw = sample_population(pc, model, 20, 77);
  const auto improved = sample_population(pc, model, 20, 77, improve);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    Rng rng = make_stream(77, {i});
    auto replay = Colouring::from_partial(pc, 1);
    draw_colouring(model, replay.values(), rng);
    ASSERT_EQ(replay, raw[i]);
    EXPECT_EQ(improved[i], ls(sbm.graph, raw[i], pc, 0.6, rng));
    EXPECT_TRUE(improved[i].extends(pc));
  }
}

TEST(SelectElite, Examples) {
  const std::vector<std::size_t> a{5, 9, 7};
  EXPECT_EQ(select_elite(a, 1), std::vector<std::size_t>{1});
  const std::vector<std::size_t> b{5, 5, 5};
  EXPECT_EQ(select_elite(b, 2), (std::vector<std::size_t>{0, 1}));
  const std::vector<std::size_t> c{1, 4, 4, 2};
  EXPECT_EQ(select_elite(c, 4), (std::vector<std::size_t>{1, 2, 3, 0}));

  const std::vector<Colouring> population{Colouring(2, {1}), Colouring(2, {2}), Colouring(2, {1})};
  EXPECT_EQ(select_elite(population, a, 1), std::vector<Colouring>{Colouring(2, {2})});
  EXPECT_EQ(select_elite(population, a, 3).size(), 3u);
}

ProbModel two_colour_model(double p1) {
  ProbModel model({0}, 2);
  model.row(0)[0] = p1;
  model.row(0)[1] = 1.0 - p1;
  return model;
}

TEST(UpdateProbs, HandArithmetic) {
  const auto old = two_colour_model(0.5);
  const std::vector<Colouring> elite{Colouring(2, {1}), Colouring(2, {1}), Colouring(2, {1}), Colouring(2, {2})};
  const auto updated = update_probs(old, elite, 0.1);
  EXPECT_EQ(updated.row(0)[0], 0.525);
  EXPECT_EQ(updated.row(0)[1], 0.475);
}

TEST(UpdateProbs, FullReplacementAndNoLearning) {
  ProbModel old({0}, 3);
  const std::vector<Colouring> elite{Colouring(3, {2}), Colouring(3, {2})};
  const auto replaced = update_probs(old, elite, 1.0);
  EXPECT_EQ(replaced.row(0)[0], 0.0);
  EXPECT_EQ(replaced.row(0)[1], 1.0);
  EXPECT_EQ(replaced.row(0)[2], 0.0);
  EXPECT_EQ(update_probs(old, elite, 0.0), old);
  EXPECT_THROW(update_probs(old, {}, 0.5), Error);
}

TEST(UpdateProbs, NormalisationAndSmoothingBound) {
  Rng rng(8);
  const int k = 5;
  const double beta = 0.1;
  ProbModel model({0, 1, 2, 3, 4, 5}, k);
  for (int g = 1; g <= 200; ++g) {
    std::vector<Colouring> elite;
    for (int e = 0; e < 3; ++e) {
      std::vector<Colour> values(6);
      for (auto& c : values) c = static_cast<Colour>(1 + rng() % 2);  // colours 3..5 never chosen
      elite.emplace_back(k, values);
    }
    model = update_probs(model, elite, beta);
    const double floor = std::pow(1.0 - beta, g) / k;
    for (std::size_t i = 0; i < model.size(); ++i) {
      const auto row = model.row(i);
      EXPECT_NEAR(std::accumulate(row.begin(), row.end(), 0.0), 1.0, 1e-9);
      for (double x : row) {
        EXPECT_GE(x, floor * (1.0 - 1e-12));
        EXPECT_LE(x, 1.0);
      }
    }
  }
}

TEST(CeParamsTest, EliteSizeAndValidation) {
  CeParams params;
  EXPECT_EQ(params.elite_size(), 3u);
  params.population_size = 2;
  params.elite_fraction = 0.01;
  EXPECT_EQ(params.elite_size(), 1u);
  params.population_size = 1;
  EXPECT_THROW(params.validate(), Error);
  params = CeParams{};
  params.beta = 1.5;
  EXPECT_THROW(params.validate(), Error);
}

TEST(Run, FullyPrecoloured) {
  const auto g = testing::path_graph(3);
  const PartialColouring pc(2, {1, 1, 2});
  const auto result = run(g, pc, 0.5, CeParams{});
  EXPECT_EQ(result.best, Colouring(2, {1, 1, 2}));
  EXPECT_EQ(result.happy, 2u);
  EXPECT_LE(result.generations, 1u);
  EXPECT_FALSE(result.converged);
}

TEST(Run, RhoZeroConvergesInFirstGeneration) {
  const auto sbm = small_sbm(1);
  const auto result = run(sbm.graph, sbm.precolouring, 0.0, CeParams{});
  EXPECT_TRUE(result.converged);
  EXPECT_EQ(result.generations, 1u);
  EXPECT_EQ(result.happy, sbm.graph.vertex_count());
}

TEST(Run, MatchesGenerationReplay) {
  const auto sbm = small_sbm(5);
  const auto& pc = sbm.precolouring;
  const double rho = 0.7;
  for (bool use_ls : {false, true}) {
    const auto params = fixed_generations(6, 42, use_ls);
    const auto result = run(sbm.graph, pc, rho, params);

    LocalSearch search(sbm.graph, pc, rho);
    Improver improve;
    if (use_ls) improve = [&](std::span<Colour> sigma, Rng& rng) { search.pass(sigma, rng); };
    auto model = init_probs(pc, pc.k());
    Colouring best;
    std::size_t best_happy = 0;
    bool have = false;
    std::size_t gens = 0;
    for (std::size_t gen = 0; gen < 6; ++gen) {
      const auto population = sample_population(pc, model, params.population_size, mix(42, gen), improve);
      std::vector<std::size_t> scores;
      for (const auto& s : population) scores.push_back(evaluate(sbm.graph, s, rho).happy_count);
      const auto elite = select_elite(population, scores, params.elite_size());
      const auto leader = select_elite(scores, 1).front();
      if (!have || scores[leader] > best_happy) {
        best = population[leader];
        best_happy = scores[leader];
        have = true;
      }
      model = update_probs(model, elite, params.beta);
      ++gens;
      if (best_happy == sbm.graph.vertex_count()) break;
    }
    EXPECT_EQ(result.best, best) << "use_ls " << use_ls;
    EXPECT_EQ(result.happy, best_happy);
    EXPECT_EQ(result.generations, gens);
    EXPECT_EQ(result.samples_evaluated, gens * params.population_size);
  }
}

TEST(Run, IncumbentNeverRegresses) {
  const auto sbm = small_sbm(6);
  std::size_t previous = 0;
  for (std::size_t gens = 1; gens <= 15; ++gens) {
    const auto result = run(sbm.graph, sbm.precolouring, 0.8, fixed_generations(gens, 3, false));
    EXPECT_GE(result.happy, previous);
    EXPECT_EQ(result.happy, evaluate(sbm.graph, result.best, 0.8).happy_count);
    EXPECT_TRUE(result.best.extends(sbm.precolouring));
    previous = result.happy;
  }
}

TEST(Run, LiteralIncumbentTracksLastGeneration) {
  const auto sbm = small_sbm(7);
  auto params = fixed_generations(10, 11, false);
  params.literal_incumbent = true;
  const auto literal = run(sbm.graph, sbm.precolouring, 0.8, params);
  params.literal_incumbent = false;
  const auto kept = run(sbm.graph, sbm.precolouring, 0.8, params);
  EXPECT_LE(literal.happy, kept.happy);
  EXPECT_EQ(literal.happy, evaluate(sbm.graph, literal.best, 0.8).happy_count);
}

TEST(Run, IndependentOfWorkerCount) {
  const auto sbm = small_sbm(9, 200);
  for (bool use_ls : {false, true}) {
    auto params = fixed_generations(5, 1234, use_ls);
    const auto one = run(sbm.graph, sbm.precolouring, 0.6, params);
    for (std::size_t workers : {2u, 3u, 8u}) {
      params.workers = workers;
      const auto many = run(sbm.graph, sbm.precolouring, 0.6, params);
      EXPECT_EQ(many.best, one.best);
      EXPECT_EQ(many.happy, one.happy);
      EXPECT_EQ(many.generations, one.generations);
    }
  }
}

TEST(Run, ColourRelabellingLeavesScoreDistributionUnchanged) {
  const auto sbm = small_sbm(10, 90);
  const auto& pc = sbm.precolouring;
  const std::vector<Colour> perm{3, 1, 2};
  std::vector<Colour> relabelled(pc.values().begin(), pc.values().end());
  for (auto& c : relabelled) {
    if (c != kFree) c = perm[c - 1];
  }
  const PartialColouring permuted(pc.k(), relabelled);
  std::vector<double> a, b;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    a.push_back(double(run(sbm.graph, pc, 0.7, fixed_generations(3, seed, false)).happy));
    b.push_back(double(run(sbm.graph, permuted, 0.7, fixed_generations(3, seed + 1000, false)).happy));
  }
  EXPECT_GT(welch_t_test(a, b).p_value, 0.001);
}

}  // namespace
}  // namespace shc
