#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "shc/error.hpp"
#include "shc/happiness.hpp"

namespace shc {
namespace {

TEST(HappyThreshold, ExactProducts) {
  EXPECT_EQ(happy_threshold(4, 0.5), 2u);
  EXPECT_EQ(happy_threshold(3, 1.0 / 3.0), 1u);
  EXPECT_EQ(happy_threshold(10, 0.3), 3u);
  EXPECT_EQ(happy_threshold(10, 0.31), 4u);
  EXPECT_EQ(happy_threshold(0, 1.0), 0u);
  EXPECT_EQ(happy_threshold(7, 0.0), 0u);
}

TEST(IsHappy, MonochromaticTriangle) {
  const auto g = testing::complete_graph(3);
  const Colouring sigma(2, {1, 1, 1});
  for (Vertex v = 0; v < 3; ++v) EXPECT_TRUE(is_happy(g, sigma, v, 1.0));
}

TEST(IsHappy, PathOfThree) {
  const auto g = testing::path_graph(3);
  const Colouring sigma(2, {1, 1, 2});
  EXPECT_TRUE(is_happy(g, sigma, 0, 0.5));
  EXPECT_TRUE(is_happy(g, sigma, 1, 0.5));
  EXPECT_FALSE(is_happy(g, sigma, 2, 0.5));
  EXPECT_EQ(evaluate(g, sigma, 0.5).happy_count, 2u);
}

TEST(IsHappy, IsolatedVertex) {
  const auto g = Graph::build(2, {});
  const Colouring sigma(2, {1, 2});
  EXPECT_TRUE(is_happy(g, sigma, 0, 1.0));
  EXPECT_EQ(evaluate(g, sigma, 1.0).happy_count, 2u);
}

TEST(Evaluate, CompleteGraphOfFour) {
  const auto g = testing::complete_graph(4);
  const Colouring sigma(2, {1, 1, 2, 2});
  EXPECT_DOUBLE_EQ(evaluate(g, sigma, 1.0 / 3.0).alpha, 1.0);
  EXPECT_DOUBLE_EQ(evaluate(g, sigma, 0.5).alpha, 0.0);
}

struct RandomCase {
  Graph g;
  std::vector<Colour> sigma;
  int k;
};

RandomCase random_case(std::mt19937_64& rng) {
  const std::size_t n = 2 + rng() % 30;
  const double p = std::uniform_real_distribution<double>(0.0, 0.6)(rng);
  const int k = 2 + static_cast<int>(rng() % 4);
  RandomCase c{testing::random_graph(n, p, rng), std::vector<Colour>(n), k};
  for (auto& x : c.sigma) x = static_cast<Colour>(1 + rng() % static_cast<std::uint64_t>(k));
  return c;
}

TEST(Evaluate, AgreesWithRationalOracle) {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto c = random_case(rng);
    const std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 12);
    const std::int64_t num = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(den + 1));
    const double rho = static_cast<double>(num) / static_cast<double>(den);
    const Colouring sigma(c.k, c.sigma);
    const auto report = evaluate(c.g, sigma, rho);
    std::size_t expected = 0;
    for (Vertex v = 0; v < c.g.vertex_count(); ++v) {
      const bool want = testing::happy_rational(c.g, c.sigma, v, num, den);
      ASSERT_EQ(report.per_vertex[v], want) << "trial " << trial << " v " << v << " rho " << num << "/" << den;
      ASSERT_EQ(is_happy(c.g, sigma, v, rho), want);
      expected += want;
    }
    EXPECT_EQ(report.happy_count, expected);
    EXPECT_EQ(happy_count(c.g, c.sigma, rho), expected);
    EXPECT_DOUBLE_EQ(report.alpha, static_cast<double>(expected) / static_cast<double>(c.g.vertex_count()));
  }
}

TEST(Evaluate, MonotoneInRhoAndTotalAtZero) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = random_case(rng);
    const Colouring sigma(c.k, c.sigma);
    EXPECT_DOUBLE_EQ(evaluate(c.g, sigma, 0.0).alpha, 1.0);
    auto previous = evaluate(c.g, sigma, 0.0);
    for (int i = 1; i <= 20; ++i) {
      const auto next = evaluate(c.g, sigma, i / 20.0);
      for (std::size_t v = 0; v < next.per_vertex.size(); ++v) {
        if (next.per_vertex[v]) EXPECT_TRUE(previous.per_vertex[v]);
      }
      previous = next;
    }
  }
}

TEST(Evaluate, ColourPermutationInvariance) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = random_case(rng);
    std::vector<Colour> perm(static_cast<std::size_t>(c.k));
    std::iota(perm.begin(), perm.end(), Colour{1});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Colour> relabelled(c.sigma.size());
    for (std::size_t v = 0; v < c.sigma.size(); ++v) relabelled[v] = perm[c.sigma[v] - 1];
    const double rho = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    EXPECT_EQ(happy_count(c.g, c.sigma, rho), happy_count(c.g, relabelled, rho));
  }
}

TEST(UnhappyFree, Examples) {
  const auto g = testing::path_graph(3);
  const Colouring sigma(2, {1, 1, 2});
  const PartialColouring third_free(2, {1, 1, 0});
  EXPECT_EQ(unhappy_free_vertices(g, sigma, 0.5, third_free), std::vector<Vertex>{2});
  EXPECT_TRUE(unhappy_free_vertices(g, sigma, 0.0, third_free).empty());
  const PartialColouring all_fixed(2, {1, 1, 2});
  EXPECT_TRUE(unhappy_free_vertices(g, sigma, 1.0, all_fixed).empty());
}

TEST(Tracker, MatchesFullEvaluation) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    auto c = random_case(rng);
    const double rho = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    HappinessTracker tracker(c.g, c.sigma, rho);
    for (int step = 0; step < 50; ++step) {
      const Vertex v = static_cast<Vertex>(rng() % c.g.vertex_count());
      const Colour col = static_cast<Colour>(1 + rng() % static_cast<std::uint64_t>(c.k));
      tracker.recolour(v, col);
      c.sigma[v] = col;
      const auto report = evaluate(c.g, Colouring(c.k, c.sigma), rho);
      ASSERT_EQ(tracker.happy_count(), report.happy_count);
      for (Vertex u = 0; u < c.g.vertex_count(); ++u) ASSERT_EQ(tracker.happy(u), report.per_vertex[u]);
    }
  }
}

TEST(ExhaustiveOptimum, FullyPrecoloured) {
  const auto g = testing::path_graph(3);
  const PartialColouring pc(2, {1, 1, 2});
  const auto best = exhaustive_optimum(g, pc, 0.5);
  EXPECT_EQ(best.colouring, Colouring(2, {1, 1, 2}));
  EXPECT_EQ(best.happy, 2u);
}

TEST(ExhaustiveOptimum, FreeMiddleOfPath) {
  const auto g = testing::path_graph(3);
  const PartialColouring pc(2, {1, 0, 1});
  const auto best = exhaustive_optimum(g, pc, 1.0);
  EXPECT_EQ(best.colouring[1], 1);
  EXPECT_EQ(best.happy, 3u);
}

TEST(ExhaustiveOptimum, DominatesRandomCompletions) {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 3 + rng() % 8;
    const auto g = testing::random_graph(n, 0.4, rng);
    std::vector<Colour> pre(n, kFree);
    pre[0] = 1;
    pre[1] = 2;
    const PartialColouring pc(3, pre);
    const double rho = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const auto best = exhaustive_optimum(g, pc, rho);
    EXPECT_TRUE(best.colouring.extends(pc));
    EXPECT_EQ(best.happy, happy_count(g, best.colouring.values(), rho));
    Rng draw(rng());
    for (int i = 0; i < 20; ++i) {
      const auto other = random_completion(pc, draw);
      EXPECT_GE(best.happy, happy_count(g, other.values(), rho));
    }
  }
}

TEST(ExhaustiveOptimum, BudgetExceeded) {
  const auto g = testing::path_graph(30);
  try {
    exhaustive_optimum(g, PartialColouring::all_free(30, 2), 0.5, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}

}  // namespace
}  // namespace shc
