#include <doctest.h>

#include <map>

#include "linebal/operators.hpp"
#include "oracles.hpp"

using namespace linebal;
using oracle::make_instance;

TEST_CASE("config validation") {
  OperatorConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.max_retries = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.mutation_probability = 1.5;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.crossover_rate = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("tail swap at the boundary cuts is a no-op") {
  const std::vector<int> a{0, 1, 2}, b{2, 1, 0};
  CHECK(tail_swap(a, b, 0) == std::pair{b, a});
  CHECK(tail_swap(a, b, 3) == std::pair{a, b});
  CHECK(tail_swap(a, b, 1) == std::pair{std::vector<int>{0, 1, 0}, std::vector<int>{2, 1, 2}});
}

TEST_CASE("assignment crossover") {
  Rng rng(1);
  const OperatorConfig cfg;
  const auto tight = generate_case(Coupling::Tight, 6, 8, 3);
  const auto a = random_valid_assignment(tight, rng);
  auto [c1, c2] = crossover_assignment(a, a, tight, rng, cfg);
  CHECK(c1 == a);
  CHECK(c2 == a);

  // Durations all 1 and K = N: nothing can bind, no retries ever.
  const auto free6 = make_instance({1, 1, 1, 1, 1, 1}, {"1", "2", "3", "4", "5", "6"}, 6);
  RetryCounter counter;
  for (int i = 0; i < 500; ++i) {
    const auto p = random_valid_assignment(free6, rng), q = random_valid_assignment(free6, rng);
    crossover_assignment(p, q, free6, rng, cfg, &counter);
  }
  CHECK(counter.retries == 0);
  CHECK(counter.calls == 1000);

  // N = 2 has a single legal cut, so children are always mixtures.
  const auto pair = make_instance({1, 1}, {"1", "1"}, 2);
  for (int i = 0; i < 50; ++i) {
    auto [x, y] = crossover_assignment({{0, 0}}, {{1, 1}}, pair, rng, cfg);
    CHECK(x.genes == std::vector<int>{0, 1});
    CHECK(y.genes == std::vector<int>{1, 0});
  }
}

TEST_CASE("assignment crossover on a chain stays valid") {
  Rng rng(2);
  const OperatorConfig cfg;
  const auto tight = generate_case(Coupling::Tight, 6, 8, 5);
  RetryCounter counter;
  for (int i = 0; i < 1000; ++i) {
    const auto p = random_valid_assignment(tight, rng), q = random_valid_assignment(tight, rng);
    auto [x, y] = crossover_assignment(p, q, tight, rng, cfg, &counter);
    CHECK(is_valid_assignment(x, tight));
    CHECK(is_valid_assignment(y, tight));
  }
  MESSAGE("chain crossover: mean retries " << counter.mean() << ", max " << counter.max_retries
                                           << ", fallbacks " << counter.fallbacks);
}

TEST_CASE("crossover falls back to parent copies when no cut works") {
  // Parents on opposite sides of a capacity conflict: any mixture overloads.
  const auto inst = make_instance({2, 2}, {"1", "1"}, 2);
  Rng rng(3);
  OperatorConfig cfg;
  cfg.max_retries = 5;
  RetryCounter counter;
  auto [x, y] = crossover_assignment({{0, 1}}, {{1, 0}}, inst, rng, cfg, &counter);
  CHECK(x.genes == std::vector<int>{0, 1});
  CHECK(y.genes == std::vector<int>{1, 0});
  CHECK(counter.fallbacks == 2);
  CHECK(counter.max_retries == 5);
}

TEST_CASE("permutation crossover rejects invalid children") {
  const auto free3 = make_instance({1, 1, 1}, {"1", "1", "1"}, 3);
  CHECK(crossover_permutation_at({{0, 1, 2}}, {{2, 1, 0}}, 1, free3).empty());
  const auto same = crossover_permutation_at({{0, 1, 2}}, {{0, 1, 2}}, 2, free3);
  REQUIRE(same.size() == 2);
  CHECK(same[0].order == std::vector<int>{0, 1, 2});
  // tails holding the same task set swap cleanly
  const auto kids = crossover_permutation_at({{0, 1, 2}}, {{1, 0, 2}}, 2, free3);
  CHECK(kids.size() == 2);

  Rng rng(4);
  const auto none = generate_case(Coupling::None, 8, 8, 6);
  const OperatorConfig cfg;
  std::size_t survivors = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto p = random_valid_permutation(none, rng), q = random_valid_permutation(none, rng);
    for (const auto& kid : crossover_permutation(p, q, none, rng, cfg)) {
      CHECK(is_valid_permutation(kid, none));
      ++survivors;
    }
  }
  MESSAGE("permutation crossover survivors: " << survivors << " of 2000");
}

TEST_CASE("crossover rate below one passes parents through sometimes") {
  Rng rng(5);
  OperatorConfig cfg;
  cfg.crossover_rate = 0.5;
  const auto none = generate_case(Coupling::None, 8, 8, 6);
  int passthrough = 0;
  for (int i = 0; i < 400; ++i) {
    const auto p = random_valid_permutation(none, rng), q = random_valid_permutation(none, rng);
    auto kids = crossover_permutation(p, q, none, rng, cfg);
    passthrough += kids.size() == 2 && kids[0] == p && kids[1] == q;
  }
  CHECK(passthrough > 150);
  CHECK(passthrough < 250);
}

TEST_CASE("assignment mutation") {
  Rng rng(6);
  OperatorConfig always;
  always.mutation_probability = 1.0;

  const auto two = make_instance({1, 1}, {"1", "2"}, 2);
  for (int i = 0; i < 20; ++i) CHECK(mutate_assignment({{1, 1}}, two, rng, always).genes == std::vector<int>{1, 1});

  const auto none = make_instance({2, 2, 2, 2}, {"1", "2", "3", "4"}, 4);
  RetryCounter counter;
  for (int i = 0; i < 200; ++i) {
    const auto c = random_valid_assignment(none, rng);
    CHECK(is_valid_assignment(mutate_assignment(c, none, rng, always, &counter), none));
  }
  CHECK(counter.retries == 0);

  OperatorConfig never;
  never.mutation_probability = 0.0;
  const AssignmentChromosome c{{0, 1, 2, 3}};
  CHECK(mutate_assignment(c, none, rng, never) == c);
}

TEST_CASE("assignment mutation on a chain never leaks invalid output") {
  Rng rng(7);
  OperatorConfig always;
  always.mutation_probability = 1.0;
  always.max_retries = 50;
  const auto tight = generate_case(Coupling::Tight, 8, 8, 2);
  for (int i = 0; i < 10000; ++i) {
    const auto c = random_valid_assignment(tight, rng);
    CHECK(is_valid_assignment(mutate_assignment(c, tight, rng, always), tight));
  }
}

TEST_CASE("permutation mutation") {
  Rng rng(8);
  OperatorConfig always;
  always.mutation_probability = 1.0;
  const auto none = generate_case(Coupling::None, 6, 8, 1);
  RetryCounter counter;
  const PermutationChromosome id{{0, 1, 2, 3, 4, 5}};
  for (int i = 0; i < 100; ++i) {
    const auto m = mutate_permutation(id, none, rng, always, &counter);
    CHECK(is_valid_permutation(m, none));
    CHECK(m != id);
  }
  CHECK(counter.retries == 0);

  // A chain has one valid order, so every swap is rejected.
  always.max_retries = 30;
  const auto tight = generate_case(Coupling::Tight, 6, 8, 1);
  counter = {};
  CHECK(mutate_permutation(id, tight, rng, always, &counter) == id);
  CHECK(counter.fallbacks == 1);
  CHECK(counter.max_retries == 30);

  const auto loose = generate_case(Coupling::Loose, 10, 8, 3);
  std::map<std::uint64_t, int> histogram;
  for (int i = 0; i < 10000; ++i) {
    RetryCounter one;
    const auto p = random_valid_permutation(loose, rng);
    CHECK(is_valid_permutation(mutate_permutation(p, loose, rng, always, &one), loose));
    ++histogram[one.retries];
  }
  MESSAGE("loose permutation mutation: " << histogram[0] << " of 10000 accepted on the first draw");
}

TEST_CASE("operators are deterministic for a fixed seed") {
  const auto inst = generate_case(Coupling::Loose, 10, 8, 12);
  const OperatorConfig cfg;
  auto draw = [&](std::uint64_t seed) {
    Rng rng(seed);
    const auto a = random_valid_assignment(inst, rng), b = random_valid_assignment(inst, rng);
    auto [x, y] = crossover_assignment(a, b, inst, rng, cfg);
    const auto m = mutate_assignment(x, inst, rng, cfg);
    const auto p = random_valid_permutation(inst, rng), q = random_valid_permutation(inst, rng);
    const auto kids = crossover_permutation(p, q, inst, rng, cfg);
    return std::tuple{x, y, m, kids};
  };
  CHECK(draw(10) == draw(10));
}
