#include <doctest.h>

#include "linebal/encoding.hpp"
#include "oracles.hpp"

using namespace linebal;
using oracle::make_instance;

namespace {

const Instance chain3 = make_instance({2, 2, 2}, {"1", "1", "1"}, 4, {{0, 1}, {1, 2}});

std::vector<std::vector<int>> stations(const StationPlan& p) { return p.stations; }

}  // namespace

TEST_CASE("assignment validity") {
  CHECK(is_valid_assignment(AssignmentChromosome{{0, 0, 1}}, chain3));
  CHECK_FALSE(is_valid_assignment(AssignmentChromosome{{1, 0, 2}}, chain3));
  const auto none = make_instance({3, 3}, {"1", "1"}, 5);
  CHECK_FALSE(is_valid_assignment(AssignmentChromosome{{0, 0}}, none));
  CHECK_FALSE(is_valid_assignment(AssignmentChromosome{{0, 3, 2}}, chain3));  // gene out of range
  CHECK_THROWS_AS(is_valid_assignment(AssignmentChromosome{{0, 0}}, chain3), std::invalid_argument);
}

TEST_CASE("permutation validity") {
  CHECK(is_valid_permutation(PermutationChromosome{{0, 1, 2}}, chain3));
  CHECK_FALSE(is_valid_permutation(PermutationChromosome{{0, 0, 2}}, chain3));
  CHECK_FALSE(is_valid_permutation(PermutationChromosome{{1, 0, 2}}, chain3));
  CHECK_FALSE(is_valid_permutation(PermutationChromosome{{0, 1, 5}}, chain3));
  CHECK_THROWS_AS(is_valid_permutation(PermutationChromosome{{0, 1}}, chain3), std::invalid_argument);
}

TEST_CASE("greedy first-fit decoding") {
  using V = std::vector<std::vector<int>>;
  CHECK(stations(decode_permutation({{0, 1, 2}}, make_instance({2, 3, 4}, {"1", "1", "1"}, 5))) == V{{0, 1}, {2}});
  CHECK(stations(decode_permutation({{0, 1}}, make_instance({5, 5}, {"1", "1"}, 5))) == V{{0}, {1}});
  CHECK(stations(decode_permutation({{0, 1, 2, 3}}, make_instance({2, 2, 2, 2}, {"1", "1", "1", "1"}, 4))) ==
        V{{0, 1}, {2, 3}});
  // members are listed in ascending id order regardless of sequence
  CHECK(stations(decode_permutation({{2, 0, 1}}, make_instance({1, 1, 1}, {"1", "1", "1"}, 3))) == V{{0, 1, 2}});
  CHECK_THROWS_AS(decode_permutation({{1, 0, 2}}, chain3), std::invalid_argument);
}

TEST_CASE("plan of assignment collapses gaps") {
  using V = std::vector<std::vector<int>>;
  const auto free3 = make_instance({1, 1, 1}, {"1", "1", "1"}, 3);
  CHECK(stations(plan_of_assignment({{0, 0, 2}}, free3)) == V{{0, 1}, {2}});
  CHECK(stations(plan_of_assignment({{2, 2, 2}}, free3)) == V{{0, 1, 2}});
  CHECK(stations(plan_of_assignment({{0, 1, 2}}, free3)) == V{{0}, {1}, {2}});
  CHECK(plan_of_assignment({{2, 0, 2}}, free3).station_of == std::vector<int>{1, 0, 1});
  CHECK_THROWS_AS(plan_of_assignment({{1, 0, 2}}, chain3), std::invalid_argument);
}

TEST_CASE("direct-edge check agrees with closure check") {
  Rng rng(21);
  std::vector<Instance> pool;
  for (int i = 0; i < 20; ++i) pool.push_back(oracle::random_instance(7, 6, 0.3, rng));
  int valid_seen = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const Instance& inst = pool[trial % pool.size()];
    std::vector<int> genes(7);
    for (int& g : genes) g = static_cast<int>(rng.uniform_int(0, 3));
    bool closure_ok = true;
    for (const Edge& e : transitive_closure(inst.precedence()))
      closure_ok = closure_ok && genes[e.from] <= genes[e.to];
    std::map<int, int> load;
    bool cap_ok = true;
    for (int i = 0; i < 7; ++i) cap_ok = cap_ok && (load[genes[i]] += inst.task(i).duration) <= inst.bound();
    const bool v = is_valid_assignment(genes, inst);
    CHECK(v == (closure_ok && cap_ok));
    valid_seen += v;
  }
  CHECK(valid_seen > 0);
}

TEST_CASE("decoded plans are valid and convert to valid assignments") {
  Rng rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform_int(0, 11));
    const auto inst = oracle::random_instance(n, 8, 0.2, rng);
    const auto p = random_valid_permutation(inst, rng);
    REQUIRE(is_valid_permutation(p, inst));
    const auto plan = decode_permutation(p, inst);
    CHECK(is_valid_plan(plan, inst));
    CHECK(is_valid_assignment(assignment_of_plan(plan), inst));
  }
}

TEST_CASE("planning preserves co-membership") {
  Rng rng(8);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform_int(0, 9));
    const auto inst = oracle::random_instance(n, 8, 0.2, rng);
    const auto c = random_valid_assignment(inst, rng);
    const auto plan = plan_of_assignment(c, inst);
    CHECK(is_valid_plan(plan, inst));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        CHECK((plan.station_of[i] == plan.station_of[j]) == (c.genes[i] == c.genes[j]));
  }
}

TEST_CASE("random valid assignments") {
  Rng rng(99);
  const auto single = make_instance({3}, {"2"}, 3);
  CHECK(random_valid_assignment(single, rng).genes == std::vector<int>{0});

  const auto loose = generate_case(Coupling::Loose, 12, 10, 4);
  int valid = 0;
  for (int i = 0; i < 10000; ++i) valid += is_valid_assignment(random_valid_assignment(loose, rng), loose);
  CHECK(valid == 10000);

  const auto tight = generate_case(Coupling::Tight, 10, 10, 1);
  std::set<std::vector<int>> distinct;
  for (int i = 0; i < 200; ++i) {
    auto c = random_valid_assignment(tight, rng);
    CHECK(is_valid_assignment(c, tight));
    distinct.insert(c.genes);
  }
  CHECK(distinct.size() > 20);
}

TEST_CASE("plan text format") {
  const auto inst = make_instance({2, 3, 4}, {"1.5", "2", "0.75"}, 5);
  const auto plan = decode_permutation({{0, 1, 2}}, inst);
  CHECK(format_plan(plan, inst) == "0: 0 1 | load=5 | maxcost=2.0\n1: 2 | load=4 | maxcost=0.75\n");
}
