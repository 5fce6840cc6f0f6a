#include <doctest.h>

#include "linebal/encoding.hpp"
#include "linebal/kernels.hpp"
#include "oracles.hpp"

using namespace linebal;

TEST_CASE("parallel evaluation matches the serial reference") {
  Rng rng(2);
  for (Encoding enc : {Encoding::Task, Encoding::Station}) {
    const auto inst = generate_case(Coupling::Loose, 30, 12, 9);
    std::vector<std::vector<int>> genomes;
    for (int i = 0; i < 500; ++i)
      genomes.push_back(enc == Encoding::Task ? random_valid_assignment(inst, rng).genes
                                              : random_valid_permutation(inst, rng).order);
    std::vector<Decimal> serial(genomes.size()), parallel(genomes.size());
    evaluate_costs_serial(enc, genomes, inst, serial);
    evaluate_costs_parallel(enc, genomes, inst, parallel);
    CHECK(serial == parallel);
  }
}

TEST_CASE("enumeration finds the exhaustive optimum") {
  Rng rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform_int(0, 5));
    const auto inst = oracle::random_instance(n, 6, 0.3, rng);
    const auto serial = enumerate_optimum_serial(inst);
    CHECK(serial.cost == oracle::brute_force_cost(inst));
    CHECK(oracle::feasible(inst, serial.genes));
    CHECK(oracle::formula_cost(inst, serial.genes) == serial.cost);

    const auto parallel = enumerate_optimum_parallel(inst);
    CHECK(parallel.cost == serial.cost);
    CHECK(parallel.genes == serial.genes);
    CHECK(parallel.valid == serial.valid);
  }
}

TEST_CASE("enumeration breaks ties toward the smallest gene vector") {
  // Identical tasks: every single-station placement ties; [0,0,0] is first.
  const auto inst = oracle::make_instance({1, 1, 1}, {"1", "1", "1"}, 3);
  CHECK(enumerate_optimum_serial(inst).genes == std::vector<int>{0, 0, 0});
  CHECK(enumerate_optimum_parallel(inst).genes == std::vector<int>{0, 0, 0});
}

TEST_CASE("parallel enumeration agrees at the size cap") {
  const auto inst = generate_case(Coupling::Loose, 8, 8, 77);
  const auto serial = enumerate_optimum_serial(inst);
  const auto parallel = enumerate_optimum_parallel(inst);
  CHECK(serial.visited == 16777216ULL);
  CHECK(parallel.genes == serial.genes);
  CHECK(parallel.valid == serial.valid);
}

TEST_CASE("enumeration guards") {
  CHECK_THROWS_AS(enumerate_optimum_serial(generate_case(Coupling::None, 9, 8, 1)), std::invalid_argument);
  CHECK_NOTHROW(enumerate_optimum_serial(generate_case(Coupling::Tight, 7, 8, 1), 7));
  CHECK_THROWS_AS(enumerate_optimum_parallel(generate_case(Coupling::Tight, 7, 8, 1), 6), std::invalid_argument);
}
