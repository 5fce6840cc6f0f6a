#pragma once

// Data-parallel kernels. Each OpenMP kernel has a serial reference with
// the same contract; the test suite checks that they agree exactly and
// bench/ compares their throughput.

#include <cstdint>
#include <span>
#include <vector>

#include "linebal/decimal.hpp"
#include "linebal/instance.hpp"

namespace linebal {

enum class Encoding { Task, Station };

/// Cost of one genome: an assignment for Encoding::Task, a permutation
/// (decoded greedily) for Encoding::Station.
Decimal genome_cost(Encoding encoding, std::span<const int> genome, const Instance& inst);

void evaluate_costs_serial(Encoding encoding, std::span<const std::vector<int>> genomes, const Instance& inst,
                           std::span<Decimal> costs);
void evaluate_costs_parallel(Encoding encoding, std::span<const std::vector<int>> genomes, const Instance& inst,
                             std::span<Decimal> costs);

struct EnumerationResult {
  std::vector<int> genes;  // lexicographically smallest minimum-cost genome
  Decimal cost;
  std::uint64_t valid = 0;    // valid genomes seen
  std::uint64_t visited = 0;  // N^N
};

inline constexpr int kDefaultOracleCap = 8;

/// Exhaustive scan of all N^N gene vectors in lexicographic order
/// (genes[0] most significant). Throws std::invalid_argument when N is 0
/// or above `cap`.
EnumerationResult enumerate_optimum_serial(const Instance& inst, int cap = kDefaultOracleCap);

/// Same result as the serial scan: the index range is split across
/// threads and partial minima are merged by (cost, index).
EnumerationResult enumerate_optimum_parallel(const Instance& inst, int cap = kDefaultOracleCap);

}  // namespace linebal
