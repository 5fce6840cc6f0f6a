#pragma once

#include <cstdint>
#include <vector>

#include "linebal/encoding.hpp"
#include "linebal/fitness.hpp"
#include "linebal/instance.hpp"
#include "linebal/kernels.hpp"

namespace linebal {

struct SolveResult {
  std::vector<int> genes;
  StationPlan plan;
  CostBreakdown breakdown;
  std::uint64_t evaluations = 0;
};

/// Exact optimum by enumerating every gene vector; ties go to the
/// lexicographically smallest genes. Throws std::invalid_argument above
/// `cap` tasks.
SolveResult brute_force_optimum(const Instance& inst, int cap = kDefaultOracleCap);

/// Best of `evaluations` independent random_valid_assignment samples
/// (first one wins ties).
SolveResult random_search(const Instance& inst, std::uint64_t evaluations, std::uint64_t seed);

struct ClimbTrace {
  std::vector<Decimal> costs;  // start cost, then one entry per accepted move
  bool local_optimum = false;  // stopped because no neighbor improved
};

struct HillClimbResult {
  SolveResult best;
  std::vector<ClimbTrace> restarts;
};

/// Steepest-descent over assignments. The neighborhood is every swap of two
/// tasks' stations plus every single-task move to another station in
/// [0, N-1], restricted to valid results; the first strictly best neighbor
/// is taken. Each restart begins at a fresh random valid assignment.
HillClimbResult hill_climb(const Instance& inst, int max_steps, int restarts, std::uint64_t seed);

}  // namespace linebal
