#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "linebal/instance.hpp"
#include "linebal/rng.hpp"

namespace linebal {

/// Task-indexed genome: genes[i] is the station of task i, in [0, N-1].
struct AssignmentChromosome {
  std::vector<int> genes;
  friend bool operator==(const AssignmentChromosome&, const AssignmentChromosome&) = default;
};

/// Ordering of task ids, decoded by greedy first-fit.
struct PermutationChromosome {
  std::vector<int> order;
  friend bool operator==(const PermutationChromosome&, const PermutationChromosome&) = default;
};

/// Canonical station assignment: non-empty stations numbered 0..S-1,
/// tasks inside a station in ascending id order.
struct StationPlan {
  std::vector<int> station_of;
  std::vector<std::vector<int>> stations;
  friend bool operator==(const StationPlan&, const StationPlan&) = default;
};

/// Capacity per station and genes[i] <= genes[j] for every direct edge.
/// Out-of-range genes make the genome invalid. Throws std::invalid_argument
/// on a length mismatch.
bool is_valid_assignment(std::span<const int> genes, const Instance& inst);
inline bool is_valid_assignment(const AssignmentChromosome& c, const Instance& inst) {
  return is_valid_assignment(c.genes, inst);
}

/// Every id exactly once and each prerequisite strictly before its dependent.
bool is_valid_permutation(std::span<const int> order, const Instance& inst);
inline bool is_valid_permutation(const PermutationChromosome& p, const Instance& inst) {
  return is_valid_permutation(p.order, inst);
}

/// Throws std::invalid_argument for an invalid permutation.
StationPlan decode_permutation(const PermutationChromosome& p, const Instance& inst);

/// Groups tasks by gene value and renumbers the non-empty stations in
/// order. Throws std::invalid_argument for an invalid chromosome.
StationPlan plan_of_assignment(const AssignmentChromosome& c, const Instance& inst);

inline AssignmentChromosome assignment_of_plan(const StationPlan& plan) { return {plan.station_of}; }

/// Non-empty stations, capacity, and precedence on station indices.
bool is_valid_plan(const StationPlan& plan, const Instance& inst);

/// Uniformly random topological order (uniform choice among ready tasks).
std::vector<int> random_topological_order(const Instance& inst, Rng& rng);

PermutationChromosome random_valid_permutation(const Instance& inst, Rng& rng);

/// Places tasks along a random topological order. The t-th placed task
/// draws a station uniformly from [max station of its prerequisites, t]
/// and redraws until it fits; station t is always empty, so each draw
/// loop terminates.
AssignmentChromosome random_valid_assignment(const Instance& inst, Rng& rng);

/// One line per station: `s: id id id | load=<sum> | maxcost=<value>`.
void write_plan(std::ostream& out, const StationPlan& plan, const Instance& inst);
std::string format_plan(const StationPlan& plan, const Instance& inst);

}  // namespace linebal
