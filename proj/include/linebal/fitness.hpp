#pragma once

#include <span>
#include <vector>

#include "linebal/decimal.hpp"
#include "linebal/encoding.hpp"
#include "linebal/instance.hpp"

namespace linebal {

struct StationCost {
  int station = 0;
  Decimal max_unit_cost;
  Decimal cost;  // bound * max_unit_cost
};

struct CostBreakdown {
  std::vector<StationCost> per_station;
  Decimal total;
  friend bool operator==(const CostBreakdown& a, const CostBreakdown& b) { return a.total == b.total; }
};

/// Every station is billed for the full duration bound K at the highest
/// unit cost among its tasks, regardless of its actual load.
/// Throws std::invalid_argument for an empty plan or an empty station.
CostBreakdown total_cost(const StationPlan& plan, const Instance& inst);

/// 1 / total cost.
double fitness_of(const StationPlan& plan, const Instance& inst);
inline double fitness_from_cost(Decimal total) { return 1.0 / total.to_double(); }

/// Total cost straight from a valid assignment genome; empty station
/// numbers contribute nothing. Equals total_cost(plan_of_assignment(...)).
Decimal assignment_cost(std::span<const int> genes, const Instance& inst);

/// Total cost of the greedy first-fit decoding of a valid permutation.
Decimal permutation_cost(std::span<const int> order, const Instance& inst);

}  // namespace linebal
