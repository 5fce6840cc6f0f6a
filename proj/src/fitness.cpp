#include "linebal/fitness.hpp"

#include <algorithm>
#include <stdexcept>

namespace linebal {

CostBreakdown total_cost(const StationPlan& plan, const Instance& inst) {
  if (plan.stations.empty()) throw std::invalid_argument("cost of an empty plan is undefined");
  CostBreakdown out;
  out.per_station.reserve(plan.stations.size());
  for (std::size_t s = 0; s < plan.stations.size(); ++s) {
    const auto& tasks = plan.stations[s];
    if (tasks.empty()) throw std::invalid_argument("plan contains an empty station");
    Decimal top;
    for (int t : tasks) top = std::max(top, inst.task(t).unit_cost);
    const Decimal cost = static_cast<std::int64_t>(inst.bound()) * top;
    out.per_station.push_back({static_cast<int>(s), top, cost});
    out.total += cost;
  }
  return out;
}

double fitness_of(const StationPlan& plan, const Instance& inst) {
  return fitness_from_cost(total_cost(plan, inst).total);
}

Decimal assignment_cost(std::span<const int> genes, const Instance& inst) {
  const int n = inst.size();
  if (n == 0) throw std::invalid_argument("cost of an empty plan is undefined");
  std::vector<std::int64_t> top(n, 0);
  for (int i = 0; i < n; ++i) top[genes[i]] = std::max(top[genes[i]], inst.task(i).unit_cost.units());
  std::int64_t sum = 0;
  for (auto v : top) sum += v;
  return static_cast<std::int64_t>(inst.bound()) * Decimal::from_units(sum);
}

Decimal permutation_cost(std::span<const int> order, const Instance& inst) {
  if (order.empty()) throw std::invalid_argument("cost of an empty plan is undefined");
  std::int64_t sum = 0;
  std::int64_t top = 0;
  int load = 0;
  for (int t : order) {
    const Task& task = inst.task(t);
    if (load > 0 && load + task.duration > inst.bound()) {
      sum += top;
      top = 0;
      load = 0;
    }
    load += task.duration;
    top = std::max(top, task.unit_cost.units());
  }
  sum += top;
  return static_cast<std::int64_t>(inst.bound()) * Decimal::from_units(sum);
}

}  // namespace linebal
