#include "linebal/encoding.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace linebal {

namespace {

void require_length(std::size_t got, const Instance& inst) {
  if (got != static_cast<std::size_t>(inst.size()))
    throw std::invalid_argument("chromosome length " + std::to_string(got) + " does not match task count " +
                                std::to_string(inst.size()));
}

}  // namespace

bool is_valid_assignment(std::span<const int> genes, const Instance& inst) {
  require_length(genes.size(), inst);
  const int n = inst.size();
  std::vector<int> load(n, 0);
  for (int i = 0; i < n; ++i) {
    const int s = genes[i];
    if (s < 0 || s >= n) return false;
    load[s] += inst.task(i).duration;
    if (load[s] > inst.bound()) return false;
  }
  for (const Edge& e : inst.precedence().edges())
    if (genes[e.from] > genes[e.to]) return false;
  return true;
}

bool is_valid_permutation(std::span<const int> order, const Instance& inst) {
  require_length(order.size(), inst);
  const int n = inst.size();
  std::vector<int> position(n, -1);
  for (int pos = 0; pos < n; ++pos) {
    const int t = order[pos];
    if (t < 0 || t >= n) return false;   // missing task
    if (position[t] != -1) return false;  // duplicate
    position[t] = pos;
  }
  for (const Edge& e : inst.precedence().edges())
    if (position[e.from] > position[e.to]) return false;
  return true;
}

namespace {

StationPlan plan_from_station_of(std::vector<int> station_of, int station_count) {
  StationPlan plan;
  plan.stations.resize(station_count);
  for (int t = 0; t < static_cast<int>(station_of.size()); ++t) plan.stations[station_of[t]].push_back(t);
  plan.station_of = std::move(station_of);
  return plan;
}

}  // namespace

StationPlan decode_permutation(const PermutationChromosome& p, const Instance& inst) {
  if (!is_valid_permutation(p, inst)) throw std::invalid_argument("cannot decode an invalid permutation");
  std::vector<int> station_of(inst.size());
  int station = 0;
  int load = 0;
  for (std::size_t k = 0; k < p.order.size(); ++k) {
    const int t = p.order[k];
    const int d = inst.task(t).duration;
    if (k > 0 && load + d > inst.bound()) {
      ++station;
      load = 0;
    }
    load += d;
    station_of[t] = station;
  }
  return plan_from_station_of(std::move(station_of), inst.size() == 0 ? 0 : station + 1);
}

StationPlan plan_of_assignment(const AssignmentChromosome& c, const Instance& inst) {
  if (!is_valid_assignment(c, inst)) throw std::invalid_argument("cannot plan an invalid assignment");
  const int n = inst.size();
  std::vector<int> renumber(n, -1);
  for (int g : c.genes) renumber[g] = 0;
  int next = 0;
  for (int s = 0; s < n; ++s)
    if (renumber[s] == 0) renumber[s] = next++;
  std::vector<int> station_of(n);
  for (int t = 0; t < n; ++t) station_of[t] = renumber[c.genes[t]];
  return plan_from_station_of(std::move(station_of), next);
}

bool is_valid_plan(const StationPlan& plan, const Instance& inst) {
  if (plan.station_of.size() != static_cast<std::size_t>(inst.size())) return false;
  const int count = static_cast<int>(plan.stations.size());
  std::vector<int> members(count, 0);
  for (int s = 0; s < count; ++s) {
    const auto& st = plan.stations[s];
    if (st.empty()) return false;
    int load = 0;
    for (int t : st) {
      if (t < 0 || t >= inst.size() || plan.station_of[t] != s) return false;
      load += inst.task(t).duration;
    }
    if (load > inst.bound()) return false;
    members[s] = static_cast<int>(st.size());
  }
  for (int s : plan.station_of)
    if (s < 0 || s >= count) return false;
  int total = 0;
  for (int m : members) total += m;
  if (total != inst.size()) return false;
  for (const Edge& e : inst.precedence().edges())
    if (plan.station_of[e.from] > plan.station_of[e.to]) return false;
  return true;
}

std::vector<int> random_topological_order(const Instance& inst, Rng& rng) {
  const auto& graph = inst.precedence();
  const int n = inst.size();
  std::vector<int> indegree(n, 0);
  for (const Edge& e : graph.edges()) ++indegree[e.to];
  std::vector<int> ready;
  for (int i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.push_back(i);

  std::vector<int> order;
  order.reserve(n);
  while (!ready.empty()) {
    const auto pick = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(ready.size()) - 1));
    const int u = ready[pick];
    ready[pick] = ready.back();
    ready.pop_back();
    order.push_back(u);
    for (int v : graph.successors(u))
      if (--indegree[v] == 0) ready.push_back(v);
  }
  return order;
}

PermutationChromosome random_valid_permutation(const Instance& inst, Rng& rng) {
  return {random_topological_order(inst, rng)};
}

AssignmentChromosome random_valid_assignment(const Instance& inst, Rng& rng) {
  const int n = inst.size();
  const auto order = random_topological_order(inst, rng);
  std::vector<int> genes(n, 0);
  std::vector<int> load(n, 0);
  for (int t = 0; t < n; ++t) {
    const int task = order[t];
    int lo = 0;
    for (int p : inst.precedence().predecessors(task)) lo = std::max(lo, genes[p]);
    const int d = inst.task(task).duration;
    int s = 0;
    do {
      s = static_cast<int>(rng.uniform_int(lo, t));
    } while (load[s] + d > inst.bound());
    genes[task] = s;
    load[s] += d;
  }
  return {std::move(genes)};
}

void write_plan(std::ostream& out, const StationPlan& plan, const Instance& inst) {
  for (std::size_t s = 0; s < plan.stations.size(); ++s) {
    int load = 0;
    Decimal maxcost;
    out << s << ':';
    for (int t : plan.stations[s]) {
      out << ' ' << t;
      load += inst.task(t).duration;
      maxcost = std::max(maxcost, inst.task(t).unit_cost);
    }
    out << " | load=" << load << " | maxcost=" << maxcost.to_string() << '\n';
  }
}

std::string format_plan(const StationPlan& plan, const Instance& inst) {
  std::ostringstream out;
  write_plan(out, plan, inst);
  return out.str();
}

}  // namespace linebal
