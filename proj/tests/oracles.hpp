#pragma once

// Test-only reference computations. Deliberately naive and independent of
// the library code paths they are used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "linebal/decimal.hpp"
#include "linebal/instance.hpp"
#include "linebal/rng.hpp"

namespace oracle {

using linebal::Decimal;
using linebal::Edge;
using linebal::Instance;

// Reachability by explicit DFS path enumeration from every source.
inline std::set<std::pair<int, int>> closure_by_paths(int n, const std::vector<Edge>& edges) {
  std::set<std::pair<int, int>> out;
  std::function<void(int, int)> walk = [&](int src, int u) {
    for (const Edge& e : edges)
      if (e.from == u && out.insert({src, e.to}).second) walk(src, e.to);
  };
  for (int s = 0; s < n; ++s) walk(s, s);
  return out;
}

inline bool acyclic_by_kahn(int n, const std::vector<Edge>& edges) {
  std::vector<int> indeg(n, 0);
  for (const Edge& e : edges) ++indeg[e.to];
  std::vector<int> stack;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) stack.push_back(i);
  int seen = 0;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    ++seen;
    for (const Edge& e : edges)
      if (e.from == u && --indeg[e.to] == 0) stack.push_back(e.to);
  }
  return seen == n;
}

// Number of permutations of 0..n-1 respecting every edge.
inline long linear_extensions(int n, const std::vector<Edge>& edges) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  long count = 0;
  do {
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[p[i]] = i;
    bool ok = true;
    for (const Edge& e : edges) ok = ok && pos[e.from] < pos[e.to];
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

// Cost straight from the formula on a task->station map.
inline Decimal formula_cost(const Instance& inst, const std::vector<int>& genes) {
  std::map<int, Decimal> top;
  for (int i = 0; i < inst.size(); ++i) {
    auto& t = top[genes[i]];
    t = std::max(t, inst.task(i).unit_cost);
  }
  Decimal total;
  for (const auto& [s, c] : top) total += static_cast<std::int64_t>(inst.bound()) * c;
  return total;
}

inline bool feasible(const Instance& inst, const std::vector<int>& genes) {
  std::map<int, int> load;
  for (int i = 0; i < inst.size(); ++i)
    if ((load[genes[i]] += inst.task(i).duration) > inst.bound()) return false;
  for (const Edge& e : inst.precedence().edges())
    if (genes[e.from] > genes[e.to]) return false;
  return true;
}

// Recursive exhaustive minimum over all gene vectors.
inline Decimal brute_force_cost(const Instance& inst) {
  const int n = inst.size();
  std::vector<int> genes(n, 0);
  bool found = false;
  Decimal best;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (!feasible(inst, genes)) return;
      const Decimal c = formula_cost(inst, genes);
      if (!found || c < best) best = c;
      found = true;
      return;
    }
    for (int s = 0; s < n; ++s) {
      genes[i] = s;
      rec(i + 1);
    }
  };
  rec(0);
  return best;
}

// Random DAG: forward edges under a random relabeling.
inline std::vector<Edge> random_dag(int n, double density, linebal::Rng& rng) {
  std::vector<int> label(n);
  for (int i = 0; i < n; ++i) label[i] = i;
  rng.shuffle(std::span<int>(label));
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.bernoulli(density)) edges.push_back({label[i], label[j]});
  return edges;
}

inline Instance random_instance(int n, int bound, double density, linebal::Rng& rng) {
  std::vector<linebal::Task> tasks(n);
  for (int i = 0; i < n; ++i)
    tasks[i] = {i, static_cast<int>(rng.uniform_int(1, bound)),
                Decimal::from_units(rng.uniform_int(1, 100) * 1000)};
  return Instance(std::move(tasks), linebal::PrecedenceGraph(n, random_dag(n, density, rng)), bound);
}

inline Instance make_instance(std::vector<int> durations, std::vector<const char*> costs, int bound,
                              std::vector<Edge> edges = {}) {
  std::vector<linebal::Task> tasks;
  for (std::size_t i = 0; i < durations.size(); ++i)
    tasks.push_back({static_cast<int>(i), durations[i], Decimal::parse(costs[i])});
  const int n = static_cast<int>(tasks.size());
  return Instance(std::move(tasks), linebal::PrecedenceGraph(n, std::move(edges)), bound);
}

}  // namespace oracle
