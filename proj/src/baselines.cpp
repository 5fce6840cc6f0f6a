#include "linebal/baselines.hpp"

#include <stdexcept>

#include "linebal/rng.hpp"

namespace linebal {

namespace {

SolveResult finish(std::vector<int> genes, const Instance& inst, std::uint64_t evaluations) {
  SolveResult out;
  out.plan = plan_of_assignment({genes}, inst);
  out.breakdown = total_cost(out.plan, inst);
  out.genes = std::move(genes);
  out.evaluations = evaluations;
  return out;
}

}  // namespace

SolveResult brute_force_optimum(const Instance& inst, int cap) {
  auto found = enumerate_optimum_parallel(inst, cap);
  return finish(std::move(found.genes), inst, found.visited);
}

SolveResult random_search(const Instance& inst, std::uint64_t evaluations, std::uint64_t seed) {
  if (evaluations == 0) throw std::invalid_argument("random search needs at least one evaluation");
  if (inst.size() == 0) throw std::invalid_argument("cannot solve an empty instance");
  Rng rng(derive_seed(seed, 0));
  std::vector<int> best;
  Decimal best_cost;
  for (std::uint64_t i = 0; i < evaluations; ++i) {
    auto sample = random_valid_assignment(inst, rng);
    const Decimal cost = assignment_cost(sample.genes, inst);
    if (best.empty() || cost < best_cost) {
      best = std::move(sample.genes);
      best_cost = cost;
    }
  }
  return finish(std::move(best), inst, evaluations);
}

HillClimbResult hill_climb(const Instance& inst, int max_steps, int restarts, std::uint64_t seed) {
  if (restarts < 1) throw std::invalid_argument("hill climbing needs at least one restart");
  if (max_steps < 0) throw std::invalid_argument("max_steps must be non-negative");
  if (inst.size() == 0) throw std::invalid_argument("cannot solve an empty instance");
  const int n = inst.size();
  HillClimbResult out;
  std::vector<int> best;
  Decimal best_cost;
  std::uint64_t evaluations = 0;

  for (int r = 0; r < restarts; ++r) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    std::vector<int> current = random_valid_assignment(inst, rng).genes;
    Decimal current_cost = assignment_cost(current, inst);
    ++evaluations;
    ClimbTrace trace;
    trace.costs.push_back(current_cost);

    for (int step = 0; step < max_steps; ++step) {
      std::vector<int> candidate = current;
      std::vector<int> move_to;
      Decimal move_cost = current_cost;
      auto consider = [&]() {
        if (!is_valid_assignment(candidate, inst)) return;
        ++evaluations;
        const Decimal c = assignment_cost(candidate, inst);
        if (c < move_cost) {
          move_cost = c;
          move_to = candidate;
        }
      };
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          if (candidate[i] == candidate[j]) continue;
          std::swap(candidate[i], candidate[j]);
          consider();
          std::swap(candidate[i], candidate[j]);
        }
      for (int i = 0; i < n; ++i) {
        const int original = candidate[i];
        for (int s = 0; s < n; ++s) {
          if (s == original) continue;
          candidate[i] = s;
          consider();
        }
        candidate[i] = original;
      }
      if (move_to.empty()) {
        trace.local_optimum = true;
        break;
      }
      current = std::move(move_to);
      current_cost = move_cost;
      trace.costs.push_back(current_cost);
    }

    if (best.empty() || current_cost < best_cost) {
      best = current;
      best_cost = current_cost;
    }
    out.restarts.push_back(std::move(trace));
  }
  out.best = finish(std::move(best), inst, evaluations);
  return out;
}

}  // namespace linebal
