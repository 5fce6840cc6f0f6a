#include "linebal/engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace linebal {

Encoding parse_encoding(std::string_view name) {
  if (name == "task") return Encoding::Task;
  if (name == "station") return Encoding::Station;
  throw std::invalid_argument("unknown encoding '" + std::string(name) + "'");
}

std::string_view encoding_name(Encoding e) { return e == Encoding::Task ? "task" : "station"; }

void EngineConfig::validate() const {
  if (population_size < 2) throw std::invalid_argument("population size must be at least 2");
  if (generations < 0) throw std::invalid_argument("generations must be non-negative");
  if (candidate_parents < 1) throw std::invalid_argument("candidate parents must be at least 1");
}

std::size_t roulette_select(std::span<const double> fitness, double u) {
  if (fitness.empty()) throw std::invalid_argument("roulette over an empty population");
  double total = 0.0;
  for (double f : fitness) {
    if (!(f > 0.0)) throw std::invalid_argument("roulette requires positive fitness");
    total += f;
  }
  double running = 0.0;
  for (std::size_t i = 0; i + 1 < fitness.size(); ++i) {
    running += fitness[i];
    if (u < running / total) return i;
  }
  return fitness.size() - 1;
}

std::size_t fittest_index(const Population& pop) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < pop.members.size(); ++i)
    if (pop.members[i].cost < pop.members[best].cost) best = i;
  return best;
}

GenerationStats summarize(const Population& pop) {
  GenerationStats s;
  s.generation = pop.generation;
  s.min_fitness = pop.members.front().fitness;
  s.max_fitness = pop.members.front().fitness;
  double sum = 0.0;
  for (const Member& m : pop.members) {
    sum += m.fitness;
    s.min_fitness = std::min(s.min_fitness, m.fitness);
    s.max_fitness = std::max(s.max_fitness, m.fitness);
  }
  s.avg_fitness = sum / static_cast<double>(pop.members.size());
  s.best_cost = pop.members[fittest_index(pop)].cost;
  return s;
}

StationPlan plan_of_genome(Encoding encoding, std::span<const int> genome, const Instance& inst) {
  std::vector<int> g(genome.begin(), genome.end());
  return encoding == Encoding::Task ? plan_of_assignment({std::move(g)}, inst)
                                    : decode_permutation({std::move(g)}, inst);
}

bool genome_is_valid(Encoding encoding, std::span<const int> genome, const Instance& inst) {
  return encoding == Encoding::Task ? is_valid_assignment(genome, inst) : is_valid_permutation(genome, inst);
}

namespace {

void evaluate(std::span<Member> members, Encoding encoding, const Instance& inst) {
  std::vector<std::vector<int>> genomes;
  genomes.reserve(members.size());
  for (Member& m : members) genomes.push_back(std::move(m.genome));
  std::vector<Decimal> costs(members.size());
  evaluate_costs_parallel(encoding, genomes, inst, costs);
  for (std::size_t i = 0; i < members.size(); ++i) {
    members[i].genome = std::move(genomes[i]);
    members[i].cost = costs[i];
    members[i].fitness = fitness_from_cost(costs[i]);
  }
}

}  // namespace

Population initial_population(const Instance& inst, const EngineConfig& cfg, Rng& rng) {
  Population pop;
  pop.members.resize(cfg.population_size);
  for (Member& m : pop.members)
    m.genome = cfg.encoding == Encoding::Task ? random_valid_assignment(inst, rng).genes
                                              : random_valid_permutation(inst, rng).order;
  evaluate(pop.members, cfg.encoding, inst);
  return pop;
}

Population evolve_generation(const Population& pop, const Instance& inst, const EngineConfig& cfg,
                             const OperatorConfig& ops, Rng& rng, OperatorStats& stats, GenerationTrace* trace) {
  std::vector<double> fitness;
  fitness.reserve(pop.members.size());
  for (const Member& m : pop.members) fitness.push_back(m.fitness);

  auto pick = [&]() -> const Member& { return pop.members[roulette_select(fitness, rng.uniform01())]; };

  const std::size_t quota = 2 * static_cast<std::size_t>(cfg.candidate_parents);
  std::vector<Member> children;
  children.reserve(quota);
  std::size_t pairs = 0;

  if (cfg.encoding == Encoding::Task) {
    for (int p = 0; p < cfg.candidate_parents; ++p, ++pairs) {
      const Member& a = pick();
      const Member& b = pick();
      auto [c1, c2] = crossover_assignment({a.genome}, {b.genome}, inst, rng, ops, &stats.crossover);
      children.push_back({mutate_assignment(c1, inst, rng, ops, &stats.mutation).genes, {}, 0.0});
      children.push_back({mutate_assignment(c2, inst, rng, ops, &stats.mutation).genes, {}, 0.0});
    }
  } else {
    // Rejected permutation children leave the quota short; keep selecting
    // new pairs, but give up after max_retries * quota attempts.
    const std::size_t max_pairs = static_cast<std::size_t>(ops.max_retries) * quota;
    while (children.size() < quota && pairs < max_pairs) {
      const Member& a = pick();
      const Member& b = pick();
      ++pairs;
      for (auto& kid : crossover_permutation({a.genome}, {b.genome}, inst, rng, ops, &stats.crossover)) {
        if (children.size() == quota) break;
        children.push_back({mutate_permutation(kid, inst, rng, ops, &stats.mutation).order, {}, 0.0});
      }
    }
  }
  evaluate(children, cfg.encoding, inst);

  Population next;
  next.generation = pop.generation + 1;
  next.members = pop.members;
  for (Member& c : children) next.members.push_back(std::move(c));
  if (trace) {
    trace->children = children.size();
    trace->pre_cull_size = next.members.size();
    trace->parent_pairs = pairs;
  }

  const auto target = static_cast<std::size_t>(cfg.population_size);
  std::size_t protected_index = cfg.elitism ? fittest_index(next) : next.members.size();
  while (next.members.size() > target) {
    const std::size_t unprotected = next.members.size() - (cfg.elitism ? 1 : 0);
    auto victim = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(unprotected) - 1));
    if (cfg.elitism && victim >= protected_index) ++victim;
    next.members.erase(next.members.begin() + static_cast<std::ptrdiff_t>(victim));
    if (cfg.elitism && victim < protected_index) --protected_index;
  }
  return next;
}

RunReport run(const Instance& inst, const EngineConfig& cfg, const OperatorConfig& ops) {
  cfg.validate();
  ops.validate();
  if (inst.size() == 0) throw std::invalid_argument("cannot solve an empty instance");

  RunReport report;
  report.engine = cfg;
  report.operators = ops;

  Rng init_rng(derive_seed(cfg.seed, 0));
  Population pop = initial_population(inst, cfg, init_rng);
  report.evaluations = pop.members.size();
  report.rows.push_back(summarize(pop));

  auto track_best = [&](const Population& p) {
    const Member& m = p.members[fittest_index(p)];
    if (report.best_genome.empty() || m.cost < report.best_breakdown.total) {
      report.best_genome = m.genome;
      report.best_breakdown.total = m.cost;
    }
  };
  track_best(pop);

  for (int g = 1; g <= cfg.generations; ++g) {
    Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(g)));
    GenerationTrace trace;
    pop = evolve_generation(pop, inst, cfg, ops, rng, report.stats, &trace);
    report.evaluations += trace.children;
    report.rows.push_back(summarize(pop));
    track_best(pop);
  }

  report.best_plan = plan_of_genome(cfg.encoding, report.best_genome, inst);
  report.best_breakdown = total_cost(report.best_plan, inst);
  return report;
}

}  // namespace linebal
