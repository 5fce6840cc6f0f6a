#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "linebal/encoding.hpp"
#include "linebal/fitness.hpp"
#include "linebal/instance.hpp"
#include "linebal/kernels.hpp"
#include "linebal/operators.hpp"
#include "linebal/rng.hpp"

namespace linebal {

Encoding parse_encoding(std::string_view name);
std::string_view encoding_name(Encoding e);

struct EngineConfig {
  int population_size = 50;
  int generations = 500;
  int candidate_parents = 10;  // parent pairs per generation
  bool elitism = true;
  std::uint64_t seed = 1;
  Encoding encoding = Encoding::Task;

  /// Throws std::invalid_argument.
  void validate() const;
};

struct Member {
  std::vector<int> genome;  // station genes or task order, per encoding
  Decimal cost;
  double fitness = 0.0;
};

struct Population {
  std::vector<Member> members;
  int generation = 0;
};

struct GenerationStats {
  int generation = 0;
  double avg_fitness = 0.0;
  double min_fitness = 0.0;
  double max_fitness = 0.0;
  Decimal best_cost;
};

/// Per-generation diagnostics from evolve_generation.
struct GenerationTrace {
  std::size_t children = 0;
  std::size_t pre_cull_size = 0;
  std::size_t parent_pairs = 0;
};

struct RunReport {
  EngineConfig engine;
  OperatorConfig operators;
  std::vector<GenerationStats> rows;  // generation 0 (initial) .. generations
  std::vector<int> best_genome;       // best seen over the whole run
  StationPlan best_plan;
  CostBreakdown best_breakdown;
  OperatorStats stats;
  std::uint64_t evaluations = 0;
};

/// Smallest i with u < c_i, where c_i is the cumulative fitness share and
/// c_n is pinned to 1. Intervals are half-open: [c_{i-1}, c_i).
/// Throws std::invalid_argument for an empty span or a non-positive fitness.
std::size_t roulette_select(std::span<const double> fitness, double u);

/// Index of the fittest member (lowest cost, then lowest index).
std::size_t fittest_index(const Population& pop);

GenerationStats summarize(const Population& pop);

Population initial_population(const Instance& inst, const EngineConfig& cfg, Rng& rng);

/// One generation: roulette-select `candidate_parents` pairs, cross and
/// mutate, append the children, protect the fittest member when elitism is
/// on, then delete uniformly random unprotected members until the size is
/// back to population_size. Child evaluation runs in parallel and never
/// touches `rng`.
Population evolve_generation(const Population& pop, const Instance& inst, const EngineConfig& cfg,
                             const OperatorConfig& ops, Rng& rng, OperatorStats& stats,
                             GenerationTrace* trace = nullptr);

/// Full deterministic run. Generation g draws from the stream
/// derive_seed(seed, g); the initial population uses stream 0.
RunReport run(const Instance& inst, const EngineConfig& cfg, const OperatorConfig& ops);

/// Plan of a genome under the given encoding.
StationPlan plan_of_genome(Encoding encoding, std::span<const int> genome, const Instance& inst);

bool genome_is_valid(Encoding encoding, std::span<const int> genome, const Instance& inst);

}  // namespace linebal
