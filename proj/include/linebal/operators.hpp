#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "linebal/encoding.hpp"
#include "linebal/instance.hpp"
#include "linebal/rng.hpp"

namespace linebal {

struct OperatorConfig {
  double mutation_probability = 0.1;  // per child
  int max_retries = 1000;             // failed attempts before falling back
  double crossover_rate = 1.0;        // permutation mode only, in (0, 1]

  /// Throws std::invalid_argument.
  void validate() const;
};

/// Retry bookkeeping for one operator. A "retry" is one rejected candidate.
struct RetryCounter {
  std::uint64_t calls = 0;
  std::uint64_t retries = 0;
  std::uint64_t max_retries = 0;
  std::uint64_t fallbacks = 0;

  void record(std::uint64_t r, bool fell_back) {
    ++calls;
    retries += r;
    max_retries = std::max(max_retries, r);
    fallbacks += fell_back ? 1 : 0;
  }
  double mean() const { return calls == 0 ? 0.0 : static_cast<double>(retries) / static_cast<double>(calls); }
};

struct OperatorStats {
  RetryCounter crossover;
  RetryCounter mutation;
};

/// One-point crossover on station genes. The cut is uniform in [1, N-1];
/// an invalid child triggers a new cut for that child. After max_retries
/// failures a child falls back to a copy of its own parent (a for the
/// first, b for the second). Both returned children are valid.
std::pair<AssignmentChromosome, AssignmentChromosome> crossover_assignment(
    const AssignmentChromosome& a, const AssignmentChromosome& b, const Instance& inst, Rng& rng,
    const OperatorConfig& cfg, RetryCounter* counter = nullptr);

/// Tail swap at a fixed cut; both children, valid or not.
std::pair<std::vector<int>, std::vector<int>> tail_swap(std::span<const int> a, std::span<const int> b,
                                                        std::size_t cut);

/// Tail swap at `cut`, keeping only children that are valid permutations.
std::vector<PermutationChromosome> crossover_permutation_at(const PermutationChromosome& a,
                                                            const PermutationChromosome& b, std::size_t cut,
                                                            const Instance& inst);

/// With probability crossover_rate, tail swap at a uniform cut in [1, N-1]
/// and reject invalid children (0, 1 or 2 survive). Otherwise the parents
/// are returned unchanged.
std::vector<PermutationChromosome> crossover_permutation(const PermutationChromosome& a,
                                                         const PermutationChromosome& b, const Instance& inst,
                                                         Rng& rng, const OperatorConfig& cfg,
                                                         RetryCounter* counter = nullptr);

/// With probability mutation_probability, swap the stations of two
/// distinct tasks, redrawing the pair while the result is invalid; after
/// max_retries failures the input is returned unchanged.
AssignmentChromosome mutate_assignment(const AssignmentChromosome& c, const Instance& inst, Rng& rng,
                                       const OperatorConfig& cfg, RetryCounter* counter = nullptr);

/// Same contract as mutate_assignment, swapping two positions of the order.
PermutationChromosome mutate_permutation(const PermutationChromosome& p, const Instance& inst, Rng& rng,
                                         const OperatorConfig& cfg, RetryCounter* counter = nullptr);

}  // namespace linebal
