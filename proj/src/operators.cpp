#include "linebal/operators.hpp"

#include <stdexcept>

namespace linebal {

void OperatorConfig::validate() const {
  if (!(mutation_probability >= 0.0 && mutation_probability <= 1.0))
    throw std::invalid_argument("mutation probability must lie in [0, 1]");
  if (max_retries < 1) throw std::invalid_argument("max_retries must be at least 1");
  if (!(crossover_rate > 0.0 && crossover_rate <= 1.0))
    throw std::invalid_argument("crossover rate must lie in (0, 1]");
}

std::pair<std::vector<int>, std::vector<int>> tail_swap(std::span<const int> a, std::span<const int> b,
                                                        std::size_t cut) {
  std::vector<int> first(a.begin(), a.begin() + cut);
  first.insert(first.end(), b.begin() + cut, b.end());
  std::vector<int> second(b.begin(), b.begin() + cut);
  second.insert(second.end(), a.begin() + cut, a.end());
  return {std::move(first), std::move(second)};
}

namespace {

std::size_t draw_cut(std::size_t n, Rng& rng) {
  return static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(n) - 1));
}

std::pair<std::size_t, std::size_t> draw_distinct_pair(std::size_t n, Rng& rng) {
  const auto i = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(n) - 1));
  auto j = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(n) - 2));
  if (j >= i) ++j;
  return {i, j};
}

// Swap-mutation shared by both encodings.
template <typename IsValid>
std::vector<int> swap_mutation(const std::vector<int>& genome, Rng& rng, const OperatorConfig& cfg,
                               RetryCounter* counter, IsValid&& is_valid) {
  if (!rng.bernoulli(cfg.mutation_probability) || genome.size() < 2) return genome;
  std::vector<int> trial = genome;
  for (int failures = 0; failures < cfg.max_retries; ++failures) {
    const auto [i, j] = draw_distinct_pair(genome.size(), rng);
    std::swap(trial[i], trial[j]);
    if (is_valid(trial)) {
      if (counter) counter->record(static_cast<std::uint64_t>(failures), false);
      return trial;
    }
    std::swap(trial[i], trial[j]);
  }
  if (counter) counter->record(static_cast<std::uint64_t>(cfg.max_retries), true);
  return genome;
}

}  // namespace

std::pair<AssignmentChromosome, AssignmentChromosome> crossover_assignment(
    const AssignmentChromosome& a, const AssignmentChromosome& b, const Instance& inst, Rng& rng,
    const OperatorConfig& cfg, RetryCounter* counter) {
  const std::size_t n = a.genes.size();
  if (b.genes.size() != n) throw std::invalid_argument("parents differ in length");
  if (n < 2) return {a, b};

  std::pair<AssignmentChromosome, AssignmentChromosome> out;
  bool need_first = true;
  bool need_second = true;
  int first_failures = 0;
  int second_failures = 0;
  while (need_first || need_second) {
    auto [c1, c2] = tail_swap(a.genes, b.genes, draw_cut(n, rng));
    if (need_first) {
      if (is_valid_assignment(c1, inst)) {
        out.first.genes = std::move(c1);
        need_first = false;
      } else if (++first_failures == cfg.max_retries) {
        out.first = a;
        need_first = false;
      }
    }
    if (need_second) {
      if (is_valid_assignment(c2, inst)) {
        out.second.genes = std::move(c2);
        need_second = false;
      } else if (++second_failures == cfg.max_retries) {
        out.second = b;
        need_second = false;
      }
    }
  }
  if (counter) {
    counter->record(static_cast<std::uint64_t>(first_failures), first_failures == cfg.max_retries);
    counter->record(static_cast<std::uint64_t>(second_failures), second_failures == cfg.max_retries);
  }
  return out;
}

std::vector<PermutationChromosome> crossover_permutation_at(const PermutationChromosome& a,
                                                            const PermutationChromosome& b, std::size_t cut,
                                                            const Instance& inst) {
  if (a.order.size() != b.order.size()) throw std::invalid_argument("parents differ in length");
  if (cut > a.order.size()) throw std::invalid_argument("cut point out of range");
  auto [c1, c2] = tail_swap(a.order, b.order, cut);
  std::vector<PermutationChromosome> out;
  if (is_valid_permutation(c1, inst)) out.push_back({std::move(c1)});
  if (is_valid_permutation(c2, inst)) out.push_back({std::move(c2)});
  return out;
}

std::vector<PermutationChromosome> crossover_permutation(const PermutationChromosome& a,
                                                         const PermutationChromosome& b, const Instance& inst,
                                                         Rng& rng, const OperatorConfig& cfg,
                                                         RetryCounter* counter) {
  const std::size_t n = a.order.size();
  if (n < 2 || !rng.bernoulli(cfg.crossover_rate)) return {a, b};
  auto kids = crossover_permutation_at(a, b, draw_cut(n, rng), inst);
  if (counter) counter->record(2 - kids.size(), false);
  return kids;
}

AssignmentChromosome mutate_assignment(const AssignmentChromosome& c, const Instance& inst, Rng& rng,
                                       const OperatorConfig& cfg, RetryCounter* counter) {
  return {swap_mutation(c.genes, rng, cfg, counter,
                        [&](const std::vector<int>& g) { return is_valid_assignment(g, inst); })};
}

PermutationChromosome mutate_permutation(const PermutationChromosome& p, const Instance& inst, Rng& rng,
                                         const OperatorConfig& cfg, RetryCounter* counter) {
  return {swap_mutation(p.order, rng, cfg, counter,
                        [&](const std::vector<int>& g) { return is_valid_permutation(g, inst); })};
}

}  // namespace linebal
