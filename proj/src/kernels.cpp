#include "linebal/kernels.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "linebal/encoding.hpp"
#include "linebal/fitness.hpp"

namespace linebal {

Decimal genome_cost(Encoding encoding, std::span<const int> genome, const Instance& inst) {
  return encoding == Encoding::Task ? assignment_cost(genome, inst) : permutation_cost(genome, inst);
}

void evaluate_costs_serial(Encoding encoding, std::span<const std::vector<int>> genomes, const Instance& inst,
                           std::span<Decimal> costs) {
  for (std::size_t i = 0; i < genomes.size(); ++i) costs[i] = genome_cost(encoding, genomes[i], inst);
}

void evaluate_costs_parallel(Encoding encoding, std::span<const std::vector<int>> genomes, const Instance& inst,
                             std::span<Decimal> costs) {
  const auto count = static_cast<std::int64_t>(genomes.size());
#pragma omp parallel for schedule(static) if (count > 64)
  for (std::int64_t i = 0; i < count; ++i) costs[i] = genome_cost(encoding, genomes[i], inst);
}

namespace {

std::uint64_t checked_space(const Instance& inst, int cap) {
  const int n = inst.size();
  if (n == 0) throw std::invalid_argument("cannot enumerate an empty instance");
  if (n > cap)
    throw std::invalid_argument("instance has " + std::to_string(n) + " tasks, above the enumeration cap of " +
                                std::to_string(cap));
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(n);
  return total;
}

struct Best {
  std::int64_t cost = std::numeric_limits<std::int64_t>::max();
  std::uint64_t index = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t valid = 0;

  void offer(std::int64_t c, std::uint64_t i) {
    if (c < cost || (c == cost && i < index)) {
      cost = c;
      index = i;
    }
  }
  void merge(const Best& other) {
    offer(other.cost, other.index);
    valid += other.valid;
  }
};

// Scans gene vectors with lexicographic index in [begin, end). Scratch
// arrays are local so each thread owns its own.
Best scan_range(const Instance& inst, std::uint64_t begin, std::uint64_t end) {
  const int n = inst.size();
  const int bound = inst.bound();
  const auto edges = inst.precedence().edges();
  std::vector<int> genes(n);
  std::vector<int> durations(n);
  std::vector<std::int64_t> unit(n);
  for (int i = 0; i < n; ++i) {
    durations[i] = inst.task(i).duration;
    unit[i] = inst.task(i).unit_cost.units();
  }
  std::uint64_t rem = begin;
  for (int i = n - 1; i >= 0; --i) {
    genes[i] = static_cast<int>(rem % n);
    rem /= n;
  }

  std::vector<int> load(n);
  std::vector<std::int64_t> top(n);
  Best best;
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    bool ok = true;
    for (const Edge& e : edges)
      if (genes[e.from] > genes[e.to]) {
        ok = false;
        break;
      }
    if (ok) {
      std::fill(load.begin(), load.end(), 0);
      std::fill(top.begin(), top.end(), 0);
      for (int i = 0; i < n && ok; ++i) {
        const int s = genes[i];
        load[s] += durations[i];
        ok = load[s] <= bound;
        top[s] = std::max(top[s], unit[i]);
      }
    }
    if (ok) {
      ++best.valid;
      std::int64_t sum = 0;
      for (auto v : top) sum += v;
      best.offer(sum, idx);
    }
    for (int i = n - 1; i >= 0; --i) {
      if (++genes[i] < n) break;
      genes[i] = 0;
    }
  }
  return best;
}

EnumerationResult finish(const Instance& inst, const Best& best, std::uint64_t space) {
  const int n = inst.size();
  EnumerationResult out;
  out.visited = space;
  out.valid = best.valid;
  out.genes.resize(n);
  std::uint64_t rem = best.index;
  for (int i = n - 1; i >= 0; --i) {
    out.genes[i] = static_cast<int>(rem % n);
    rem /= n;
  }
  out.cost = static_cast<std::int64_t>(inst.bound()) * Decimal::from_units(best.cost);
  return out;
}

}  // namespace

EnumerationResult enumerate_optimum_serial(const Instance& inst, int cap) {
  const auto space = checked_space(inst, cap);
  return finish(inst, scan_range(inst, 0, space), space);
}

EnumerationResult enumerate_optimum_parallel(const Instance& inst, int cap) {
  const auto space = checked_space(inst, cap);
  constexpr std::uint64_t kChunk = 1 << 14;
  const auto chunks = static_cast<std::int64_t>((space + kChunk - 1) / kChunk);
  Best best;
#pragma omp parallel
  {
    Best local;
#pragma omp for schedule(dynamic, 4) nowait
    for (std::int64_t c = 0; c < chunks; ++c) {
      const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
      local.merge(scan_range(inst, begin, std::min(space, begin + kChunk)));
    }
#pragma omp critical(linebal_enumeration_merge)
    best.merge(local);
  }
  return finish(inst, best, space);
}

}  // namespace linebal
