#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "linebal/decimal.hpp"

namespace linebal {

class InstanceError : public std::runtime_error {
 public:
  enum class Kind { Syntax, Cycle, TaskExceedsBound, NonPositive, DanglingId, DuplicateId, BadArgument };

  InstanceError(Kind kind, const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        kind_(kind),
        line_(line) {}

  Kind kind() const { return kind_; }
  /// 1-based source line for parse errors, 0 otherwise.
  int line() const { return line_; }

 private:
  Kind kind_;
  int line_;
};

struct Task {
  int id = 0;
  int duration = 1;     // hours
  Decimal unit_cost;    // cost per hour
};

/// Direct prerequisite pair: `from` must not be placed after `to`.
struct Edge {
  int from = 0;
  int to = 0;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Direct precedence edges over tasks 0..N-1. Always acyclic.
/// Edges are stored sorted and deduplicated; the closure is never stored.
class PrecedenceGraph {
 public:
  PrecedenceGraph() = default;
  PrecedenceGraph(int task_count, std::vector<Edge> edges);

  int task_count() const { return task_count_; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const int> successors(int task) const { return successors_[task]; }
  std::span<const int> predecessors(int task) const { return predecessors_[task]; }

  /// Kahn's algorithm, smallest ready id first.
  std::vector<int> topological_order() const;

  friend bool operator==(const PrecedenceGraph& a, const PrecedenceGraph& b) {
    return a.task_count_ == b.task_count_ && a.edges_ == b.edges_;
  }

 private:
  int task_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> successors_;
  std::vector<std::vector<int>> predecessors_;
};

/// All pairs (i, j) with j reachable from i, sorted lexicographically.
std::vector<Edge> transitive_closure(const PrecedenceGraph& graph);
std::vector<Edge> transitive_closure(int task_count, std::span<const Edge> edges);

class Instance {
 public:
  /// Validates every invariant; throws InstanceError.
  Instance(std::vector<Task> tasks, PrecedenceGraph precedence, int bound);

  int size() const { return static_cast<int>(tasks_.size()); }
  int bound() const { return bound_; }
  const Task& task(int id) const { return tasks_[id]; }
  std::span<const Task> tasks() const { return tasks_; }
  const PrecedenceGraph& precedence() const { return precedence_; }

  friend bool operator==(const Instance& a, const Instance& b);

 private:
  std::vector<Task> tasks_;
  PrecedenceGraph precedence_;
  int bound_;
};

Instance parse_instance(std::istream& in);
Instance parse_instance(std::string_view text);
void write_instance(std::ostream& out, const Instance& inst);
std::string serialize_instance(const Instance& inst);

enum class Coupling { Tight, Loose, None };

Coupling parse_coupling(std::string_view name);
std::string_view coupling_name(Coupling c);

inline constexpr double kDefaultEdgeDensity = 0.15;

/// Random instance of one coupling class. Durations are uniform in
/// [1, bound], unit costs uniform over {0.50, 0.51, ..., 10.00}.
/// Tight: chain i -> i+1. Loose: each forward pair (i, j), i < j, with
/// probability `edge_density`. None: no edges.
Instance generate_case(Coupling coupling, int n, int bound, std::uint64_t seed,
                       double edge_density = kDefaultEdgeDensity);

}  // namespace linebal
