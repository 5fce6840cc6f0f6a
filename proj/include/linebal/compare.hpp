#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linebal/decimal.hpp"
#include "linebal/engine.hpp"
#include "linebal/instance.hpp"
#include "linebal/kernels.hpp"
#include "linebal/operators.hpp"

namespace linebal {

enum class Method { Ga, Hill, Random, Oracle };

std::string_view method_name(Method m);
/// Comma-separated list such as "ga,hill,random,oracle".
std::vector<Method> parse_methods(std::string_view list);

struct NamedInstance {
  std::string name;
  Instance instance;
};

/// Every `*.inst` file in `dir`, sorted by file name; the name is the stem.
/// Throws std::runtime_error if the directory holds none.
std::vector<NamedInstance> load_instance_dir(const std::filesystem::path& dir);

struct CompareOptions {
  std::vector<Method> methods{Method::Ga, Method::Hill, Method::Random, Method::Oracle};
  int seeds = 1;  // stochastic methods run with seeds 1..seeds
  EngineConfig ga;
  OperatorConfig operators;
  int hill_max_steps = 1000;
  int hill_restarts = 1;
  int oracle_cap = kDefaultOracleCap;
};

struct CompareRow {
  std::string instance;
  Method method = Method::Ga;
  std::uint64_t seed = 0;  // 0 for the oracle
  Decimal best_cost;
  std::optional<Decimal> optimum;
  std::uint64_t evaluations = 0;

  std::optional<bool> matched() const {
    if (!optimum) return std::nullopt;
    return best_cost == *optimum;
  }
};

/// Evaluation budget of one GA run, also granted to random search.
std::uint64_t ga_evaluation_budget(const EngineConfig& cfg);

/// Runs every (instance, method, seed) cell, in parallel across cells.
/// Rows come back sorted by instance, then method name, then seed.
std::vector<CompareRow> compare(const std::vector<NamedInstance>& instances, const CompareOptions& options);

/// `instance,method,best_cost,optimum,matched,evaluations`; optimum and
/// matched are empty when the oracle was not requested.
void write_compare_csv(std::ostream& out, const std::vector<CompareRow>& rows);

/// One line per method: rows matched against the oracle.
std::string match_summary(const std::vector<CompareRow>& rows);

}  // namespace linebal
