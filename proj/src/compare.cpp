#include "linebal/compare.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "linebal/baselines.hpp"

namespace linebal {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Ga: return "ga";
    case Method::Hill: return "hill";
    case Method::Random: return "random";
    case Method::Oracle: return "oracle";
  }
  return "?";
}

std::vector<Method> parse_methods(std::string_view list) {
  std::vector<Method> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const auto end = std::min(list.find(',', start), list.size());
    const auto name = list.substr(start, end - start);
    Method m;
    if (name == "ga") m = Method::Ga;
    else if (name == "hill") m = Method::Hill;
    else if (name == "random") m = Method::Random;
    else if (name == "oracle") m = Method::Oracle;
    else throw std::invalid_argument("unknown method '" + std::string(name) + "'");
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
    start = end + 1;
  }
  return out;
}

std::vector<NamedInstance> load_instance_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw std::runtime_error("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".inst") files.push_back(entry.path());
  if (files.empty()) throw std::runtime_error("no .inst files in " + dir.string());
  std::sort(files.begin(), files.end());

  std::vector<NamedInstance> out;
  for (const auto& f : files) {
    std::ifstream in(f);
    if (!in) throw std::runtime_error("cannot read " + f.string());
    try {
      out.push_back({f.stem().string(), parse_instance(in)});
    } catch (const InstanceError& e) {
      throw std::runtime_error(f.string() + ": " + e.what());
    }
  }
  return out;
}

std::uint64_t ga_evaluation_budget(const EngineConfig& cfg) {
  return static_cast<std::uint64_t>(cfg.population_size) +
         static_cast<std::uint64_t>(cfg.generations) * 2 * static_cast<std::uint64_t>(cfg.candidate_parents);
}

std::vector<CompareRow> compare(const std::vector<NamedInstance>& instances, const CompareOptions& options) {
  if (instances.empty()) throw std::invalid_argument("no instances to compare");
  if (options.seeds < 1) throw std::invalid_argument("seeds must be at least 1");
  const bool want_oracle =
      std::find(options.methods.begin(), options.methods.end(), Method::Oracle) != options.methods.end();
  if (want_oracle)
    for (const auto& ni : instances)
      if (ni.instance.size() > options.oracle_cap)
        throw std::invalid_argument("instance " + ni.name + " has " + std::to_string(ni.instance.size()) +
                                    " tasks, above the oracle cap of " + std::to_string(options.oracle_cap));

  std::vector<CompareRow> rows;
  for (const auto& ni : instances)
    for (Method m : options.methods) {
      if (m == Method::Oracle) {
        rows.push_back({ni.name, m, 0, {}, {}, 0});
        continue;
      }
      for (int s = 1; s <= options.seeds; ++s) rows.push_back({ni.name, m, static_cast<std::uint64_t>(s), {}, {}, 0});
    }
  std::map<std::string, const Instance*> by_name;
  for (const auto& ni : instances) by_name.emplace(ni.name, &ni.instance);

  const auto count = static_cast<std::int64_t>(rows.size());
  std::vector<std::exception_ptr> errors(rows.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    CompareRow& row = rows[i];
    const Instance& inst = *by_name.at(row.instance);
    try {
      switch (row.method) {
        case Method::Ga: {
          EngineConfig cfg = options.ga;
          cfg.seed = row.seed;
          cfg.encoding = Encoding::Task;
          const auto report = run(inst, cfg, options.operators);
          row.best_cost = report.best_breakdown.total;
          row.evaluations = report.evaluations;
          break;
        }
        case Method::Hill: {
          const auto r = hill_climb(inst, options.hill_max_steps, options.hill_restarts, row.seed);
          row.best_cost = r.best.breakdown.total;
          row.evaluations = r.best.evaluations;
          break;
        }
        case Method::Random: {
          const auto r = random_search(inst, ga_evaluation_budget(options.ga), row.seed);
          row.best_cost = r.breakdown.total;
          row.evaluations = r.evaluations;
          break;
        }
        case Method::Oracle: {
          const auto found = enumerate_optimum_serial(inst, options.oracle_cap);
          row.best_cost = found.cost;
          row.evaluations = found.visited;
          break;
        }
      }
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  if (want_oracle) {
    std::map<std::string, Decimal> optimum;
    for (const auto& r : rows)
      if (r.method == Method::Oracle) optimum[r.instance] = r.best_cost;
    for (auto& r : rows) r.optimum = optimum.at(r.instance);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const CompareRow& a, const CompareRow& b) {
    if (a.instance != b.instance) return a.instance < b.instance;
    if (a.method != b.method) return method_name(a.method) < method_name(b.method);
    return a.seed < b.seed;
  });
  return rows;
}

void write_compare_csv(std::ostream& out, const std::vector<CompareRow>& rows) {
  out << "instance,method,best_cost,optimum,matched,evaluations\n";
  for (const auto& r : rows) {
    const auto matched = r.matched();
    out << r.instance << ',' << method_name(r.method) << ',' << r.best_cost.to_string() << ','
        << (r.optimum ? r.optimum->to_string() : "") << ',' << (matched ? (*matched ? "1" : "0") : "") << ','
        << r.evaluations << '\n';
  }
}

std::string match_summary(const std::vector<CompareRow>& rows) {
  std::map<std::string, std::pair<int, int>> tally;  // method -> (matched, total)
  for (const auto& r : rows) {
    auto& t = tally[std::string(method_name(r.method))];
    ++t.second;
    if (r.matched().value_or(false)) ++t.first;
  }
  std::ostringstream out;
  const bool have_oracle = !rows.empty() && rows.front().optimum.has_value();
  for (const auto& [name, t] : tally) {
    out << name << ": ";
    if (have_oracle)
      out << t.first << '/' << t.second << " matched the optimum\n";
    else
      out << t.second << " runs (no oracle requested)\n";
  }
  return out.str();
}

}  // namespace linebal
