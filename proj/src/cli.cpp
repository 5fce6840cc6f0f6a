#include "linebal/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "linebal/compare.hpp"
#include "linebal/encoding.hpp"
#include "linebal/engine.hpp"
#include "linebal/instance.hpp"
#include "linebal/report.hpp"

namespace fs = std::filesystem;

namespace linebal {

namespace {

// Stages files next to their destination and renames them into place only
// once every file has been written; anything uncommitted is removed.
class StagedOutputs {
 public:
  StagedOutputs() = default;
  StagedOutputs(const StagedOutputs&) = delete;
  StagedOutputs& operator=(const StagedOutputs&) = delete;
  ~StagedOutputs() {
    std::error_code ec;
    for (const auto& [tmp, dest] : staged_) fs::remove(tmp, ec);
  }

  void write(const fs::path& dest, const std::function<void(std::ostream&)>& body) {
    fs::path tmp = dest;
    tmp += ".partial";
    staged_.emplace_back(tmp, dest);
    if (dest.has_parent_path()) fs::create_directories(dest.parent_path());
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + dest.string());
    body(out);
    out.close();
    if (!out) throw std::runtime_error("failed writing " + dest.string());
  }

  void commit() {
    for (const auto& [tmp, dest] : staged_) fs::rename(tmp, dest);
    staged_.clear();
  }

 private:
  std::vector<std::pair<fs::path, fs::path>> staged_;
};

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read instance file " + path);
  try {
    return parse_instance(in);
  } catch (const InstanceError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cost-optimal assignment of precedence-constrained tasks to duration-bounded stations", "linebal"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random instance of one coupling class");
  std::string gen_class;
  int gen_n = 0;
  int gen_k = 0;
  std::uint64_t gen_seed = 0;
  double gen_density = kDefaultEdgeDensity;
  std::string gen_out;
  gen->add_option("--class", gen_class, "tight | loose | none")
      ->required()
      ->check(CLI::IsMember({"tight", "loose", "none"}));
  gen->add_option("--n", gen_n, "Number of tasks")->required()->check(CLI::PositiveNumber);
  gen->add_option("--k", gen_k, "Station duration bound")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_seed, "Random seed")->required();
  gen->add_option("--density", gen_density, "Edge probability for the loose class")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("-o,--output", gen_out, "Output path (stdout if omitted)");

  // solve
  auto* solve = app.add_subcommand("solve", "Run the genetic algorithm on an instance");
  std::string solve_instance;
  std::string solve_encoding = "task";
  EngineConfig engine;
  OperatorConfig ops;
  std::string solve_elitism = "on";
  std::string solve_out;
  solve->add_option("--instance", solve_instance, "Instance file")->required();
  solve->add_option("--encoding", solve_encoding, "task | station")
      ->capture_default_str()
      ->check(CLI::IsMember({"task", "station"}));
  solve->add_option("--pop", engine.population_size, "Population size")->capture_default_str();
  solve->add_option("--gens", engine.generations, "Generations")->capture_default_str();
  solve->add_option("--parents", engine.candidate_parents, "Parent pairs per generation")->capture_default_str();
  solve->add_option("--mut", ops.mutation_probability, "Mutation probability per child")->capture_default_str();
  solve->add_option("--elitism", solve_elitism, "on | off")
      ->capture_default_str()
      ->check(CLI::IsMember({"on", "off"}));
  solve->add_option("--seed", engine.seed, "Random seed")->capture_default_str();
  solve->add_option("-o,--output", solve_out, "Output directory")->required();

  // compare
  auto* cmp = app.add_subcommand("compare", "Compare solvers over a directory of instances");
  std::string cmp_dir;
  std::string cmp_methods = "ga,hill,random,oracle";
  int cmp_seeds = 1;
  std::string cmp_out;
  cmp->add_option("--instances", cmp_dir, "Directory of .inst files")->required();
  cmp->add_option("--methods", cmp_methods, "Comma-separated subset of ga,hill,random,oracle")
      ->capture_default_str();
  cmp->add_option("--seeds", cmp_seeds, "Seeds per stochastic method")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmp->add_option("-o,--output", cmp_out, "Output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    StagedOutputs staged;
    if (gen->parsed()) {
      const Instance inst = generate_case(parse_coupling(gen_class), gen_n, gen_k, gen_seed, gen_density);
      if (gen_out.empty()) {
        write_instance(out, inst);
        return 0;
      }
      staged.write(gen_out, [&](std::ostream& o) {
        o << "# linebal gen --class " << gen_class << " --n " << gen_n << " --k " << gen_k << " --seed "
          << gen_seed << " --density " << format_sig10(gen_density) << '\n';
        write_instance(o, inst);
      });
      staged.commit();
    } else if (solve->parsed()) {
      engine.encoding = parse_encoding(solve_encoding);
      engine.elitism = solve_elitism == "on";
      const Instance inst = read_instance_file(solve_instance);
      const RunReport report = run(inst, engine, ops);

      fs::create_directories(solve_out);
      const fs::path dir(solve_out);
      staged.write(dir / "report.csv", [&](std::ostream& o) { write_report_csv(o, report, inst); });
      staged.write(dir / "plan.txt", [&](std::ostream& o) {
        write_plan(o, report.best_plan, inst);
        o << "# total_cost=" << report.best_breakdown.total.to_string() << '\n';
      });
      staged.write(dir / "fitness.svg", [&](std::ostream& o) {
        write_fitness_svg(o, report.rows,
                          "Fitness per generation (" + std::string(encoding_name(engine.encoding)) + " encoding)");
      });
      staged.commit();
      out << "best cost " << report.best_breakdown.total.to_string() << " with "
          << report.best_plan.stations.size() << " stations; outputs in " << solve_out << '\n';
    } else if (cmp->parsed()) {
      CompareOptions options;
      options.methods = parse_methods(cmp_methods);
      options.seeds = cmp_seeds;
      const auto instances = load_instance_dir(cmp_dir);
      const auto rows = compare(instances, options);
      const std::string summary = match_summary(rows);
      staged.write(cmp_out, [&](std::ostream& o) { write_compare_csv(o, rows); });
      staged.commit();
      out << summary;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace linebal
