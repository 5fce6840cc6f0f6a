#include "linebal/instance.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <queue>
#include <sstream>

#include "linebal/rng.hpp"

namespace linebal {

using Kind = InstanceError::Kind;

PrecedenceGraph::PrecedenceGraph(int task_count, std::vector<Edge> edges)
    : task_count_(task_count), edges_(std::move(edges)) {
  if (task_count < 0) throw InstanceError(Kind::BadArgument, "negative task count");
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  successors_.resize(task_count);
  predecessors_.resize(task_count);
  for (const Edge& e : edges_) {
    if (e.from < 0 || e.from >= task_count || e.to < 0 || e.to >= task_count)
      throw InstanceError(Kind::DanglingId, "edge " + std::to_string(e.from) + " " +
                                                std::to_string(e.to) + " references an unknown task");
    if (e.from == e.to)
      throw InstanceError(Kind::Cycle, "self-edge on task " + std::to_string(e.from));
    successors_[e.from].push_back(e.to);
    predecessors_[e.to].push_back(e.from);
  }
  if (static_cast<int>(topological_order().size()) != task_count)
    throw InstanceError(Kind::Cycle, "precedence graph contains a cycle");
}

std::vector<int> PrecedenceGraph::topological_order() const {
  std::vector<int> indegree(task_count_);
  for (const Edge& e : edges_) ++indegree[e.to];
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int i = 0; i < task_count_; ++i)
    if (indegree[i] == 0) ready.push(i);

  std::vector<int> order;
  order.reserve(task_count_);
  while (!ready.empty()) {
    const int u = ready.top();
    ready.pop();
    order.push_back(u);
    for (int v : successors_[u])
      if (--indegree[v] == 0) ready.push(v);
  }
  return order;
}

std::vector<Edge> transitive_closure(int task_count, std::span<const Edge> edges) {
  return transitive_closure(PrecedenceGraph(task_count, {edges.begin(), edges.end()}));
}

std::vector<Edge> transitive_closure(const PrecedenceGraph& graph) {
  const int n = graph.task_count();
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  const auto order = graph.topological_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto& row = reach[*it];
    for (int v : graph.successors(*it)) {
      row[v] = 1;
      for (int w = 0; w < n; ++w) row[w] |= reach[v][w];
    }
  }
  std::vector<Edge> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (reach[i][j]) out.push_back({i, j});
  return out;
}

Instance::Instance(std::vector<Task> tasks, PrecedenceGraph precedence, int bound)
    : tasks_(std::move(tasks)), precedence_(std::move(precedence)), bound_(bound) {
  if (bound_ < 1) throw InstanceError(Kind::NonPositive, "duration bound must be positive");
  if (precedence_.task_count() != size())
    throw InstanceError(Kind::BadArgument, "precedence graph size does not match task count");
  for (int i = 0; i < size(); ++i) {
    const Task& t = tasks_[i];
    if (t.id != i) throw InstanceError(Kind::BadArgument, "tasks must be indexed contiguously by id");
    if (t.duration < 1)
      throw InstanceError(Kind::NonPositive, "task " + std::to_string(i) + " has non-positive duration");
    if (t.unit_cost.units() <= 0)
      throw InstanceError(Kind::NonPositive, "task " + std::to_string(i) + " has non-positive unit cost");
    if (t.duration > bound_)
      throw InstanceError(Kind::TaskExceedsBound, "task " + std::to_string(i) + " duration " +
                                                      std::to_string(t.duration) + " exceeds bound " +
                                                      std::to_string(bound_));
  }
}

bool operator==(const Instance& a, const Instance& b) {
  if (a.bound_ != b.bound_ || a.size() != b.size() || !(a.precedence_ == b.precedence_)) return false;
  for (int i = 0; i < a.size(); ++i)
    if (a.tasks_[i].duration != b.tasks_[i].duration || a.tasks_[i].unit_cost != b.tasks_[i].unit_cost)
      return false;
  return true;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int to_int(std::string_view tok, int line) {
  int value = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw InstanceError(Kind::Syntax, "expected an integer, got '" + std::string(tok) + "'", line);
  return value;
}

}  // namespace

Instance parse_instance(std::istream& in) {
  std::string raw;
  int line_no = 0;
  bool have_header = false;
  int n = 0;
  int bound = 0;
  std::vector<Task> tasks;
  std::vector<char> seen;
  int tasks_read = 0;
  std::vector<Edge> edges;

  while (std::getline(in, raw)) {
    ++line_no;
    const auto toks = split_ws(raw);
    if (toks.empty() || toks.front().front() == '#') continue;

    if (!have_header) {
      if (toks.size() != 2) throw InstanceError(Kind::Syntax, "header must be 'N K'", line_no);
      n = to_int(toks[0], line_no);
      bound = to_int(toks[1], line_no);
      if (n < 0) throw InstanceError(Kind::Syntax, "task count must be non-negative", line_no);
      if (bound < 1) throw InstanceError(Kind::NonPositive, "duration bound must be positive", line_no);
      tasks.resize(n);
      seen.assign(n, 0);
      have_header = true;
    } else if (tasks_read < n) {
      if (toks.size() != 3)
        throw InstanceError(Kind::Syntax, "task line must be 'id duration unit_cost'", line_no);
      const int id = to_int(toks[0], line_no);
      const int duration = to_int(toks[1], line_no);
      if (id < 0 || id >= n)
        throw InstanceError(Kind::DanglingId, "task id " + std::to_string(id) + " out of range", line_no);
      if (seen[id]) throw InstanceError(Kind::DuplicateId, "task id " + std::to_string(id) + " repeated", line_no);
      Decimal cost;
      try {
        cost = Decimal::parse(toks[2]);
      } catch (const std::exception& e) {
        throw InstanceError(Kind::Syntax, e.what(), line_no);
      }
      if (duration < 1) throw InstanceError(Kind::NonPositive, "non-positive duration", line_no);
      if (cost.units() == 0) throw InstanceError(Kind::NonPositive, "non-positive unit cost", line_no);
      if (duration > bound)
        throw InstanceError(Kind::TaskExceedsBound,
                            "task " + std::to_string(id) + " duration exceeds bound " + std::to_string(bound),
                            line_no);
      seen[id] = 1;
      tasks[id] = Task{id, duration, cost};
      ++tasks_read;
    } else {
      if (toks.size() != 2) throw InstanceError(Kind::Syntax, "edge line must be 'i j'", line_no);
      const int from = to_int(toks[0], line_no);
      const int to = to_int(toks[1], line_no);
      if (from < 0 || from >= n || to < 0 || to >= n)
        throw InstanceError(Kind::DanglingId, "edge references an unknown task", line_no);
      edges.push_back({from, to});
    }
  }
  if (!have_header) throw InstanceError(Kind::Syntax, "missing header line", line_no + 1);
  if (tasks_read < n)
    throw InstanceError(Kind::Syntax,
                        "expected " + std::to_string(n) + " task lines, got " + std::to_string(tasks_read),
                        line_no + 1);
  return Instance(std::move(tasks), PrecedenceGraph(n, std::move(edges)), bound);
}

Instance parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_instance(in);
}

void write_instance(std::ostream& out, const Instance& inst) {
  out << inst.size() << ' ' << inst.bound() << '\n';
  for (const Task& t : inst.tasks()) out << t.id << ' ' << t.duration << ' ' << t.unit_cost.to_string() << '\n';
  for (const Edge& e : inst.precedence().edges()) out << e.from << ' ' << e.to << '\n';
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  write_instance(out, inst);
  return out.str();
}

Coupling parse_coupling(std::string_view name) {
  if (name == "tight") return Coupling::Tight;
  if (name == "loose") return Coupling::Loose;
  if (name == "none") return Coupling::None;
  throw InstanceError(Kind::BadArgument, "unknown coupling class '" + std::string(name) + "'");
}

std::string_view coupling_name(Coupling c) {
  switch (c) {
    case Coupling::Tight: return "tight";
    case Coupling::Loose: return "loose";
    case Coupling::None: return "none";
  }
  return "?";
}

Instance generate_case(Coupling coupling, int n, int bound, std::uint64_t seed, double edge_density) {
  if (n < 1) throw InstanceError(Kind::BadArgument, "n must be at least 1");
  if (bound < 1) throw InstanceError(Kind::BadArgument, "k must be at least 1");
  if (!(edge_density >= 0.0 && edge_density <= 1.0))
    throw InstanceError(Kind::BadArgument, "edge density must lie in [0, 1]");

  Rng rng(derive_seed(seed, 0));
  std::vector<Task> tasks(n);
  for (int i = 0; i < n; ++i) {
    tasks[i].id = i;
    tasks[i].duration = static_cast<int>(rng.uniform_int(1, bound));
    tasks[i].unit_cost = Decimal::from_units(rng.uniform_int(50, 1000) * (Decimal::kScale / 100));
  }

  std::vector<Edge> edges;
  switch (coupling) {
    case Coupling::Tight:
      for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      break;
    case Coupling::Loose:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (rng.bernoulli(edge_density)) edges.push_back({i, j});
      break;
    case Coupling::None:
      break;
  }
  return Instance(std::move(tasks), PrecedenceGraph(n, std::move(edges)), bound);
}

}  // namespace linebal
