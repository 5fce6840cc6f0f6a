#include "linebal/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace linebal {

std::string format_sig10(double value) {
  if (value == 0.0 || !std::isfinite(value)) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9f", value);
    return buf;
  }
  const int magnitude = static_cast<int>(std::floor(std::log10(std::fabs(value))));
  const int decimals = std::max(0, 9 - magnitude);
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

namespace {

void write_counter(std::ostream& out, const char* name, const RetryCounter& c) {
  out << "# retries." << name << ": calls=" << c.calls << " mean=" << format_sig10(c.mean())
      << " max=" << c.max_retries << " fallbacks=" << c.fallbacks << '\n';
}

}  // namespace

void write_report_csv(std::ostream& out, const RunReport& report, const Instance& inst) {
  const EngineConfig& e = report.engine;
  const OperatorConfig& o = report.operators;
  out << "# linebal solve\n"
      << "# instance: tasks=" << inst.size() << " bound=" << inst.bound()
      << " edges=" << inst.precedence().edges().size() << '\n'
      << "# encoding=" << encoding_name(e.encoding) << " pop=" << e.population_size << " gens=" << e.generations
      << " parents=" << e.candidate_parents << " elitism=" << (e.elitism ? "on" : "off") << " seed=" << e.seed
      << '\n'
      << "# mut=" << format_sig10(o.mutation_probability) << " max_retries=" << o.max_retries
      << " crossover_rate=" << format_sig10(o.crossover_rate) << '\n';

  out << "generation,avg_fitness,min_fitness,max_fitness,best_cost\n";
  for (const GenerationStats& r : report.rows)
    out << r.generation << ',' << format_sig10(r.avg_fitness) << ',' << format_sig10(r.min_fitness) << ','
        << format_sig10(r.max_fitness) << ',' << r.best_cost.to_string() << '\n';

  out << "# best_cost=" << report.best_breakdown.total.to_string() << '\n';
  out << "# best_genome=";
  for (std::size_t i = 0; i < report.best_genome.size(); ++i) out << (i ? " " : "") << report.best_genome[i];
  out << '\n';
  out << "# best_plan:\n";
  for (std::size_t s = 0; s < report.best_plan.stations.size(); ++s) {
    out << "#   " << s << ':';
    for (int t : report.best_plan.stations[s]) out << ' ' << t;
    out << '\n';
  }
  out << "# breakdown:\n";
  for (const StationCost& sc : report.best_breakdown.per_station)
    out << "#   station " << sc.station << ": max_unit_cost=" << sc.max_unit_cost.to_string()
        << " cost=" << sc.cost.to_string() << '\n';
  out << "# evaluations=" << report.evaluations << '\n';
  write_counter(out, "crossover", report.stats.crossover);
  write_counter(out, "mutation", report.stats.mutation);
}

void write_fitness_svg(std::ostream& out, std::span<const GenerationStats> rows, const std::string& title) {
  constexpr double kWidth = 800, kHeight = 480;
  constexpr double kLeft = 90, kRight = 20, kTop = 40, kBottom = 60;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  double lo = 0.0, hi = 1.0;
  int last_gen = 1;
  if (!rows.empty()) {
    lo = rows.front().min_fitness;
    hi = rows.front().max_fitness;
    for (const auto& r : rows) {
      lo = std::min(lo, r.min_fitness);
      hi = std::max(hi, r.max_fitness);
    }
    last_gen = std::max(1, rows.back().generation);
  }
  if (hi - lo <= 0.0) {
    const double pad = hi == 0.0 ? 1.0 : std::fabs(hi) * 0.05;
    lo -= pad;
    hi += pad;
  }
  auto x_of = [&](int g) { return kLeft + plot_w * g / last_gen; };
  auto y_of = [&](double f) { return kTop + plot_h * (1.0 - (f - lo) / (hi - lo)); };
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return std::string(buf);
  };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">";
  for (char c : title) {
    switch (c) {
      case '<': out << "&lt;"; break;
      case '>': out << "&gt;"; break;
      case '&': out << "&amp;"; break;
      case '"': out << "&quot;"; break;
      default: out << c;
    }
  }
  out << "</text>\n";

  // axes
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w << "\" y2=\""
      << kTop + plot_h << "\" stroke=\"black\"/>\n"
      << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << kTop + plot_h
      << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const int g = last_gen * i / 4;
    const double f = lo + (hi - lo) * i / 4;
    out << "<text x=\"" << num(x_of(g)) << "\" y=\"" << kTop + plot_h + 18 << "\" text-anchor=\"middle\">" << g
        << "</text>\n"
        << "<text x=\"" << kLeft - 6 << "\" y=\"" << num(y_of(f) + 4) << "\" text-anchor=\"end\">"
        << format_sig10(f).substr(0, 10) << "</text>\n";
  }
  out << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 16
      << "\" text-anchor=\"middle\">generation</text>\n"
      << "<text x=\"18\" y=\"" << kTop + plot_h / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << kTop + plot_h / 2 << ")\">fitness</text>\n";

  struct Series {
    const char* name;
    const char* color;
    double GenerationStats::*field;
  };
  const Series series[] = {{"avg", "#1f77b4", &GenerationStats::avg_fitness},
                           {"min", "#d62728", &GenerationStats::min_fitness},
                           {"max", "#2ca02c", &GenerationStats::max_fitness}};
  int legend = 0;
  for (const Series& s : series) {
    out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < rows.size(); ++i)
      out << (i ? " " : "") << num(x_of(rows[i].generation)) << ',' << num(y_of(rows[i].*s.field));
    out << "\"/>\n";
    const double ly = kTop + 12 + 16 * legend++;
    out << "<line x1=\"" << kLeft + plot_w - 70 << "\" y1=\"" << ly << "\" x2=\"" << kLeft + plot_w - 50
        << "\" y2=\"" << ly << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << kLeft + plot_w - 45 << "\" y=\"" << ly + 4 << "\">" << s.name << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace linebal
