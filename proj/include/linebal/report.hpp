#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "linebal/engine.hpp"
#include "linebal/instance.hpp"

namespace linebal {

/// Ten significant digits in plain positional notation (never exponent).
std::string format_sig10(double value);

/// Per-generation CSV: `#` provenance header, the column line
/// `generation,avg_fitness,min_fitness,max_fitness,best_cost`, one row per
/// generation, then a `#` summary block (best plan, cost breakdown, retry
/// statistics). Output depends only on the report, never on timing.
void write_report_csv(std::ostream& out, const RunReport& report, const Instance& inst);

/// Standalone SVG line chart of avg/min/max fitness per generation.
void write_fitness_svg(std::ostream& out, std::span<const GenerationStats> rows, const std::string& title);

}  // namespace linebal
