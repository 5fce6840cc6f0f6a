#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace linebal {

/// Non-negative fixed-point value with four fractional digits.
///
/// Unit costs and station costs are carried exactly so that cost
/// comparisons never depend on floating-point rounding.
class Decimal {
 public:
  static constexpr std::int64_t kScale = 10000;
  static constexpr int kFractionDigits = 4;

  constexpr Decimal() = default;

  static constexpr Decimal from_units(std::int64_t units) {
    Decimal d;
    d.units_ = units;
    return d;
  }
  static Decimal from_int(std::int64_t whole);

  /// Parses `123`, `1.5`, `0.25`. Rejects signs, exponents and more than
  /// four fractional digits. Throws std::invalid_argument.
  static Decimal parse(std::string_view text);

  constexpr std::int64_t units() const { return units_; }
  double to_double() const { return static_cast<double>(units_) / kScale; }

  /// Shortest exact rendering with at least one fractional digit ("15.0").
  std::string to_string() const;

  Decimal& operator+=(Decimal other);
  friend Decimal operator+(Decimal a, Decimal b) { return a += b; }
  /// Scales by a non-negative integer; throws std::overflow_error.
  friend Decimal operator*(std::int64_t factor, Decimal d);

  friend constexpr auto operator<=>(Decimal, Decimal) = default;
  friend constexpr bool operator==(Decimal, Decimal) = default;

 private:
  std::int64_t units_ = 0;
};

}  // namespace linebal
