#include "linebal/decimal.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace linebal {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Decimal Decimal::from_int(std::int64_t whole) {
  if (whole < 0 || whole > std::numeric_limits<std::int64_t>::max() / kScale)
    throw std::overflow_error("decimal out of range");
  return from_units(whole * kScale);
}

Decimal Decimal::parse(std::string_view text) {
  const auto dot = text.find('.');
  std::string_view whole = text.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (!all_digits(whole) || (dot != std::string_view::npos && !all_digits(frac)))
    throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
  if (frac.size() > static_cast<std::size_t>(kFractionDigits))
    throw std::invalid_argument("too many fractional digits in '" + std::string(text) + "'");

  std::int64_t w = 0;
  auto [p, ec] = std::from_chars(whole.data(), whole.data() + whole.size(), w);
  if (ec != std::errc{} || p != whole.data() + whole.size())
    throw std::invalid_argument("decimal out of range '" + std::string(text) + "'");
  Decimal out = from_int(w);

  std::int64_t f = 0;
  for (std::size_t i = 0; i < static_cast<std::size_t>(kFractionDigits); ++i)
    f = f * 10 + (i < frac.size() ? frac[i] - '0' : 0);
  return out += from_units(f);
}

std::string Decimal::to_string() const {
  std::string s = std::to_string(units_ / kScale);
  std::string frac = std::to_string(units_ % kScale);
  frac.insert(0, kFractionDigits - frac.size(), '0');
  while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
  return s + "." + frac;
}

Decimal& Decimal::operator+=(Decimal other) {
  if (__builtin_add_overflow(units_, other.units_, &units_))
    throw std::overflow_error("decimal addition overflow");
  return *this;
}

Decimal operator*(std::int64_t factor, Decimal d) {
  if (factor < 0) throw std::invalid_argument("negative decimal factor");
  std::int64_t out = 0;
  if (__builtin_mul_overflow(factor, d.units_, &out))
    throw std::overflow_error("decimal multiplication overflow");
  return Decimal::from_units(out);
}

}  // namespace linebal
