#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace rtqa {

// Exact base-10 value: mantissa * 10^-scale, always normalized (no trailing
// zero digits in the fraction, zero has scale 0). Keeps integer arithmetic
// drift-free so exact-match scoring never fails on formatting.
class Decimal {
 public:
  Decimal() = default;
  Decimal(std::int64_t mantissa, int scale);

  // Whole-string parse: optional sign, digits with optional comma groups,
  // optional fraction, optional leading currency symbol and trailing '%'.
  // Returns nullopt when the trimmed string is not a single number.
  static std::optional<Decimal> parse(std::string_view s);

  static Decimal from_int(std::int64_t v) { return Decimal(v, 0); }

  Decimal abs() const;
  Decimal operator-(const Decimal& other) const;

  bool operator==(const Decimal& other) const = default;
  std::strong_ordering operator<=>(const Decimal& other) const;

  bool is_integer() const { return scale_ == 0; }
  std::int64_t mantissa() const { return mantissa_; }
  int scale() const { return scale_; }
  double to_double() const;

  // "5" not "5.0"; "3.5" keeps its fraction; "-0.75" keeps its leading zero.
  std::string to_string() const;

 private:
  void normalize();

  std::int64_t mantissa_ = 0;
  int scale_ = 0;
};

}  // namespace rtqa
