#include "rtqa/decimal.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace rtqa {

namespace {

constexpr int kMaxDigits = 15;  // fits comfortably in int64 after scaling

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

Decimal::Decimal(std::int64_t mantissa, int scale)
    : mantissa_(mantissa), scale_(scale) {
  if (scale < 0) throw std::invalid_argument("Decimal: negative scale");
  normalize();
}

void Decimal::normalize() {
  if (mantissa_ == 0) {
    scale_ = 0;
    return;
  }
  while (scale_ > 0 && mantissa_ % 10 == 0) {
    mantissa_ /= 10;
    --scale_;
  }
}

std::optional<Decimal> Decimal::parse(std::string_view s) {
  // Trim surrounding whitespace.
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  s = s.substr(b, e - b);
  if (s.empty()) return std::nullopt;

  std::size_t i = 0;
  if (s[i] == '$') ++i;  // currency prefix
  bool negative = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    negative = s[i] == '-';
    ++i;
  }
  if (i >= s.size() || !is_digit(s[i])) return std::nullopt;

  std::int64_t mantissa = 0;
  int digits = 0;
  auto push_digit = [&](char c) -> bool {
    if (digits >= kMaxDigits) return false;
    mantissa = mantissa * 10 + (c - '0');
    if (mantissa != 0 || c != '0') ++digits;
    return true;
  };

  while (i < s.size() && is_digit(s[i])) {
    if (!push_digit(s[i])) return std::nullopt;
    ++i;
  }
  // Comma groups must be exactly three digits.
  while (i < s.size() && s[i] == ',') {
    if (i + 3 >= s.size() || !is_digit(s[i + 1]) || !is_digit(s[i + 2]) ||
        !is_digit(s[i + 3]))
      return std::nullopt;
    if (i + 4 < s.size() && is_digit(s[i + 4])) return std::nullopt;
    for (int k = 1; k <= 3; ++k) {
      if (!push_digit(s[i + k])) return std::nullopt;
    }
    i += 4;
  }
  int scale = 0;
  if (i < s.size() && s[i] == '.') {
    ++i;
    if (i >= s.size() || !is_digit(s[i])) return std::nullopt;
    while (i < s.size() && is_digit(s[i])) {
      if (!push_digit(s[i])) return std::nullopt;
      ++scale;
      ++i;
    }
  }
  if (i < s.size() && s[i] == '%') ++i;  // percent suffix dropped
  if (i != s.size()) return std::nullopt;

  if (negative) mantissa = -mantissa;
  return Decimal(mantissa, scale);
}

Decimal Decimal::abs() const {
  Decimal d = *this;
  if (d.mantissa_ < 0) d.mantissa_ = -d.mantissa_;
  return d;
}

Decimal Decimal::operator-(const Decimal& other) const {
  const int common = std::max(scale_, other.scale_);
  __int128 a = mantissa_;
  __int128 b = other.mantissa_;
  for (int k = scale_; k < common; ++k) a *= 10;
  for (int k = other.scale_; k < common; ++k) b *= 10;
  __int128 r = a - b;
  // Strip shared trailing zeros before the range check.
  int scale = common;
  while (scale > 0 && r % 10 == 0) {
    r /= 10;
    --scale;
  }
  if (r > INT64_MAX || r < INT64_MIN)
    throw std::overflow_error("Decimal subtraction overflow");
  return Decimal(static_cast<std::int64_t>(r), scale);
}

std::strong_ordering Decimal::operator<=>(const Decimal& other) const {
  const Decimal diff = *this - other;
  if (diff.mantissa_ < 0) return std::strong_ordering::less;
  if (diff.mantissa_ > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double Decimal::to_double() const {
  return static_cast<double>(mantissa_) / std::pow(10.0, scale_);
}

std::string Decimal::to_string() const {
  std::string digits = std::to_string(mantissa_ < 0 ? -mantissa_ : mantissa_);
  std::string out;
  if (mantissa_ < 0) out += '-';
  if (scale_ == 0) {
    out += digits;
    return out;
  }
  if (static_cast<int>(digits.size()) <= scale_) {
    out += "0.";
    out.append(scale_ - digits.size(), '0');
    out += digits;
  } else {
    out += digits.substr(0, digits.size() - scale_);
    out += '.';
    out += digits.substr(digits.size() - scale_);
  }
  return out;
}

}  // namespace rtqa
