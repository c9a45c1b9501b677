#pragma once

#include <compare>
#include <cstdint>

namespace listcolor {

/// Non-negative real stored as its natural logarithm, with an explicit zero.
class LogValue {
 public:
  LogValue() = default;  // zero

  static LogValue zero() { return {}; }
  static LogValue one() { return from_log(0.0); }
  /// Throws InvalidParameters for negative or non-finite x.
  static LogValue from(double x);
  static LogValue from_log(double log_value);

  bool is_zero() const noexcept { return zero_; }
  /// -inf for zero.
  double log() const noexcept;
  /// May overflow to +inf.
  double value() const noexcept;

  friend LogValue operator*(LogValue a, LogValue b);
  /// Throws InvalidParameters on division by zero.
  friend LogValue operator/(LogValue a, LogValue b);
  friend LogValue operator+(LogValue a, LogValue b);
  LogValue& operator*=(LogValue b) { return *this = *this * b; }
  LogValue& operator/=(LogValue b) { return *this = *this / b; }
  LogValue& operator+=(LogValue b) { return *this = *this + b; }
  LogValue pow(double p) const;

  std::partial_ordering operator<=>(const LogValue& b) const noexcept { return log() <=> b.log(); }
  bool operator==(const LogValue& b) const noexcept { return log() == b.log(); }

 private:
  double log_ = 0.0;
  bool zero_ = true;
};

/// |a - b| <= rel * max(a, b), decided on the log scale.
bool approx_equal(LogValue a, LogValue b, double rel = 1e-12);

/// C(n, k); zero outside 0 <= k <= n. Exact when the value fits in 64 bits.
LogValue log_binomial(std::int64_t n, std::int64_t k);
/// Exact C(n, k) when it fits, otherwise 0 (used for cross-checks).
std::uint64_t binomial_exact(std::int64_t n, std::int64_t k);
/// m! for real m >= 0 via summed logs or lgamma.
LogValue log_factorial(double m);

}  // namespace listcolor
