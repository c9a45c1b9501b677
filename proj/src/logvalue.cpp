#include "listcolor/logvalue.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "listcolor/errors.hpp"

namespace listcolor {

LogValue LogValue::from(double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw InvalidParameters("LogValue needs a finite non-negative number");
  if (x == 0.0) return {};
  return from_log(std::log(x));
}

LogValue LogValue::from_log(double log_value) {
  if (std::isnan(log_value) || log_value == std::numeric_limits<double>::infinity())
    throw InvalidParameters("LogValue log must be finite");
  LogValue v;
  if (log_value == -std::numeric_limits<double>::infinity()) return v;
  v.log_ = log_value;
  v.zero_ = false;
  return v;
}

double LogValue::log() const noexcept { return zero_ ? -std::numeric_limits<double>::infinity() : log_; }

double LogValue::value() const noexcept { return zero_ ? 0.0 : std::exp(log_); }

LogValue operator*(LogValue a, LogValue b) {
  if (a.zero_ || b.zero_) return {};
  return LogValue::from_log(a.log_ + b.log_);
}

LogValue operator/(LogValue a, LogValue b) {
  if (b.zero_) throw InvalidParameters("division by zero in log space");
  if (a.zero_) return {};
  return LogValue::from_log(a.log_ - b.log_);
}

LogValue operator+(LogValue a, LogValue b) {
  if (a.zero_) return b;
  if (b.zero_) return a;
  double hi = std::max(a.log_, b.log_), lo = std::min(a.log_, b.log_);
  return LogValue::from_log(hi + std::log1p(std::exp(lo - hi)));
}

LogValue LogValue::pow(double p) const {
  if (zero_) {
    if (p == 0.0) return one();
    if (p < 0.0) throw InvalidParameters("zero to a negative power");
    return {};
  }
  return from_log(log_ * p);
}

bool approx_equal(LogValue a, LogValue b, double rel) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return std::abs(a.log() - b.log()) <= -std::log1p(-rel);
}

std::uint64_t binomial_exact(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    c = c * static_cast<unsigned __int128>(n - i) / static_cast<unsigned __int128>(i + 1);
    if (c > std::numeric_limits<std::uint64_t>::max()) return 0;
  }
  return static_cast<std::uint64_t>(c);
}

LogValue log_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return {};
  if (auto exact = binomial_exact(n, k)) return LogValue::from_log(std::log(static_cast<double>(exact)));
  const std::int64_t small = std::min(k, n - k);
  if (small <= 1000) {
    double s = 0.0;
    for (std::int64_t i = 0; i < small; ++i) s += std::log(static_cast<double>(n - i)) - std::log(static_cast<double>(i + 1));
    return LogValue::from_log(s);
  }
  double nd = static_cast<double>(n), kd = static_cast<double>(k);
  return LogValue::from_log(std::lgamma(nd + 1) - std::lgamma(kd + 1) - std::lgamma(nd - kd + 1));
}

LogValue log_factorial(double m) {
  if (m < 0 || std::isnan(m)) throw InvalidParameters("factorial of a negative number");
  if (m <= 1000 && m == std::floor(m)) {
    double s = 0.0;
    for (int i = 2; i <= static_cast<int>(m); ++i) s += std::log(static_cast<double>(i));
    return LogValue::from_log(s);
  }
  return LogValue::from_log(std::lgamma(m + 1));
}

}  // namespace listcolor
