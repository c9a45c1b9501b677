#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace listcolor {

enum class Rounding { Floor, Ceil, Round };

/// Arithmetic expression in the single variable n.
///
///   expr   := ["floor:" | "ceil:" | "round:"] sum
///   sum    := term (("+" | "-") term)*
///   term   := power (("*" | "/") power)*
///   power  := atom ["^" power]
///   atom   := number | "n" | "log" "(" sum ")" | "(" sum ")"
///
/// log is the natural logarithm. Without a prefix the value is rounded to
/// the nearest integer. Values within 1e-9 of an integer snap to it before
/// rounding.
class ScalingExpr {
 public:
  struct Node;

  /// Throws ParseError whose offset() is the 0-based byte position.
  static ScalingExpr parse(std::string_view text);

  /// Raw value. Throws InvalidParameters (message carries the byte offset)
  /// for division by zero, log of a non-positive number or a non-finite result.
  double evaluate(double n) const;
  std::int64_t evaluate_int(double n) const;

  Rounding rounding() const noexcept { return rounding_; }
  const std::string& text() const noexcept { return text_; }

 private:
  std::shared_ptr<const Node> root_;
  Rounding rounding_ = Rounding::Round;
  std::string text_;
};

inline ScalingExpr parse_scaling(std::string_view text) { return ScalingExpr::parse(text); }

}  // namespace listcolor
