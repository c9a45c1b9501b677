#include "listcolor/scaling.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "listcolor/errors.hpp"

namespace listcolor {

struct ScalingExpr::Node {
  enum Kind { Number, Var, Log, Add, Sub, Mul, Div, Pow } kind = Number;
  double value = 0.0;
  std::shared_ptr<const Node> lhs, rhs;
  std::size_t offset = 0;
};

namespace {

using NodePtr = std::shared_ptr<const ScalingExpr::Node>;
using Node = ScalingExpr::Node;

class Parser {
 public:
  Parser(std::string_view text, std::size_t start) : s_(text), pos_(start) {}

  NodePtr parse_all() {
    auto e = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at offset " + std::to_string(pos_), 1, pos_);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr make(Node::Kind kind, NodePtr a, NodePtr b, std::size_t at) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    n->offset = at;
    return n;
  }

  NodePtr sum() {
    auto left = term();
    for (;;) {
      skip();
      std::size_t at = pos_;
      if (eat('+')) left = make(Node::Add, left, term(), at);
      else if (eat('-')) left = make(Node::Sub, left, term(), at);
      else return left;
    }
  }

  NodePtr term() {
    auto left = power();
    for (;;) {
      skip();
      std::size_t at = pos_;
      if (eat('*')) {
        left = make(Node::Mul, left, power(), at);
      } else if (eat('/')) {
        auto right = power();
        if (right->kind == Node::Number && right->value == 0.0) {
          pos_ = right->offset;
          fail("division by zero");
        }
        left = make(Node::Div, left, right, at);
      } else {
        return left;
      }
    }
  }

  NodePtr power() {
    auto base = atom();
    skip();
    std::size_t at = pos_;
    if (eat('^')) return make(Node::Pow, base, power(), at);
    return base;
  }

  NodePtr atom() {
    skip();
    std::size_t at = pos_;
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::string digits;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' ||
                                  s_[pos_] == 'e' || s_[pos_] == 'E')) {
        digits += s_[pos_++];
      }
      char* end = nullptr;
      double v = std::strtod(digits.c_str(), &end);
      if (end != digits.c_str() + digits.size()) {
        pos_ = at;
        fail("malformed number");
      }
      auto n = std::make_shared<Node>();
      n->kind = Node::Number;
      n->value = v;
      n->offset = at;
      return n;
    }
    if (s_.substr(pos_, 3) == "log") {
      pos_ += 3;
      if (!eat('(')) fail("expected '(' after log");
      auto inner = sum();
      if (!eat(')')) fail("expected ')'");
      if (inner->kind == Node::Number && inner->value <= 0.0) {
        pos_ = inner->offset;
        fail("log of a non-positive number");
      }
      return make(Node::Log, inner, nullptr, at);
    }
    if (c == 'n') {
      ++pos_;
      return make(Node::Var, nullptr, nullptr, at);
    }
    if (eat('(')) {
      auto inner = sum();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_;
};

double eval(const Node& e, double n) {
  auto bad = [&](const std::string& what) {
    throw InvalidParameters(what + " at offset " + std::to_string(e.offset));
  };
  switch (e.kind) {
    case Node::Number: return e.value;
    case Node::Var: return n;
    case Node::Log: {
      double x = eval(*e.lhs, n);
      if (!(x > 0)) bad("log of a non-positive number");
      return std::log(x);
    }
    case Node::Add: return eval(*e.lhs, n) + eval(*e.rhs, n);
    case Node::Sub: return eval(*e.lhs, n) - eval(*e.rhs, n);
    case Node::Mul: return eval(*e.lhs, n) * eval(*e.rhs, n);
    case Node::Div: {
      double d = eval(*e.rhs, n);
      if (d == 0.0) bad("division by zero");
      return eval(*e.lhs, n) / d;
    }
    case Node::Pow: {
      double r = std::pow(eval(*e.lhs, n), eval(*e.rhs, n));
      if (std::isnan(r)) bad("undefined power");
      return r;
    }
  }
  return 0.0;
}

}  // namespace

ScalingExpr ScalingExpr::parse(std::string_view text) {
  ScalingExpr out;
  out.text_ = std::string(text);
  std::size_t start = 0;
  for (auto [prefix, mode] : {std::pair{"floor:", Rounding::Floor}, {"ceil:", Rounding::Ceil}, {"round:", Rounding::Round}}) {
    std::string_view p(prefix);
    auto first = text.find_first_not_of(" \t");
    if (first != std::string_view::npos && text.substr(first, p.size()) == p) {
      out.rounding_ = mode;
      start = first + p.size();
      break;
    }
  }
  out.root_ = Parser(text, start).parse_all();
  return out;
}

double ScalingExpr::evaluate(double n) const {
  double v = eval(*root_, n);
  if (!std::isfinite(v)) throw InvalidParameters("expression '" + text_ + "' is not finite at n = " + std::to_string(n));
  return v;
}

std::int64_t ScalingExpr::evaluate_int(double n) const {
  double v = evaluate(n);
  double nearest = std::round(v);
  if (std::abs(v - nearest) <= 1e-9) v = nearest;
  switch (rounding_) {
    case Rounding::Floor: v = std::floor(v); break;
    case Rounding::Ceil: v = std::ceil(v); break;
    case Rounding::Round: v = std::round(v); break;
  }
  if (std::abs(v) > 9e18) throw InvalidParameters("expression '" + text_ + "' is out of integer range");
  return static_cast<std::int64_t>(v);
}

}  // namespace listcolor
