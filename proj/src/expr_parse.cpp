#include "ouroboros/errors.hpp"
#include "ouroboros/expr.hpp"

#include <cmath>
#include <stdexcept>

namespace ouroboros::expr {

namespace {

constexpr int kMaxNesting = 256;
constexpr unsigned long kMaxExponent = 1000;

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_all() {
    Expr e = parse_expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }
  [[noreturn]] void fail_at(std::size_t offset, const std::string& message) const {
    throw ParseError(offset, message);
  }

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Expr parse_expr() {
    if (++depth_ > kMaxNesting) fail("expression nested too deeply");
    Expr result = parse_term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        result = Expr::add(result, parse_term());
      } else if (peek('-')) {
        ++pos_;
        result = Expr::sub(result, parse_term());
      } else {
        break;
      }
    }
    --depth_;
    return result;
  }

  Expr parse_term() {
    Expr result = parse_factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        result = Expr::mul(result, parse_factor());
      } else if (peek('/')) {
        ++pos_;
        result = Expr::div(result, parse_factor());
      } else {
        break;
      }
    }
    return result;
  }

  Expr parse_factor() {
    int minus_count = 0;
    while (peek('-')) {
      ++pos_;
      ++minus_count;
    }
    skip_space();
    const bool bare_number = pos_ < text_.size() && (is_digit(text_[pos_]) || text_[pos_] == '.');
    Expr result = parse_atom();
    bool has_exponent = false;
    if (peek('^')) {
      ++pos_;
      result = Expr::pow(result, parse_exponent());
      has_exponent = true;
    }
    if (minus_count > 0 && bare_number && !has_exponent) {
      result = Expr::constant(exact::Rational(-result.value()));
      --minus_count;
    }
    for (int i = 0; i < minus_count; ++i) result = Expr::neg(result);
    return result;
  }

  unsigned parse_exponent() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent; only nonnegative integers allowed");
    if (pos_ == text_.size() || !is_digit(text_[pos_])) fail("expected nonnegative integer exponent");
    unsigned long value = 0;
    while (pos_ < text_.size() && is_digit(text_[pos_])) {
      value = value * 10 + static_cast<unsigned long>(text_[pos_++] - '0');
      if (value > kMaxExponent) fail_at(start, "exponent too large");
    }
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E')) {
      fail("non-integer exponent; only nonnegative integers allowed");
    }
    return static_cast<unsigned>(value);
  }

  Expr parse_atom() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr inner = parse_expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'x') return parse_variable();
    if (is_digit(c) || c == '.') return parse_number();
    fail(std::string("unexpected '") + c + "'");
  }

  Expr parse_variable() {
    const std::size_t start = pos_;
    ++pos_;
    if (pos_ == text_.size() || !is_digit(text_[pos_])) fail("expected variable index after 'x'");
    long index = 0;
    while (pos_ < text_.size() && is_digit(text_[pos_])) {
      index = index * 10 + (text_[pos_++] - '0');
      if (index > 1'000'000) fail_at(start, "variable index too large");
    }
    if (index == 0) fail_at(start, "variable index must be >= 1");
    return Expr::variable(static_cast<int>(index));
  }

  Expr parse_number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (is_digit(text_[pos_]) || text_[pos_] == '.')) ++pos_;
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    }
    exact::Rational value;
    if (!exact::parse_decimal(text_.substr(start, pos_ - start), value)) {
      fail_at(start, "malformed number '" + std::string(text_.substr(start, pos_ - start)) + "'");
    }
    if (!std::isfinite(exact::to_double(value))) fail_at(start, "number out of range");
    return Expr::constant(value);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

// Printing precedence levels, loosest first.
enum Level { kSum = 1, kProduct = 2, kUnary = 3, kPower = 4, kAtom = 5 };

Level level_of(const Expr& e) {
  switch (e.kind()) {
    case Kind::Add:
    case Kind::Sub:
      return kSum;
    case Kind::Mul:
    case Kind::Div:
      return kProduct;
    case Kind::Neg:
      return kUnary;
    case Kind::Pow:
      return kPower;
    case Kind::Constant:
      if (!exact::has_terminating_decimal(e.value())) return kAtom;  // printed parenthesized
      return e.value() < 0 ? kUnary : kAtom;
    case Kind::Variable:
      return kAtom;
  }
  return kAtom;
}

void print_into(const Expr& e, Level required, std::string& out);

void print_constant(const Expr& e, std::string& out) {
  if (exact::has_terminating_decimal(e.value())) {
    out += exact::to_string(e.value());
  } else {
    out += "(" + exact::to_string(e.value()) + ")";
  }
}

void print_node(const Expr& e, std::string& out) {
  switch (e.kind()) {
    case Kind::Constant:
      print_constant(e, out);
      return;
    case Kind::Variable:
      out += "x" + std::to_string(e.index());
      return;
    case Kind::Add:
    case Kind::Sub:
      print_into(e.lhs(), kSum, out);
      out += e.kind() == Kind::Add ? " + " : " - ";
      print_into(e.rhs(), kProduct, out);
      return;
    case Kind::Mul:
    case Kind::Div:
      print_into(e.lhs(), kProduct, out);
      out += e.kind() == Kind::Mul ? "*" : "/";
      print_into(e.rhs(), kUnary, out);
      return;
    case Kind::Neg:
      out += "-";
      if (e.lhs().is_constant()) {
        // A bare literal after '-' would re-parse as a negative constant.
        out += "(";
        print_node(e.lhs(), out);
        out += ")";
      } else {
        print_into(e.lhs(), kUnary, out);
      }
      return;
    case Kind::Pow:
      print_into(e.lhs(), kAtom, out);
      out += "^" + std::to_string(e.exponent());
      return;
  }
}

void print_into(const Expr& e, Level required, std::string& out) {
  if (level_of(e) < required) {
    out += "(";
    print_node(e, out);
    out += ")";
  } else {
    print_node(e, out);
  }
}

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

ParseResult parse(std::string_view text, int n_hint) {
  ParseResult result{parse(text), 0};
  result.dimension = std::max(result.expr.dimension(), n_hint);
  return result;
}

std::string print(const Expr& e) {
  std::string out;
  print_into(e, kSum, out);
  return out;
}

}  // namespace ouroboros::expr
