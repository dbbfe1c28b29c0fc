#include "holder/expr.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <utility>

#include "holder/error.hpp"

namespace holder {

struct Expr::Node {
  Op op;
  double value = 0.0;
  std::array<Expr, 2> children;  // unused slots hold a null node

  Node(Op o, double v) : op(o), value(v), children{Expr(nullptr), Expr(nullptr)} {}
  Node(Op o, Expr l, Expr r) : op(o), children{std::move(l), std::move(r)} {}
};

bool is_unary(Op op) noexcept {
  switch (op) {
    case Op::neg:
    case Op::abs:
    case Op::sin:
    case Op::cos:
    case Op::exp:
    case Op::ln:
    case Op::sqrt:
      return true;
    default:
      return false;
  }
}

bool is_binary(Op op) noexcept {
  switch (op) {
    case Op::add:
    case Op::sub:
    case Op::mul:
    case Op::div:
    case Op::pow:
      return true;
    default:
      return false;
  }
}

Expr Expr::constant(double value) {
  if (!std::isfinite(value)) throw InvalidArgument("expression constants must be finite");
  return Expr(std::make_shared<const Node>(Op::constant, value));
}

Expr Expr::variable() { return Expr(std::make_shared<const Node>(Op::variable, 0.0)); }

Expr Expr::unary(Op op, Expr operand) {
  if (!is_unary(op)) throw InvalidArgument("not a unary operator");
  return Expr(std::make_shared<const Node>(op, std::move(operand), Expr(nullptr)));
}

Expr Expr::binary(Op op, Expr lhs, Expr rhs) {
  if (!is_binary(op)) throw InvalidArgument("not a binary operator");
  return Expr(std::make_shared<const Node>(op, std::move(lhs), std::move(rhs)));
}

Op Expr::op() const noexcept { return node_->op; }
double Expr::value() const noexcept { return node_->value; }
const Expr& Expr::lhs() const { return node_->children[0]; }
const Expr& Expr::rhs() const { return node_->children[1]; }

namespace {

double checked(double result, double x, const char* what) {
  if (!std::isfinite(result)) throw DomainError(x, what);
  return result;
}

double eval_node(const Expr& e, double x) {
  switch (e.op()) {
    case Op::constant:
      return e.value();
    case Op::variable:
      return x;
    case Op::neg:
      return -eval_node(e.lhs(), x);
    case Op::abs:
      return std::abs(eval_node(e.lhs(), x));
    case Op::sin:
      return std::sin(eval_node(e.lhs(), x));
    case Op::cos:
      return std::cos(eval_node(e.lhs(), x));
    case Op::exp:
      return checked(std::exp(eval_node(e.lhs(), x)), x, "exp overflow");
    case Op::ln: {
      const double y = eval_node(e.lhs(), x);
      if (y < 0.0) throw DomainError(x, "ln of a negative number");
      if (y == 0.0) throw DomainError(x, "ln of zero");
      return std::log(y);
    }
    case Op::sqrt: {
      const double y = eval_node(e.lhs(), x);
      if (y < 0.0) throw DomainError(x, "sqrt of a negative number");
      return std::sqrt(y);
    }
    case Op::add:
      return checked(eval_node(e.lhs(), x) + eval_node(e.rhs(), x), x, "overflow in addition");
    case Op::sub:
      return checked(eval_node(e.lhs(), x) - eval_node(e.rhs(), x), x, "overflow in subtraction");
    case Op::mul:
      return checked(eval_node(e.lhs(), x) * eval_node(e.rhs(), x), x, "overflow in multiplication");
    case Op::div: {
      const double num = eval_node(e.lhs(), x);
      const double den = eval_node(e.rhs(), x);
      if (den == 0.0) throw DomainError(x, "division by zero");
      return checked(num / den, x, "overflow in division");
    }
    case Op::pow: {
      const double base = eval_node(e.lhs(), x);
      const double exponent = eval_node(e.rhs(), x);
      if (base == 0.0 && exponent < 0.0) throw DomainError(x, "zero raised to a negative power");
      // std::pow(0, 0) == 1, the convention we want.
      const double r = std::pow(base, exponent);
      if (std::isnan(r)) throw DomainError(x, "non-integer power of a negative number");
      return checked(r, x, "overflow in power");
    }
  }
  throw DomainError(x, "corrupt expression node");
}

// ---------------------------------------------------------------------------
// Recursive-descent parser.
//
//   expr    := term (('+'|'-') term)*
//   term    := unary (('*'|'/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?
//   primary := number | 'x' | '(' expr ')' | func '(' expr ')'

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
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                                   text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    for (;;) {
      if (accept('+')) {
        lhs = Expr::binary(Op::add, std::move(lhs), parse_term());
      } else if (accept('-')) {
        lhs = Expr::binary(Op::sub, std::move(lhs), parse_term());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_term() {
    Expr lhs = parse_unary();
    for (;;) {
      if (accept('*')) {
        lhs = Expr::binary(Op::mul, std::move(lhs), parse_unary());
      } else if (accept('/')) {
        lhs = Expr::binary(Op::div, std::move(lhs), parse_unary());
      } else {
        return lhs;
      }
    }
  }

  Expr parse_unary() {
    if (accept('-')) return Expr::unary(Op::neg, parse_unary());
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_primary();
    if (accept('^')) return Expr::binary(Op::pow, std::move(base), parse_unary());
    return base;
  }

  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
  static bool is_ident(char c) { return is_ident_start(c) || is_digit(c); }

  Expr parse_primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (is_digit(c) || c == '.') return parse_number();
    if (c == '(') {
      ++pos_;
      Expr inner = parse_expr();
      expect(')');
      return inner;
    }
    if (is_ident_start(c)) return parse_identifier();
    fail(std::string("unexpected '") + c + "'");
  }

  Expr parse_number() {
    const std::size_t start = pos_;
    std::size_t i = pos_;
    std::size_t mantissa_digits = 0;
    while (i < text_.size() && is_digit(text_[i])) ++i, ++mantissa_digits;
    if (i < text_.size() && text_[i] == '.') {
      ++i;
      while (i < text_.size() && is_digit(text_[i])) ++i, ++mantissa_digits;
    }
    if (mantissa_digits == 0) fail("malformed number");
    if (i < text_.size() && (text_[i] == 'e' || text_[i] == 'E')) {
      std::size_t j = i + 1;
      if (j < text_.size() && (text_[j] == '+' || text_[j] == '-')) ++j;
      const std::size_t exp_start = j;
      while (j < text_.size() && is_digit(text_[j])) ++j;
      if (j == exp_start) {
        pos_ = j;
        fail("malformed exponent");
      }
      i = j;
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + i, value);
    if (ec == std::errc::result_out_of_range || (ec == std::errc() && !std::isfinite(value))) {
      fail("number out of range");
    }
    if (ec != std::errc() || ptr != text_.data() + i) fail("malformed number");
    pos_ = i;
    return Expr::constant(value);
  }

  Expr parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident(text_[pos_])) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "x") return Expr::variable();

    static constexpr std::array<std::pair<std::string_view, Op>, 6> functions{{
        {"sin", Op::sin},
        {"cos", Op::cos},
        {"exp", Op::exp},
        {"ln", Op::ln},
        {"sqrt", Op::sqrt},
        {"abs", Op::abs},
    }};
    for (const auto& [fname, op] : functions) {
      if (name == fname) {
        expect('(');
        Expr arg = parse_expr();
        expect(')');
        return Expr::unary(op, std::move(arg));
      }
    }
    pos_ = start;
    fail("unknown identifier '" + std::string(name) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string format_number(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

const char* function_name(Op op) {
  switch (op) {
    case Op::abs: return "abs";
    case Op::sin: return "sin";
    case Op::cos: return "cos";
    case Op::exp: return "exp";
    case Op::ln: return "ln";
    case Op::sqrt: return "sqrt";
    default: return "";
  }
}

char operator_symbol(Op op) {
  switch (op) {
    case Op::add: return '+';
    case Op::sub: return '-';
    case Op::mul: return '*';
    case Op::div: return '/';
    default: return '^';
  }
}

void print(const Expr& e, std::string& out) {
  switch (e.op()) {
    case Op::constant:
      if (std::signbit(e.value())) {
        out += "(-";
        out += format_number(-e.value());
        out += ')';
      } else {
        out += format_number(e.value());
      }
      return;
    case Op::variable:
      out += 'x';
      return;
    case Op::neg:
      out += "(-";
      print(e.lhs(), out);
      out += ')';
      return;
    default:
      break;
  }
  if (is_unary(e.op())) {
    out += function_name(e.op());
    out += '(';
    print(e.lhs(), out);
    out += ')';
    return;
  }
  out += '(';
  print(e.lhs(), out);
  out += ' ';
  out += operator_symbol(e.op());
  out += ' ';
  print(e.rhs(), out);
  out += ')';
}

void collect_abs(const Expr& e, std::vector<Expr>& out) {
  if (e.op() == Op::abs) out.push_back(e.lhs());
  if (is_unary(e.op())) {
    collect_abs(e.lhs(), out);
  } else if (is_binary(e.op())) {
    collect_abs(e.lhs(), out);
    collect_abs(e.rhs(), out);
  }
}

}  // namespace

double Expr::evaluate(double x) const { return eval_node(*this, x); }

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string to_string(const Expr& e) {
  std::string out;
  print(e, out);
  return out;
}

std::vector<Expr> abs_arguments(const Expr& e) {
  std::vector<Expr> out;
  collect_abs(e, out);
  return out;
}

bool check_nonnegative(const Expr& e, const Interval& interval, int samples) {
  if (samples < 2) throw InvalidArgument("check_nonnegative needs at least 2 samples");
  for (int j = 0; j < samples; ++j) {
    if (e.evaluate(interval.grid_point(j, samples)) < -1e-12) return false;
  }
  return true;
}

Expr operator+(Expr lhs, Expr rhs) { return Expr::binary(Op::add, std::move(lhs), std::move(rhs)); }
Expr operator-(Expr lhs, Expr rhs) { return Expr::binary(Op::sub, std::move(lhs), std::move(rhs)); }
Expr operator*(Expr lhs, Expr rhs) { return Expr::binary(Op::mul, std::move(lhs), std::move(rhs)); }
Expr operator/(Expr lhs, Expr rhs) { return Expr::binary(Op::div, std::move(lhs), std::move(rhs)); }
Expr operator-(Expr operand) { return Expr::unary(Op::neg, std::move(operand)); }
Expr pow(Expr base, Expr exponent) { return Expr::binary(Op::pow, std::move(base), std::move(exponent)); }
Expr apply(Op op, Expr operand) { return Expr::unary(op, std::move(operand)); }

}  // namespace holder
