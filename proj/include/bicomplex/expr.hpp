#pragma once

// Small expression language for complex functions f(z), planar functions
// u(x, y) and boundary data u(t).
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' unary)?            (right associative)
//   primary := number | 'i' | 'pi' | name | fn '(' expr ')' | '(' expr ')'
//   fn      := sin | cos | exp | log | sqrt | atan | abs | re | im | step | conj

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <memory>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bicomplex/algebra.hpp"
#include "bicomplex/error.hpp"

namespace bicomplex::expr {

enum class Op { Constant, Variable, Add, Sub, Mul, Div, Pow, Neg, Call };

enum class Function { Sin, Cos, Exp, Log, Sqrt, Atan, Abs, Re, Im, Step, Conj };

struct FunctionInfo {
  std::string_view name;
  Function fn;
  bool analytic;
};

inline constexpr std::array<FunctionInfo, 11> kFunctions{{
    {"sin", Function::Sin, true},
    {"cos", Function::Cos, true},
    {"exp", Function::Exp, true},
    {"log", Function::Log, true},
    {"sqrt", Function::Sqrt, true},
    {"atan", Function::Atan, true},
    {"abs", Function::Abs, false},
    {"re", Function::Re, false},
    {"im", Function::Im, false},
    {"step", Function::Step, false},
    {"conj", Function::Conj, false},
}};

inline const FunctionInfo& info(Function fn) {
  return *std::find_if(kFunctions.begin(), kFunctions.end(),
                       [fn](const FunctionInfo& f) { return f.fn == fn; });
}

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
  Op op = Op::Constant;
  Complex value{};             // Constant
  std::size_t slot = 0;        // Variable: index into the declared variable list
  Function fn = Function::Sin; // Call
  std::vector<NodePtr> args;
};

/// Immutable parsed expression together with its declared variables.
class Expr {
 public:
  Expr() = default;
  Expr(NodePtr root, std::vector<std::string> variables)
      : root_(std::move(root)), variables_(std::move(variables)) {}

  const Node& root() const { return *root_; }
  const std::vector<std::string>& variables() const { return variables_; }
  bool empty() const { return root_ == nullptr; }

 private:
  NodePtr root_;
  std::vector<std::string> variables_;
};

namespace detail {

inline NodePtr make_constant(Complex v) {
  auto n = std::make_shared<Node>();
  n->op = Op::Constant;
  n->value = v;
  return n;
}

inline NodePtr make_node(Op op, std::vector<NodePtr> args) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->args = std::move(args);
  return n;
}

class Parser {
 public:
  Parser(std::string_view src, const std::vector<std::string>& vars) : src_(src), vars_(vars) {}

  NodePtr parse() {
    skip_ws();
    if (pos_ >= src_.size()) throw SyntaxError(pos_, "empty expression");
    NodePtr n = parse_expr();
    skip_ws();
    if (pos_ != src_.size()) {
      throw SyntaxError(pos_, std::string("unexpected character '") + src_[pos_] + "'");
    }
    return n;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' ||
                                  src_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    for (;;) {
      if (accept('+')) {
        lhs = make_node(Op::Add, {lhs, parse_term()});
      } else if (accept('-')) {
        lhs = make_node(Op::Sub, {lhs, parse_term()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_unary();
    for (;;) {
      if (accept('*')) {
        lhs = make_node(Op::Mul, {lhs, parse_unary()});
      } else if (accept('/')) {
        lhs = make_node(Op::Div, {lhs, parse_unary()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_unary() {
    if (accept('-')) return make_node(Op::Neg, {parse_unary()});
    if (accept('+')) return parse_unary();
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_primary();
    if (accept('^')) return make_node(Op::Pow, {base, parse_unary()});
    return base;
  }

  NodePtr parse_primary() {
    skip_ws();
    if (pos_ >= src_.size()) throw SyntaxError(pos_, "unexpected end of input");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = parse_expr();
      if (!accept(')')) throw SyntaxError(pos_, "expected ')'");
      return inner;
    }
    if ((c >= '0' && c <= '9') || c == '.') return parse_number();
    if (is_ident_start(c)) return parse_identifier();
    throw SyntaxError(pos_, std::string("unexpected character '") + c + "'");
  }

  static bool is_ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  }
  static bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

  NodePtr parse_number() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && ((src_[pos_] >= '0' && src_[pos_] <= '9') || src_[pos_] == '.')) {
      ++pos_;
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
      if (p < src_.size() && src_[p] >= '0' && src_[p] <= '9') {
        pos_ = p;
        while (pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9') ++pos_;
      }
    }
    double v = 0.0;
    const auto res = std::from_chars(src_.data() + start, src_.data() + pos_, v);
    if (res.ec != std::errc{} || res.ptr != src_.data() + pos_ || !std::isfinite(v)) {
      throw SyntaxError(start, "malformed number");
    }
    return make_constant(v);
  }

  NodePtr parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && is_ident_char(src_[pos_])) ++pos_;
    const std::string_view name = src_.substr(start, pos_ - start);

    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == '(') {
      const auto it = std::find_if(kFunctions.begin(), kFunctions.end(),
                                   [&](const FunctionInfo& f) { return f.name == name; });
      if (it == kFunctions.end()) {
        throw Error(ErrorKind::UnknownFunction,
                    "'" + std::string(name) + "' at offset " + std::to_string(start));
      }
      ++pos_;
      NodePtr arg = parse_expr();
      if (accept(',')) throw SyntaxError(pos_ - 1, "function '" + std::string(name) + "' takes one argument");
      if (!accept(')')) throw SyntaxError(pos_, "expected ')'");
      auto n = std::make_shared<Node>();
      n->op = Op::Call;
      n->fn = it->fn;
      n->args = {arg};
      return n;
    }

    if (std::any_of(kFunctions.begin(), kFunctions.end(),
                    [&](const FunctionInfo& f) { return f.name == name; })) {
      throw SyntaxError(pos_, "expected '(' after '" + std::string(name) + "'");
    }
    for (std::size_t k = 0; k < vars_.size(); ++k) {
      if (vars_[k] == name) {
        auto n = std::make_shared<Node>();
        n->op = Op::Variable;
        n->slot = k;
        return n;
      }
    }
    if (name == "i") return make_constant({0.0, 1.0});
    if (name == "pi") return make_constant(std::numbers::pi);
    throw Error(ErrorKind::UnknownVariable,
                "'" + std::string(name) + "' at offset " + std::to_string(start));
  }

  std::string_view src_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Expr parse(std::string_view source, std::vector<std::string> variables) {
  for (const auto& v : variables) {
    if (v == "i" || v == "pi") {
      throw Error(ErrorKind::InvalidArgument, "'" + v + "' is reserved and cannot be a variable");
    }
  }
  detail::Parser p(source, variables);
  NodePtr root = p.parse();
  return Expr(std::move(root), std::move(variables));
}

// ---------------------------------------------------------------------------
// Structure queries

inline bool structurally_equal(const Node& a, const Node& b) {
  if (a.op != b.op || a.args.size() != b.args.size()) return false;
  switch (a.op) {
    case Op::Constant:
      if (a.value != b.value) return false;
      break;
    case Op::Variable:
      if (a.slot != b.slot) return false;
      break;
    case Op::Call:
      if (a.fn != b.fn) return false;
      break;
    default: break;
  }
  for (std::size_t k = 0; k < a.args.size(); ++k) {
    if (!structurally_equal(*a.args[k], *b.args[k])) return false;
  }
  return true;
}

/// Same tree and same variable names per slot.
inline bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.empty() || b.empty()) return a.empty() == b.empty();
  // Compare names only for slots the trees actually share.
  return a.variables() == b.variables() && structurally_equal(a.root(), b.root());
}

inline bool is_analytic(const Node& n) {
  if (n.op == Op::Call && !info(n.fn).analytic) return false;
  return std::all_of(n.args.begin(), n.args.end(), [](const NodePtr& c) { return is_analytic(*c); });
}

inline bool is_analytic(const Expr& e) { return is_analytic(e.root()); }

// ---------------------------------------------------------------------------
// Printing

inline std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {

// Binding strength of the printed form: 1 additive, 2 multiplicative,
// 3 unary minus, 4 power, 5 atom.
inline int precedence(const Node& n) {
  switch (n.op) {
    case Op::Add:
    case Op::Sub: return 1;
    case Op::Mul:
    case Op::Div: return 2;
    case Op::Neg: return 3;
    case Op::Pow: return 4;
    case Op::Constant:
      if (n.value.imag() != 0.0 && n.value.real() != 0.0) return 1;
      if (n.value.imag() != 0.0 && n.value.imag() != 1.0) return 2;
      return std::signbit(n.value.real()) || std::signbit(n.value.imag()) ? 3 : 5;
    default: return 5;
  }
}

inline void print(const Node& n, const std::vector<std::string>& vars, std::string& out);

inline void print_child(const Node& child, int min_prec, const std::vector<std::string>& vars,
                        std::string& out) {
  if (precedence(child) < min_prec) {
    out += '(';
    print(child, vars, out);
    out += ')';
  } else {
    print(child, vars, out);
  }
}

inline void print(const Node& n, const std::vector<std::string>& vars, std::string& out) {
  switch (n.op) {
    case Op::Constant: {
      const double re = n.value.real();
      const double im = n.value.imag();
      if (im == 0.0) {
        out += format_number(re);
      } else if (re == 0.0 && im == 1.0) {
        out += 'i';
      } else if (re == 0.0) {
        out += format_number(im) + "*i";
      } else {
        out += format_number(re) + " + " + format_number(im) + "*i";
      }
      return;
    }
    case Op::Variable: out += vars.at(n.slot); return;
    case Op::Add:
    case Op::Sub:
      print_child(*n.args[0], 1, vars, out);
      out += n.op == Op::Add ? " + " : " - ";
      print_child(*n.args[1], 2, vars, out);
      return;
    case Op::Mul:
    case Op::Div:
      print_child(*n.args[0], 2, vars, out);
      out += n.op == Op::Mul ? "*" : "/";
      print_child(*n.args[1], 3, vars, out);
      return;
    case Op::Neg:
      out += '-';
      print_child(*n.args[0], 3, vars, out);
      return;
    case Op::Pow:
      print_child(*n.args[0], 5, vars, out);
      out += '^';
      print_child(*n.args[1], 3, vars, out);
      return;
    case Op::Call:
      out += info(n.fn).name;
      out += '(';
      print(*n.args[0], vars, out);
      out += ')';
      return;
  }
}

}  // namespace detail

inline std::string to_string(const Expr& e) {
  std::string out;
  if (!e.empty()) detail::print(e.root(), e.variables(), out);
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

/// If the node is a real integer constant (possibly negated), returns it.
inline bool integer_exponent(const Node& n, long& value) {
  if (n.op == Op::Neg) {
    if (!integer_exponent(*n.args[0], value)) return false;
    value = -value;
    return true;
  }
  if (n.op != Op::Constant || n.value.imag() != 0.0) return false;
  const double r = n.value.real();
  if (std::abs(r) > 1024.0 || std::floor(r) != r) return false;
  value = static_cast<long>(r);
  return true;
}

/// Complex semantics with principal branches.
struct ComplexArithmetic {
  using value_type = Complex;

  static Complex constant(Complex c) { return c; }

  static Complex divide(Complex a, Complex b) {
    if (b == Complex{}) throw Error(ErrorKind::EvalDomain, "division by zero");
    return a / b;
  }

  static Complex integer_power(Complex base, long n) {
    if (n < 0) {
      if (base == Complex{}) throw Error(ErrorKind::EvalDomain, "zero raised to a negative power");
      return 1.0 / bicomplex::detail::ipow(base, static_cast<unsigned>(-n));
    }
    return bicomplex::detail::ipow(base, static_cast<unsigned>(n));
  }

  static Complex power(Complex base, Complex exponent) {
    if (base == Complex{}) {
      if (exponent.real() > 0.0) return Complex{};
      throw Error(ErrorKind::EvalDomain, "zero raised to a non-positive power");
    }
    const double r = exponent.real();
    if (exponent.imag() == 0.0 && std::abs(r) <= 1024.0 && r == std::trunc(r)) {
      return integer_power(base, static_cast<long>(r));
    }
    return std::exp(exponent * std::log(base));
  }

  static Complex apply(Function fn, Complex a) {
    switch (fn) {
      case Function::Sin: return std::sin(a);
      case Function::Cos: return std::cos(a);
      case Function::Exp: return std::exp(a);
      case Function::Log:
        if (a == Complex{}) throw Error(ErrorKind::EvalDomain, "log of zero");
        return std::log(a);
      case Function::Sqrt: return std::sqrt(a);
      case Function::Atan:
        if (a.real() == 0.0 && std::abs(a.imag()) == 1.0) {
          throw Error(ErrorKind::EvalDomain, "atan at a branch point");
        }
        return std::atan(a);
      case Function::Abs: return std::abs(a);
      case Function::Re: return a.real();
      case Function::Im: return a.imag();
      case Function::Step: return a.real() > 0.0 ? 1.0 : (a.real() < 0.0 ? -1.0 : 0.0);
      case Function::Conj: return std::conj(a);
    }
    return {};
  }

  static bool finite(Complex v) { return is_finite(v); }
};

namespace detail {

template <class Arith>
typename Arith::value_type evaluate(const Node& n, std::span<const typename Arith::value_type> vars) {
  using T = typename Arith::value_type;
  switch (n.op) {
    case Op::Constant: return Arith::constant(n.value);
    case Op::Variable: return vars[n.slot];
    case Op::Add: return evaluate<Arith>(*n.args[0], vars) + evaluate<Arith>(*n.args[1], vars);
    case Op::Sub: return evaluate<Arith>(*n.args[0], vars) - evaluate<Arith>(*n.args[1], vars);
    case Op::Mul: return evaluate<Arith>(*n.args[0], vars) * evaluate<Arith>(*n.args[1], vars);
    case Op::Div:
      return Arith::divide(evaluate<Arith>(*n.args[0], vars), evaluate<Arith>(*n.args[1], vars));
    case Op::Neg: return -evaluate<Arith>(*n.args[0], vars);
    case Op::Pow: {
      const T base = evaluate<Arith>(*n.args[0], vars);
      long k = 0;
      if (integer_exponent(*n.args[1], k)) return Arith::integer_power(base, k);
      return Arith::power(base, evaluate<Arith>(*n.args[1], vars));
    }
    case Op::Call: return Arith::apply(n.fn, evaluate<Arith>(*n.args[0], vars));
  }
  return T{};
}

}  // namespace detail

/// Evaluates over any number type that provides the `ComplexArithmetic`
/// interface; values are bound positionally to the declared variables.
template <class Arith>
typename Arith::value_type evaluate(const Expr& e, std::span<const typename Arith::value_type> values) {
  if (values.size() < e.variables().size()) {
    throw Error(ErrorKind::InvalidArgument, "missing variable bindings");
  }
  auto v = detail::evaluate<Arith>(e.root(), values);
  if (!Arith::finite(v)) throw Error(ErrorKind::EvalDomain, "non-finite result");
  return v;
}

inline Complex eval_complex(const Expr& e, std::span<const Complex> values) {
  return evaluate<ComplexArithmetic>(e, values);
}

inline Complex eval_complex(const Expr& e, std::initializer_list<Complex> values) {
  return eval_complex(e, std::span<const Complex>(values.begin(), values.size()));
}

inline Complex eval_complex(const Expr& e, const std::map<std::string, Complex>& bindings) {
  std::vector<Complex> values;
  values.reserve(e.variables().size());
  for (const auto& name : e.variables()) {
    const auto it = bindings.find(name);
    if (it == bindings.end()) throw Error(ErrorKind::UnknownVariable, "no binding for '" + name + "'");
    values.push_back(it->second);
  }
  return eval_complex(e, std::span<const Complex>(values));
}

/// Tolerance on the imaginary part accepted when a real value is expected.
inline constexpr double kRealTolerance = 1e-12;

/// Real-context evaluation; rejects results that are not real.
inline double eval_real(const Expr& e, std::span<const double> values) {
  std::array<Complex, 8> small{};
  std::vector<Complex> large;
  std::span<const Complex> cv;
  if (values.size() <= small.size()) {
    std::copy(values.begin(), values.end(), small.begin());
    cv = std::span<const Complex>(small.data(), values.size());
  } else {
    large.assign(values.begin(), values.end());
    cv = large;
  }
  const Complex v = eval_complex(e, cv);
  if (std::abs(v.imag()) > kRealTolerance) {
    throw Error(ErrorKind::EvalDomain, "expected a real value, got imaginary part " + format_number(v.imag()));
  }
  return v.real();
}

inline double eval_real(const Expr& e, std::initializer_list<double> values) {
  return eval_real(e, std::span<const double>(values.begin(), values.size()));
}

}  // namespace bicomplex::expr
