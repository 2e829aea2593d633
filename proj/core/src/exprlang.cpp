#include "heatgraph/exprlang.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <utility>

namespace heatgraph::exprlang {

const char* builtin_name(Builtin b) {
  switch (b) {
    case Builtin::exp_fn: return "exp";
    case Builtin::log_fn: return "log";
    case Builtin::sqrt_fn: return "sqrt";
    case Builtin::abs_fn: return "abs";
    case Builtin::min_fn: return "min";
    case Builtin::max_fn: return "max";
    case Builtin::pow_fn: return "pow";
    case Builtin::fact_fn: return "fact";
  }
  return "?";
}

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i];
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::string msg, std::size_t off, std::vector<std::string> exp)
    : std::runtime_error(msg + " at offset " + std::to_string(off) +
                         " (expected: " + join(exp) + ")"),
      offset(off),
      expected(std::move(exp)) {}

EvalError::EvalError(std::string msg, std::string nd)
    : std::runtime_error(msg + " in `" + nd + "`"), node(std::move(nd)) {}

// ---------------------------------------------------------------------------
// parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Node parse_all() {
    Node n = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input", {"operator", "end of input"});
    return n;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected) {
    throw ParseError(msg, pos_, std::move(expected));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Node expr() {
    Node lhs = term();
    for (;;) {
      if (eat('+')) {
        Node n{NodeKind::add, 0, Builtin::exp_fn, {}};
        n.args.push_back(std::move(lhs));
        n.args.push_back(term());
        lhs = std::move(n);
      } else if (eat('-')) {
        Node n{NodeKind::sub, 0, Builtin::exp_fn, {}};
        n.args.push_back(std::move(lhs));
        n.args.push_back(term());
        lhs = std::move(n);
      } else {
        return lhs;
      }
    }
  }

  Node term() {
    Node lhs = factor();
    for (;;) {
      if (eat('*')) {
        Node n{NodeKind::mul, 0, Builtin::exp_fn, {}};
        n.args.push_back(std::move(lhs));
        n.args.push_back(factor());
        lhs = std::move(n);
      } else if (eat('/')) {
        Node n{NodeKind::div, 0, Builtin::exp_fn, {}};
        n.args.push_back(std::move(lhs));
        n.args.push_back(factor());
        lhs = std::move(n);
      } else {
        return lhs;
      }
    }
  }

  // "^" binds tighter than unary minus and associates to the right
  Node factor() {
    if (eat('-')) {
      Node n{NodeKind::neg, 0, Builtin::exp_fn, {}};
      n.args.push_back(factor());
      return n;
    }
    Node base = atom();
    if (eat('^')) {
      Node n{NodeKind::power, 0, Builtin::exp_fn, {}};
      n.args.push_back(std::move(base));
      n.args.push_back(factor());
      return n;
    }
    return base;
  }

  Node atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input", {"number", "r", "ident", "("});
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (c == '(') {
      ++pos_;
      Node n = expr();
      if (!eat(')')) fail("unbalanced parenthesis", {")"});
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string ident(text_.substr(start, pos_ - start));
      if (ident == "r") return Node{NodeKind::var_r, 0, Builtin::exp_fn, {}};
      return call(ident, start);
    }
    fail("unexpected character", {"number", "r", "ident", "("});
  }

  Node call(const std::string& ident, std::size_t ident_pos) {
    Builtin fn;
    std::size_t min_arity, max_arity;
    if (ident == "exp") { fn = Builtin::exp_fn; min_arity = max_arity = 1; }
    else if (ident == "log") { fn = Builtin::log_fn; min_arity = max_arity = 1; }
    else if (ident == "sqrt") { fn = Builtin::sqrt_fn; min_arity = max_arity = 1; }
    else if (ident == "abs") { fn = Builtin::abs_fn; min_arity = max_arity = 1; }
    else if (ident == "fact") { fn = Builtin::fact_fn; min_arity = max_arity = 1; }
    else if (ident == "pow") { fn = Builtin::pow_fn; min_arity = max_arity = 2; }
    else if (ident == "min") { fn = Builtin::min_fn; min_arity = 2; max_arity = 16; }
    else if (ident == "max") { fn = Builtin::max_fn; min_arity = 2; max_arity = 16; }
    else {
      pos_ = ident_pos;
      fail("unknown function `" + ident + "`",
           {"exp", "log", "sqrt", "abs", "min", "max", "pow", "fact"});
    }
    if (!eat('(')) fail("expected argument list", {"("});
    Node n{NodeKind::call, 0, fn, {}};
    n.args.push_back(expr());
    while (eat(',')) n.args.push_back(expr());
    if (!eat(')')) fail("unbalanced call", {")", ","});
    if (n.args.size() < min_arity || n.args.size() > max_arity) {
      pos_ = ident_pos;
      fail("wrong arity for `" + ident + "`", {std::to_string(min_arity) + " argument(s)"});
    }
    return n;
  }

  Node number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    // exponent is consumed only when a complete one is present, so "2e-r"
    // parses as 2 followed by trailing garbage rather than a half-eaten float
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
      if (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
        while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
        pos_ = p;
      }
    }
    if (pos_ == start || (pos_ == start + 1 && text_[start] == '.')) {
      pos_ = start;
      fail("malformed number", {"digits"});
    }
    Node n{NodeKind::number, 0, Builtin::exp_fn, {}};
    n.number = std::strtod(std::string(text_.substr(start, pos_ - start)).c_str(), nullptr);
    return n;
  }
};

// ---------------------------------------------------------------------------
// printer

int precedence(NodeKind k) {
  switch (k) {
    case NodeKind::add:
    case NodeKind::sub: return 1;
    case NodeKind::mul:
    case NodeKind::div: return 2;
    case NodeKind::neg: return 3;
    case NodeKind::power: return 4;
    default: return 5;
  }
}

void print_rec(const Node& n, std::string& out, int parent_prec, bool rhs_of_left_assoc) {
  const int prec = precedence(n.kind);
  const bool parens =
      prec < parent_prec || (rhs_of_left_assoc && prec == parent_prec && parent_prec < 3);
  if (parens) out += '(';
  switch (n.kind) {
    case NodeKind::number: {
      char buf[40];
      std::snprintf(buf, sizeof(buf), "%.17g", n.number);
      out += buf;
      break;
    }
    case NodeKind::var_r:
      out += 'r';
      break;
    case NodeKind::add:
    case NodeKind::sub:
    case NodeKind::mul:
    case NodeKind::div: {
      const char op = n.kind == NodeKind::add   ? '+'
                      : n.kind == NodeKind::sub ? '-'
                      : n.kind == NodeKind::mul ? '*'
                                                : '/';
      print_rec(n.args[0], out, prec, false);
      out += ' ';
      out += op;
      out += ' ';
      print_rec(n.args[1], out, prec, true);
      break;
    }
    case NodeKind::power:
      // left operand must be an atom or get parens (factor := atom ("^" factor)?);
      // right operand may be any factor, including a unary minus
      print_rec(n.args[0], out, prec + 1, false);
      out += '^';
      print_rec(n.args[1], out, prec, false);
      break;
    case NodeKind::neg:
      out += '-';
      print_rec(n.args[0], out, prec, false);
      break;
    case NodeKind::call: {
      out += builtin_name(n.fn);
      out += '(';
      for (std::size_t i = 0; i < n.args.size(); ++i) {
        if (i) out += ", ";
        print_rec(n.args[i], out, 0, false);
      }
      out += ')';
      break;
    }
  }
  if (parens) out += ')';
}

double factorial_checked(double x, const Node& n) {
  if (!(x >= 0) || x != std::floor(x)) {
    throw EvalError("fact of a negative or non-integer argument", print_node(n));
  }
  double acc = 1.0;
  for (double k = 2; k <= x; k += 1.0) acc *= k;
  return acc;
}

}  // namespace

std::string print_node(const Node& n) {
  std::string out;
  print_rec(n, out, 0, false);
  return out;
}

// ---------------------------------------------------------------------------
// Expr

Expr Expr::parse(std::string_view text) {
  Parser p(text);
  Expr e;
  e.root_ = std::make_shared<const Node>(p.parse_all());
  e.compile();
  return e;
}

Expr Expr::from_ast(Node n) {
  Expr e;
  e.root_ = std::make_shared<const Node>(std::move(n));
  e.compile();
  return e;
}

std::string Expr::print() const { return print_node(*root_); }

void Expr::compile() {
  program_.clear();
  // post-order walk
  std::vector<std::pair<const Node*, std::size_t>> stack;
  stack.emplace_back(root_.get(), 0);
  while (!stack.empty()) {
    auto& [node, next_child] = stack.back();
    if (next_child < node->args.size()) {
      const Node* child = &node->args[next_child];
      ++next_child;
      stack.emplace_back(child, 0);
    } else {
      program_.push_back({node->kind, node->number, node->fn,
                          static_cast<std::uint32_t>(node->args.size())});
      stack.pop_back();
    }
  }
}

double Expr::eval(std::int64_t r) const {
  // locate the offending AST node for diagnostics only on failure
  std::vector<double> stack;
  stack.reserve(16);
  std::size_t instr_index = 0;
  const auto node_at = [&](std::size_t target) -> const Node& {
    // re-walk to find the node matching a postfix position
    std::vector<std::pair<const Node*, std::size_t>> st;
    st.emplace_back(root_.get(), 0);
    std::size_t emitted = 0;
    while (!st.empty()) {
      auto& [node, next_child] = st.back();
      if (next_child < node->args.size()) {
        const Node* child = &node->args[next_child];
        ++next_child;
        st.emplace_back(child, 0);
      } else {
        if (emitted == target) return *node;
        ++emitted;
        st.pop_back();
      }
    }
    return *root_;
  };
  const auto bad = [&](const char* msg) -> EvalError {
    return EvalError(msg, print_node(node_at(instr_index)));
  };

  for (; instr_index < program_.size(); ++instr_index) {
    const auto& in = program_[instr_index];
    switch (in.op) {
      case NodeKind::number:
        stack.push_back(in.number);
        break;
      case NodeKind::var_r:
        stack.push_back(static_cast<double>(r));
        break;
      case NodeKind::neg:
        stack.back() = -stack.back();
        break;
      case NodeKind::add:
      case NodeKind::sub:
      case NodeKind::mul:
      case NodeKind::div:
      case NodeKind::power: {
        const double b = stack.back();
        stack.pop_back();
        double& a = stack.back();
        switch (in.op) {
          case NodeKind::add: a += b; break;
          case NodeKind::sub: a -= b; break;
          case NodeKind::mul: a *= b; break;
          case NodeKind::div:
            if (b == 0.0) throw bad("division by zero");
            a /= b;
            break;
          default:
            a = std::pow(a, b);
            if (std::isnan(a)) throw bad("pow outside its domain");
            break;
        }
        break;
      }
      case NodeKind::call: {
        const std::size_t argc = in.argc;
        double* args = stack.data() + stack.size() - argc;
        double res = 0;
        switch (in.fn) {
          case Builtin::exp_fn: res = std::exp(args[0]); break;
          case Builtin::log_fn:
            if (!(args[0] > 0)) throw bad("log of a nonpositive argument");
            res = std::log(args[0]);
            break;
          case Builtin::sqrt_fn:
            if (args[0] < 0) throw bad("sqrt of a negative argument");
            res = std::sqrt(args[0]);
            break;
          case Builtin::abs_fn: res = std::fabs(args[0]); break;
          case Builtin::pow_fn:
            res = std::pow(args[0], args[1]);
            if (std::isnan(res)) throw bad("pow outside its domain");
            break;
          case Builtin::fact_fn: res = factorial_checked(args[0], node_at(instr_index)); break;
          case Builtin::min_fn: {
            res = args[0];
            for (std::size_t i = 1; i < argc; ++i) res = std::min(res, args[i]);
            break;
          }
          case Builtin::max_fn: {
            res = args[0];
            for (std::size_t i = 1; i < argc; ++i) res = std::max(res, args[i]);
            break;
          }
        }
        stack.resize(stack.size() - argc);
        stack.push_back(res);
        break;
      }
    }
  }
  return stack.back();
}

}  // namespace heatgraph::exprlang
