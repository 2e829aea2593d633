#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace heatgraph::exprlang {

enum class NodeKind { number, var_r, add, sub, mul, div, power, neg, call };

enum class Builtin { exp_fn, log_fn, sqrt_fn, abs_fn, min_fn, max_fn, pow_fn, fact_fn };

const char* builtin_name(Builtin b);

/// AST node with value semantics; children owned by the vector.
struct Node {
  NodeKind kind = NodeKind::number;
  double number = 0.0;
  Builtin fn = Builtin::exp_fn;
  std::vector<Node> args;
};

struct ParseError : std::runtime_error {
  ParseError(std::string msg, std::size_t offset, std::vector<std::string> expected);
  std::size_t offset;                  // byte offset into the source text
  std::vector<std::string> expected;   // tokens that would have been accepted
};

struct EvalError : std::runtime_error {
  EvalError(std::string msg, std::string node);
  std::string node;  // printed form of the offending subexpression
};

/// A parsed closed-form expression in the single integer variable r.
///
/// Grammar (whitespace-insensitive):
///   expr   := term (("+"|"-") term)*
///   term   := factor (("*"|"/") factor)*
///   factor := "-" factor | atom ("^" factor)?
///   atom   := NUMBER | "r" | IDENT "(" expr ("," expr)* ")" | "(" expr ")"
///
/// "^" is right-associative and binds tighter than unary minus, so "-2^2"
/// evaluates to -4 while "2^-r" is pow(2, -r).
class Expr {
 public:
  static Expr parse(std::string_view text);

  /// Evaluate at integer r under IEEE double semantics. log of a nonpositive
  /// argument, division by zero, sqrt of a negative, fact of a negative or
  /// non-integer argument, and NaN results raise EvalError.
  double eval(std::int64_t r) const;

  /// Canonical printer; parse(print()) reproduces the same AST.
  std::string print() const;

  const Node& root() const { return *root_; }

  /// Build directly from an AST (used by generators in tests).
  static Expr from_ast(Node n);

 private:
  Expr() = default;
  std::shared_ptr<const Node> root_;
  // flattened postfix program; evaluation runs a small stack machine rather
  // than walking the tree
  struct Instr {
    NodeKind op;
    double number;
    Builtin fn;
    std::uint32_t argc;
  };
  std::vector<Instr> program_;
  void compile();
};

std::string print_node(const Node& n);

}  // namespace heatgraph::exprlang
