#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "regquot/base_ring.hpp"
#include "regquot/error.hpp"

// Arithmetic expressions over named symbols: "x^2*y - 3*v1^-1",
// "(1 + a0)*(1 - a0)".  Parsing is independent of what the symbols mean;
// evaluation is driven by an environment, so the same syntax serves ring
// elements and (noncommutative) Clifford elements.
namespace regquot::expr {

struct Node {
  enum class Kind { Number, Symbol, Add, Sub, Mul, Neg, Pow };
  Kind kind = Kind::Number;
  Scalar number;
  std::string name;
  int exponent = 0;
  std::size_t column = 0;  // 1-based
  std::vector<Node> children;
};

Node parse(std::string_view text);

// Env must provide value_type and number(Scalar), symbol(name, column),
// add, sub, mul, neg, pow(value, exponent, column).
template <class Env>
typename Env::value_type evaluate(const Node& n, const Env& env) {
  switch (n.kind) {
    case Node::Kind::Number: return env.number(n.number);
    case Node::Kind::Symbol: return env.symbol(n.name, n.column);
    case Node::Kind::Add: return env.add(evaluate(n.children[0], env), evaluate(n.children[1], env));
    case Node::Kind::Sub: return env.sub(evaluate(n.children[0], env), evaluate(n.children[1], env));
    case Node::Kind::Mul: return env.mul(evaluate(n.children[0], env), evaluate(n.children[1], env));
    case Node::Kind::Neg: return env.neg(evaluate(n.children[0], env));
    case Node::Kind::Pow: return env.pow(evaluate(n.children[0], env), n.exponent, n.column);
  }
  fail(ErrorKind::ParseError, "unknown expression node");
}

}  // namespace regquot::expr
