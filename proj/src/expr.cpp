#include "regquot/expr.hpp"

#include <cctype>

namespace regquot::expr {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Node run() {
    Node n = parse_sum();
    skip();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return n;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::ParseError, "column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static Node binary(Node::Kind kind, Node a, Node b) {
    Node n;
    n.kind = kind;
    n.column = a.column;
    n.children.push_back(std::move(a));
    n.children.push_back(std::move(b));
    return n;
  }

  Node parse_sum() {
    Node lhs = parse_product();
    for (;;) {
      if (accept('+')) {
        lhs = binary(Node::Kind::Add, std::move(lhs), parse_product());
      } else if (accept('-')) {
        lhs = binary(Node::Kind::Sub, std::move(lhs), parse_product());
      } else {
        return lhs;
      }
    }
  }

  Node parse_product() {
    Node lhs = parse_factor();
    while (accept('*')) lhs = binary(Node::Kind::Mul, std::move(lhs), parse_factor());
    return lhs;
  }

  Node parse_factor() {
    skip();
    const std::size_t col = pos_ + 1;
    if (accept('-')) {
      Node n;
      n.kind = Node::Kind::Neg;
      n.column = col;
      n.children.push_back(parse_factor());
      return n;
    }
    if (accept('+')) return parse_factor();
    Node base = parse_primary();
    if (accept('^')) {
      skip();
      bool negative = false;
      if (accept('-')) negative = true;
      skip();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) error("expected an integer exponent");
      const int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      Node n;
      n.kind = Node::Kind::Pow;
      n.column = col;
      n.exponent = negative ? -e : e;
      n.children.push_back(std::move(base));
      return n;
    }
    return base;
  }

  Node parse_primary() {
    skip();
    if (pos_ >= text_.size()) error("unexpected end of expression");
    Node n;
    n.column = pos_ + 1;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Node inner = parse_sum();
      if (!accept(')')) error("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class num(std::string(text_.substr(start, pos_ - start)));
      mpz_class den = 1;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const std::size_t dstart = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (dstart == pos_) error("expected a denominator");
        den = mpz_class(std::string(text_.substr(dstart, pos_ - dstart)));
        if (den == 0) error("zero denominator");
      }
      n.kind = Node::Kind::Number;
      n.number = Scalar(num, den);
      n.number.canonicalize();
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      n.kind = Node::Kind::Symbol;
      n.name = std::string(text_.substr(start, pos_ - start));
      return n;
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Node parse(std::string_view text) { return Parser(text).run(); }

}  // namespace regquot::expr
