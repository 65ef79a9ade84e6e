#pragma once

// Text syntax for algebra elements.
//
//   expr  := term (('+' | '-') term)*
//   term  := unary ('*' unary)*
//   unary := '-' unary | power
//   power := atom ('^' uint)?
//   atom  := rational | 'z' | 'eta'k | 'a'i | 'g'k | 'e' | '(' expr ')'
//
// `z` is zeta_m for the group's field order m, `a1`..`a2N` are the
// generators, `g0`, `g1`, ... the group generators and `e` the identity.

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "sra/algebra.hpp"

namespace sra {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Lexical, Syntax, UnknownSymbol, IndexOutOfRange, NegativeExponent };
  ParseError(Kind kind, std::size_t position, const std::string& what);
  Kind kind() const { return kind_; }
  /// 1-based offset into the parsed text.
  std::size_t position() const { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

struct ExprNode {
  enum class Kind { Rational, Zeta, Eta, Generator, GroupSymbol, Identity, Add, Sub, Mul, Neg, Pow };
  Kind kind;
  std::size_t position = 0;  // 1-based
  Rational value;            // Rational literal
  long index = 0;            // eta / generator / group symbol index, or exponent
  std::vector<std::unique_ptr<ExprNode>> children;
};

/// Syntax only; symbol ranges are checked by `evaluate`.
std::unique_ptr<ExprNode> parse_ast(const std::string& text);
Element evaluate(const ExprNode& node, const Algebra& algebra);
Element parse(const std::string& text, const Algebra& algebra);

/// Canonical text of an element of the standard frame; parse(print(f)) == f.
std::string print(const Element& f);
/// An eta polynomial in the same syntax, with z = zeta_m.
std::string print(const EtaPolynomial& p, int m);
/// A group element as a word in the generators, "e" for the identity.
std::string print_word(const Group& group, int g);

}  // namespace sra
