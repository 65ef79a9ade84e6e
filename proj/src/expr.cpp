#include "sra/expr.hpp"

#include <cctype>

namespace sra {

ParseError::ParseError(Kind kind, std::size_t position, const std::string& what)
    : std::runtime_error("at position " + std::to_string(position) + ": " + what),
      kind_(kind),
      position_(position) {}

namespace {

struct Token {
  enum class Type { Number, Rational, Name, Op, End };
  Type type;
  std::string text;
  std::size_t position;  // 1-based
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto digits = [&] {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return text.substr(start, i - start);
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t pos = i + 1;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      if (i + 1 < text.size() && text[i] == '/' && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
        ++i;
        num += "/" + digits();
        out.push_back({Token::Type::Rational, num, pos});
      } else {
        out.push_back({Token::Type::Number, num, pos});
      }
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
      std::string name = text.substr(start, i - start);
      name += digits();
      out.push_back({Token::Type::Name, name, pos});
    } else if (std::string("+-*^()").find(c) != std::string::npos) {
      out.push_back({Token::Type::Op, std::string(1, c), pos});
      ++i;
    } else {
      throw ParseError(ParseError::Kind::Lexical, pos, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::Type::End, "", text.size() + 1});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  std::unique_ptr<ExprNode> parse_all() {
    auto node = expr();
    if (peek().type != Token::Type::End) fail("unexpected '" + peek().text + "'");
    return node;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool is_op(const char* op) const { return peek().type == Token::Type::Op && peek().text == op; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(ParseError::Kind::Syntax, peek().position, what);
  }

  static std::unique_ptr<ExprNode> node(ExprNode::Kind kind, std::size_t position) {
    auto n = std::make_unique<ExprNode>();
    n->kind = kind;
    n->position = position;
    return n;
  }

  std::unique_ptr<ExprNode> binary(ExprNode::Kind kind, std::size_t position, std::unique_ptr<ExprNode> l,
                                   std::unique_ptr<ExprNode> r) {
    auto n = node(kind, position);
    n->children.push_back(std::move(l));
    n->children.push_back(std::move(r));
    return n;
  }

  std::unique_ptr<ExprNode> expr() {
    auto left = term();
    while (is_op("+") || is_op("-")) {
      auto kind = peek().text == "+" ? ExprNode::Kind::Add : ExprNode::Kind::Sub;
      std::size_t p = tokens_[pos_++].position;
      left = binary(kind, p, std::move(left), term());
    }
    return left;
  }

  std::unique_ptr<ExprNode> term() {
    auto left = unary();
    while (is_op("*")) {
      std::size_t p = tokens_[pos_++].position;
      left = binary(ExprNode::Kind::Mul, p, std::move(left), unary());
    }
    return left;
  }

  std::unique_ptr<ExprNode> unary() {
    if (is_op("-")) {
      auto n = node(ExprNode::Kind::Neg, tokens_[pos_++].position);
      n->children.push_back(unary());
      return n;
    }
    return power();
  }

  std::unique_ptr<ExprNode> power() {
    auto base = atom();
    if (!is_op("^")) return base;
    std::size_t p = tokens_[pos_++].position;
    if (is_op("-")) throw ParseError(ParseError::Kind::NegativeExponent, peek().position, "negative exponent");
    if (peek().type != Token::Type::Number) fail("expected a nonnegative integer exponent");
    auto n = node(ExprNode::Kind::Pow, p);
    n->index = std::stol(tokens_[pos_++].text);
    n->children.push_back(std::move(base));
    return n;
  }

  std::unique_ptr<ExprNode> atom() {
    const Token& t = peek();
    if (t.type == Token::Type::Number || t.type == Token::Type::Rational) {
      auto n = node(ExprNode::Kind::Rational, t.position);
      n->value = parse_rational(t.text);
      ++pos_;
      return n;
    }
    if (t.type == Token::Type::Name) {
      auto n = named(t);
      ++pos_;
      return n;
    }
    if (is_op("(")) {
      ++pos_;
      auto inner = expr();
      if (!is_op(")")) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (t.type == Token::Type::End) fail("unexpected end of input");
    fail("unexpected '" + t.text + "'");
  }

  static std::unique_ptr<ExprNode> named(const Token& t) {
    const std::string& s = t.text;
    if (s == "z") return node(ExprNode::Kind::Zeta, t.position);
    if (s == "e") return node(ExprNode::Kind::Identity, t.position);
    std::size_t split = 0;
    while (split < s.size() && std::isalpha(static_cast<unsigned char>(s[split]))) ++split;
    std::string head = s.substr(0, split), tail = s.substr(split);
    ExprNode::Kind kind;
    if (head == "eta")
      kind = ExprNode::Kind::Eta;
    else if (head == "a")
      kind = ExprNode::Kind::Generator;
    else if (head == "g")
      kind = ExprNode::Kind::GroupSymbol;
    else
      throw ParseError(ParseError::Kind::UnknownSymbol, t.position, "unknown symbol '" + s + "'");
    if (tail.empty() || tail.size() > 9)
      throw ParseError(ParseError::Kind::UnknownSymbol, t.position, "symbol '" + s + "' needs an index");
    auto n = node(kind, t.position);
    n->index = std::stol(tail);
    return n;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

std::unique_ptr<ExprNode> parse_ast(const std::string& text) { return Parser(lex(text)).parse_all(); }

Element evaluate(const ExprNode& n, const Algebra& algebra) {
  const Group& G = algebra.group();
  auto out_of_range = [&](const std::string& what) {
    return ParseError(ParseError::Kind::IndexOutOfRange, n.position, what);
  };
  switch (n.kind) {
    case ExprNode::Kind::Rational:
      return algebra.scalar(EtaPolynomial(Cyclotomic(n.value)));
    case ExprNode::Kind::Zeta:
      return algebra.scalar(EtaPolynomial(Cyclotomic::zeta(G.field_order(), 1)));
    case ExprNode::Kind::Eta:
      if (n.index >= G.eta_count())
        throw out_of_range("eta" + std::to_string(n.index) + " out of range; the group has " +
                           std::to_string(G.eta_count()) + " eta variables");
      return algebra.scalar(algebra.eta(static_cast<int>(n.index)));
    case ExprNode::Kind::Generator:
      if (n.index < 1 || n.index > G.dim())
        throw out_of_range("a" + std::to_string(n.index) + " out of range; generators are a1..a" +
                           std::to_string(G.dim()));
      return algebra.generator(static_cast<int>(n.index - 1));
    case ExprNode::Kind::GroupSymbol:
      if (n.index >= static_cast<long>(G.generators().size()))
        throw out_of_range("g" + std::to_string(n.index) + " out of range; the group has " +
                           std::to_string(G.generators().size()) + " generators");
      return algebra.element(G.generators()[n.index]);
    case ExprNode::Kind::Identity:
      return algebra.element(G.identity());
    case ExprNode::Kind::Add:
      return evaluate(*n.children[0], algebra) + evaluate(*n.children[1], algebra);
    case ExprNode::Kind::Sub:
      return evaluate(*n.children[0], algebra) - evaluate(*n.children[1], algebra);
    case ExprNode::Kind::Mul:
      return evaluate(*n.children[0], algebra) * evaluate(*n.children[1], algebra);
    case ExprNode::Kind::Neg:
      return -evaluate(*n.children[0], algebra);
    case ExprNode::Kind::Pow: {
      Element base = evaluate(*n.children[0], algebra);
      Element acc = algebra.scalar(EtaPolynomial(1));
      for (long k = 0; k < n.index; ++k) acc = acc * base;
      return acc;
    }
  }
  throw std::logic_error("unhandled expression node");
}

Element parse(const std::string& text, const Algebra& algebra) { return evaluate(*parse_ast(text), algebra); }

namespace {

bool is_negative_rational(const Cyclotomic& c) { return c.is_rational() && c.rational() < 0; }

// A coefficient that can stand as a factor without parentheses.
bool is_atomic(const Cyclotomic& c) { return c.is_rational(); }

std::string eta_monomial(const EtaPolynomial::Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "eta" + std::to_string(i);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

// Sum of signed pieces; each piece is (negative, magnitude text).
std::string join(const std::vector<std::pair<bool, std::string>>& pieces) {
  if (pieces.empty()) return "0";
  std::string out;
  for (const auto& [neg, text] : pieces) {
    if (out.empty())
      out += neg ? "-" + text : text;
    else
      out += (neg ? " - " : " + ") + text;
  }
  return out;
}

std::vector<std::pair<bool, std::string>> eta_pieces(const EtaPolynomial& p, int m) {
  std::vector<std::pair<bool, std::string>> pieces;
  for (const auto& [e, c] : p.terms()) {
    std::string mono = eta_monomial(e);
    bool neg = is_negative_rational(c);
    Cyclotomic mag = neg ? -c : c;
    std::string coef = is_atomic(mag) ? mag.rational().get_str() : "(" + mag.to_literal(m) + ")";
    if (mono.empty())
      pieces.emplace_back(neg, is_atomic(mag) ? coef : mag.to_literal(m));
    else if (mag.is_one())
      pieces.emplace_back(neg, mono);
    else
      pieces.emplace_back(neg, coef + "*" + mono);
  }
  return pieces;
}

}  // namespace

std::string print(const EtaPolynomial& p, int m) { return join(eta_pieces(p, m)); }

std::string print_word(const Group& G, int g) {
  std::string out;
  for (int s : G.word(g)) out += (out.empty() ? "g" : "*g") + std::to_string(s);
  return out.empty() ? "e" : out;
}

std::string print(const Element& f) {
  const Frame& frame = f.frame();
  if (!frame.is_standard()) throw std::invalid_argument("only standard-frame elements have a text form");
  const Group& G = frame.group();
  const int m = G.field_order();
  std::vector<std::pair<bool, std::string>> pieces;
  for (const auto& [g, poly] : f.terms()) {
    std::string group_part = g == G.identity() ? "" : print_word(G, g);
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
      const auto& [mono, c] = *it;
      std::string letters;
      for (std::size_t i = 0; i < mono.size(); ++i) {
        if (mono[i] == 0) continue;
        if (!letters.empty()) letters += "*";
        letters += "a" + std::to_string(i + 1);
        if (mono[i] > 1) letters += "^" + std::to_string(mono[i]);
      }
      std::string body = letters;
      if (!group_part.empty()) body += (body.empty() ? "" : "*") + group_part;
      bool neg = false;
      std::string coef;
      if (c.is_constant()) {
        Cyclotomic v = c.constant_term();
        neg = is_negative_rational(v);
        Cyclotomic mag = neg ? -v : v;
        if (!mag.is_one() || body.empty())
          coef = is_atomic(mag) || body.empty() ? mag.to_literal(m) : "(" + mag.to_literal(m) + ")";
      } else {
        auto inner = eta_pieces(c, m);
        if (inner.size() == 1 && body.empty()) {
          neg = inner[0].first;
          coef = inner[0].second;
        } else if (inner.size() == 1 && !inner[0].second.empty() && inner[0].second.find(' ') == std::string::npos) {
          neg = inner[0].first;
          coef = inner[0].second;
        } else {
          coef = "(" + join(inner) + ")";
        }
      }
      std::string term = coef;
      if (!body.empty()) term += (term.empty() ? "" : "*") + body;
      pieces.emplace_back(neg, term);
    }
  }
  return join(pieces);
}

}  // namespace sra
