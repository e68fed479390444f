#include "river/expr.hpp"

#include "river/error.hpp"
#include "river/kunneth.hpp"

#include <cctype>

namespace river {

namespace {

enum class Tok { Ident, Int, LBracket, RBracket, LParen, RParen, Comma, Star, Plus, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
  int line;
  int column;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  int line = 1;
  int col = 1;
  auto advance = [&](std::size_t count) {
    for (std::size_t k = 0; k < count; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char ch = src[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    Token tok{Tok::End, "", i, line, col};
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < src.size() && std::isalnum(static_cast<unsigned char>(src[j]))) ++j;
      tok.kind = Tok::Ident;
      tok.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(ch)) ||
               ((ch == '-' || ch == '+') && i + 1 < src.size() &&
                std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      std::size_t j = i + 1;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      tok.kind = Tok::Int;
      tok.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (src.substr(i, 3) == "(+)") {
      tok.kind = Tok::Plus;
      tok.text = "(+)";
      advance(3);
    } else {
      switch (ch) {
        case '[': tok.kind = Tok::LBracket; break;
        case ']': tok.kind = Tok::RBracket; break;
        case '(': tok.kind = Tok::LParen; break;
        case ')': tok.kind = Tok::RParen; break;
        case ',': tok.kind = Tok::Comma; break;
        case '*': tok.kind = Tok::Star; break;
        default:
          throw ParseError(std::string("unexpected character '") + ch + "'", line, col);
      }
      tok.text = std::string(1, ch);
      advance(1);
    }
    out.push_back(std::move(tok));
  }
  out.push_back({Tok::End, "end of input", src.size(), line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src), tokens_(lex(src)) {}

  BundleExpr parse() {
    BundleExpr e;
    e.root = sum();
    if (peek().kind == Tok::Ident && peek().text == "on") {
      next();
      const Token& p = expect(Tok::Ident, "'P<n>' after 'on'");
      if (p.text.size() < 2 || p.text[0] != 'P') fail(p, "expected 'P<n>' after 'on'");
      for (std::size_t k = 1; k < p.text.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(p.text[k]))) fail(p, "expected 'P<n>' after 'on'");
      }
      e.ambient = std::stoi(p.text.substr(1));
      if (*e.ambient < 1) fail(p, "ambient dimension must be positive");
    }
    if (peek().kind != Tok::End) fail(peek(), "unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const Token& at, const std::string& msg) const {
    throw ParseError(msg, at.line, at.column);
  }

  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) fail(peek(), "expected " + what + ", found '" + peek().text + "'");
    return next();
  }

  long integer() {
    const Token& t = expect(Tok::Int, "an integer");
    Integer v = parse_integer(t.text);
    if (!v.fits_slong_p()) fail(t, "integer out of range");
    return v.get_si();
  }

  std::vector<long> integers(Tok close, const std::string& close_text) {
    std::vector<long> out{integer()};
    while (peek().kind == Tok::Comma) {
      next();
      out.push_back(integer());
    }
    expect(close, "'" + close_text + "'");
    return out;
  }

  template <class T>
  ExprPtr make(T node, std::size_t start) {
    const std::size_t end = tokens_[pos_ - 1].offset + tokens_[pos_ - 1].text.size();
    return std::make_shared<const ExprNode>(ExprNode{std::move(node), std::string(src_.substr(start, end - start))});
  }

  ExprPtr sum() {
    const std::size_t start = peek().offset;
    std::vector<ExprPtr> terms{term()};
    while (peek().kind == Tok::Plus) {
      next();
      terms.push_back(term());
    }
    if (terms.size() == 1) return terms.front();
    return make(ExprNode::Sum{std::move(terms)}, start);
  }

  ExprPtr term() {
    const std::size_t start = peek().offset;
    if (peek().kind == Tok::Int) {
      const Token& t = next();
      Integer k = parse_integer(t.text);
      if (k <= 0) fail(t, "multiplicity must be positive");
      expect(Tok::Star, "'*' after a multiplicity");
      ExprPtr inner = atom();
      return make(ExprNode::Scaled{k, std::move(inner)}, start);
    }
    return atom();
  }

  ExprPtr atom() {
    const Token& t = peek();
    const std::size_t start = t.offset;
    if (t.kind == Tok::LParen) {
      next();
      ExprPtr inner = sum();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind != Tok::Ident) fail(t, "expected a bundle, found '" + t.text + "'");
    const std::string name = next().text;
    if (name == "S") {
      expect(Tok::LBracket, "'[' after S");
      auto parts = integers(Tok::RBracket, "]");
      for (std::size_t k = 1; k < parts.size(); ++k) {
        if (parts[k] > parts[k - 1]) fail(t, "parts of S[...] must be weakly decreasing");
      }
      return make(ExprNode::Homogeneous{std::move(parts)}, start);
    }
    if (name == "O") {
      expect(Tok::LParen, "'(' after O");
      long d = integer();
      expect(Tok::RParen, "')'");
      return make(ExprNode::Line{d}, start);
    }
    if (name == "push") {
      expect(Tok::LParen, "'(' after push");
      return make(ExprNode::Push{integers(Tok::RParen, ")")}, start);
    }
    if (name == "dual") {
      expect(Tok::LParen, "'(' after dual");
      ExprPtr inner = sum();
      expect(Tok::RParen, "')'");
      return make(ExprNode::Dual{std::move(inner)}, start);
    }
    if (name == "twist") {
      expect(Tok::LParen, "'(' after twist");
      ExprPtr inner = sum();
      expect(Tok::Comma, "',' in twist(e, t)");
      long s = integer();
      expect(Tok::RParen, "')'");
      return make(ExprNode::Twist{std::move(inner), s}, start);
    }
    fail(t, "unknown bundle '" + name + "'");
  }

  std::string_view src_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

std::optional<int> intrinsic_dimension(const ExprNode& e) {
  return std::visit(
      overloaded{
          [](const ExprNode::Homogeneous& h) -> std::optional<int> { return static_cast<int>(h.parts.size()); },
          [](const ExprNode::Line&) -> std::optional<int> { return std::nullopt; },
          [](const ExprNode::Push& p) -> std::optional<int> { return static_cast<int>(p.degrees.size()); },
          [](const ExprNode::Dual& d) { return intrinsic_dimension(*d.inner); },
          [](const ExprNode::Twist& t) { return intrinsic_dimension(*t.inner); },
          [](const ExprNode::Scaled& s) { return intrinsic_dimension(*s.inner); },
          [](const ExprNode::Sum& s) -> std::optional<int> {
            std::optional<int> n;
            for (const auto& term : s.terms) {
              auto m = intrinsic_dimension(*term);
              if (!m) continue;
              if (n && *n != *m) {
                throw DimensionMismatch("'" + term->source + "' lives on P^" + std::to_string(*m) +
                                        " but earlier terms live on P^" + std::to_string(*n));
              }
              n = m;
            }
            return n;
          },
      },
      e.node);
}

CohomologyTable build(const ExprNode& e, int n) {
  return std::visit(
      overloaded{
          [&](const ExprNode::Homogeneous& h) {
            if (static_cast<int>(h.parts.size()) != n) {
              throw DimensionMismatch("'" + e.source + "' has " + std::to_string(h.parts.size()) +
                                      " parts but the ambient space is P^" + std::to_string(n));
            }
            return CohomologyTable::homogeneous(GenPartition(h.parts));
          },
          [&](const ExprNode::Line& l) {
            return CohomologyTable::homogeneous(GenPartition::constant(n, l.degree));
          },
          [&](const ExprNode::Push& p) {
            if (static_cast<int>(p.degrees.size()) != n) {
              throw DimensionMismatch("'" + e.source + "' is a bundle on P^" +
                                      std::to_string(p.degrees.size()) + ", not P^" + std::to_string(n));
            }
            return pushforward_table(p.degrees);
          },
          [&](const ExprNode::Dual& d) { return dual(build(*d.inner, n)); },
          [&](const ExprNode::Twist& t) { return twist(build(*t.inner, n), t.shift); },
          [&](const ExprNode::Scaled& s) { return scale(build(*s.inner, n), s.factor); },
          [&](const ExprNode::Sum& s) {
            CohomologyTable acc = build(*s.terms.front(), n);
            for (std::size_t k = 1; k < s.terms.size(); ++k) acc = add(acc, build(*s.terms[k], n));
            return acc;
          },
      },
      e.node);
}

}  // namespace

BundleExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

int ambient_dimension(const BundleExpr& e) {
  auto inferred = intrinsic_dimension(*e.root);
  if (e.ambient && inferred && *e.ambient != *inferred) {
    throw DimensionMismatch("'" + e.root->source + "' lives on P^" + std::to_string(*inferred) +
                            ", not P^" + std::to_string(*e.ambient));
  }
  if (e.ambient) return *e.ambient;
  if (inferred) return *inferred;
  throw InvalidArgument("cannot infer the ambient space of '" + e.root->source + "'; add 'on P<n>'");
}

CohomologyTable evaluate(const BundleExpr& e) { return build(*e.root, ambient_dimension(e)); }

}  // namespace river
