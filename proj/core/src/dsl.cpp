#include "gradedq/dsl.hpp"

#include <cctype>
#include <utility>

#include "gradedq/errors.hpp"

namespace gradedq {
namespace {

enum class Tok { End, Ident, Int, LBrace, RBrace, Colon, Semi, Arrow, Plus, Minus, Star, Caret, Slash, LParen, RParen };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1, col = 1;
};

[[noreturn]] void fail(const Token& t, const std::string& msg) {
  throw UsageError("line " + std::to_string(t.line) + ", column " + std::to_string(t.col) + ": " + msg);
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto push = [&](Tok k, std::string s, int l, int c) { out.push_back(Token{k, std::move(s), l, c}); };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') { ++line; col = 1; ++i; continue; }
    if (std::isspace(static_cast<unsigned char>(c))) { ++col; ++i; continue; }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    const int l = line, cl = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      push(Tok::Ident, text.substr(i, j - i), l, cl);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      push(Tok::Int, text.substr(i, j - i), l, cl);
      col += static_cast<int>(j - i);
      i = j;
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      push(Tok::Arrow, "->", l, cl);
      i += 2;
      col += 2;
      continue;
    }
    Tok k;
    switch (c) {
      case '{': k = Tok::LBrace; break;
      case '}': k = Tok::RBrace; break;
      case ':': k = Tok::Colon; break;
      case ';': k = Tok::Semi; break;
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '^': k = Tok::Caret; break;
      case '/': k = Tok::Slash; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default:
        throw UsageError("line " + std::to_string(l) + ", column " + std::to_string(cl) +
                         ": unexpected character '" + std::string(1, c) + "'");
    }
    push(k, std::string(1, c), l, cl);
    ++i;
    ++col;
  }
  Token end;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_ + 1 < toks_.size() ? pos_++ : pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    next();
    return true;
  }
  Token expect(Tok k, const std::string& what) {
    if (peek().kind != k) fail(peek(), "expected " + what);
    return next();
  }

  // expr := ('-')? term (('+'|'-') term)*
  GradedPolynomial parse_expr(const Context& ctx) {
    bool neg = accept(Tok::Minus);
    GradedPolynomial p = parse_term(ctx);
    if (neg) p = -p;
    for (;;) {
      if (accept(Tok::Plus))
        p += parse_term(ctx);
      else if (accept(Tok::Minus))
        p -= parse_term(ctx);
      else
        return p;
    }
  }

 private:
  GradedPolynomial parse_term(const Context& ctx) {
    GradedPolynomial p = parse_factor(ctx);
    while (accept(Tok::Star)) p = p * parse_factor(ctx);
    return p;
  }

  GradedPolynomial parse_factor(const Context& ctx) {
    if (accept(Tok::Minus)) return -parse_factor(ctx);
    GradedPolynomial p = parse_atom(ctx);
    if (accept(Tok::Caret)) {
      Token e = expect(Tok::Int, "an exponent");
      if (e.text.size() > 4) fail(e, "exponent too large");
      long n = std::stol(e.text);
      GradedPolynomial r = GradedPolynomial::constant(p.context(), 1);
      for (long k = 0; k < n && !r.is_zero(); ++k) r = r * p;
      return r;
    }
    return p;
  }

  GradedPolynomial parse_atom(const Context& ctx) {
    const Token t = peek();
    if (accept(Tok::LParen)) {
      GradedPolynomial p = parse_expr(ctx);
      expect(Tok::RParen, "')'");
      return p;
    }
    if (t.kind == Tok::Int) {
      next();
      Rational c(t.text, 10);
      if (accept(Tok::Slash)) {
        Token d = expect(Tok::Int, "a denominator");
        Rational den(d.text, 10);
        if (den == 0) fail(d, "division by zero");
        c /= den;
      }
      c.canonicalize();
      return GradedPolynomial::constant(ctx, c);
    }
    if (t.kind == Tok::Ident) {
      next();
      auto idx = ctx.index_of(t.text);
      if (!idx) fail(t, "unknown variable '" + t.text + "'");
      return GradedPolynomial::variable(ctx, *idx);
    }
    fail(t, "expected a constant, a variable or '('");
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
};

int parse_signed_int(Parser& p) {
  bool neg = p.accept(Tok::Minus);
  Token t = p.expect(Tok::Int, "an integer");
  if (t.text.size() > 6) fail(t, "integer out of range");
  long v = std::stol(t.text);
  return static_cast<int>(neg ? -v : v);
}

int derivation_block_degree(const std::string& name) {
  if (name == "Q" || name == "Qprime" || name == "delta" || name == "qplus") return 1;
  if (name == "vf") return 0;
  return -1;
}

}  // namespace

const Derivation& ProblemFile::derivation(const std::string& name) const {
  auto it = derivations.find(name);
  if (it == derivations.end()) throw UsageError("problem file has no '" + name + "' block");
  return it->second;
}

ProblemFile parse_problem(const std::string& text, std::optional<int> jet_override,
                          std::optional<int> filt_override) {
  Parser p(text);
  ProblemFile out;

  std::vector<VarDecl> vars;
  bool have_manifold = false, have_truncate = false, ctx_built = false;
  int jet = 0, filt = 1;

  auto build_ctx = [&](const Token& at) {
    if (ctx_built) return;
    if (!have_manifold) fail(at, "a manifold block must come first");
    if (!have_truncate && !(jet_override && filt_override))
      fail(at, "a truncate block must come before derivations and ideals");
    out.ctx = Context::make(vars, jet_override.value_or(jet), filt_override.value_or(filt));
    ctx_built = true;
  };

  while (p.peek().kind != Tok::End) {
    Token head = p.expect(Tok::Ident, "a block name");
    if (head.text == "manifold") {
      if (have_manifold) fail(head, "duplicate manifold block");
      have_manifold = true;
      p.expect(Tok::LBrace, "'{'");
      while (!p.accept(Tok::RBrace)) {
        Token name = p.expect(Tok::Ident, "a variable name");
        p.expect(Tok::Colon, "':'");
        int deg = parse_signed_int(p);
        vars.push_back(VarDecl{name.text, deg});
        p.accept(Tok::Semi);
      }
      continue;
    }
    if (head.text == "truncate") {
      if (have_truncate) fail(head, "duplicate truncate block");
      have_truncate = true;
      p.expect(Tok::LBrace, "'{'");
      bool saw_jet = false, saw_filt = false;
      while (!p.accept(Tok::RBrace)) {
        Token key = p.expect(Tok::Ident, "'jet' or 'filtration'");
        if (key.text == "jet") {
          jet = parse_signed_int(p);
          saw_jet = true;
        } else if (key.text == "filtration") {
          filt = parse_signed_int(p);
          saw_filt = true;
        } else {
          fail(key, "expected 'jet' or 'filtration'");
        }
        p.accept(Tok::Semi);
      }
      if (!saw_jet || !saw_filt) fail(head, "truncate block needs both jet and filtration");
      continue;
    }
    if (head.text == "ideal") {
      build_ctx(head);
      p.expect(Tok::LBrace, "'{'");
      while (!p.accept(Tok::RBrace)) {
        out.ideal.push_back(p.parse_expr(out.ctx));
        p.expect(Tok::Semi, "';' after an ideal entry");
      }
      continue;
    }
    int block_degree = derivation_block_degree(head.text);
    if (block_degree < 0)
      fail(head, "unknown block '" + head.text + "' (expected manifold, truncate, ideal, Q, Qprime, delta, qplus or vf)");
    if (out.derivations.count(head.text)) fail(head, "duplicate block '" + head.text + "'");
    build_ctx(head);
    p.expect(Tok::LBrace, "'{'");
    std::vector<GradedPolynomial> values(static_cast<size_t>(out.ctx.size()),
                                         GradedPolynomial::zero(out.ctx));
    std::vector<bool> assigned(static_cast<size_t>(out.ctx.size()), false);
    while (!p.accept(Tok::RBrace)) {
      Token name = p.expect(Tok::Ident, "a variable name");
      auto idx = out.ctx.index_of(name.text);
      if (!idx) fail(name, "unknown variable '" + name.text + "'");
      if (assigned[static_cast<size_t>(*idx)]) fail(name, "variable assigned twice");
      assigned[static_cast<size_t>(*idx)] = true;
      p.expect(Tok::Arrow, "'->'");
      GradedPolynomial v = p.parse_expr(out.ctx);
      if (!v.is_zero() && !v.is_homogeneous(Grading::Total, nullptr))
        fail(name, "value of '" + name.text + "' is not homogeneous");
      values[static_cast<size_t>(*idx)] = std::move(v);
      p.accept(Tok::Semi);
    }
    try {
      out.derivations.emplace(head.text, Derivation::make(out.ctx, block_degree, values));
    } catch (const UsageError& e) {
      fail(head, "block '" + head.text + "': " + e.what());
    }
  }
  if (!have_manifold) throw UsageError("problem file has no manifold block");
  if (!ctx_built) build_ctx(p.peek());
  return out;
}

GradedPolynomial parse_polynomial(const Context& ctx, const std::string& text) {
  Parser p(text);
  GradedPolynomial r = p.parse_expr(ctx);
  if (p.peek().kind != Tok::End) fail(p.peek(), "unexpected trailing input");
  return r;
}

}  // namespace gradedq
