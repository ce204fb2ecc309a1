#include "tgwa/parse.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace tgwa {

namespace {

// ------------------------------------------------------------------ lexer

struct Token {
  enum class Kind {
    end,
    integer,
    ident,
    plus,
    minus,
    star,
    slash,
    caret,
    lparen,
    rparen,
    comma,
    colon,
    arrow,
  };
  Kind kind;
  std::string text;
  int line;
  int col;
};

std::vector<Token> lex(const std::string& text, int line_no) {
  std::vector<Token> out;
  size_t p = 0;
  int line = line_no;
  int col = 1;
  auto push = [&](Token::Kind k, std::string s) {
    out.push_back(Token{k, std::move(s), line, col});
  };
  while (p < text.size()) {
    char c = text[p];
    if (c == '\n') {
      ++line;
      col = 1;
      ++p;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++col;
      ++p;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = p;
      while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p])))
        ++p;
      push(Token::Kind::integer, text.substr(start, p - start));
      col += static_cast<int>(p - start);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = p;
      while (p < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[p])) ||
              text[p] == '_'))
        ++p;
      push(Token::Kind::ident, text.substr(start, p - start));
      col += static_cast<int>(p - start);
      continue;
    }
    if (c == '-' && p + 1 < text.size() && text[p + 1] == '>') {
      push(Token::Kind::arrow, "->");
      p += 2;
      col += 2;
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '+': k = Token::Kind::plus; break;
      case '-': k = Token::Kind::minus; break;
      case '*': k = Token::Kind::star; break;
      case '/': k = Token::Kind::slash; break;
      case '^': k = Token::Kind::caret; break;
      case '(': k = Token::Kind::lparen; break;
      case ')': k = Token::Kind::rparen; break;
      case ',': k = Token::Kind::comma; break;
      case ':': k = Token::Kind::colon; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line,
                         col);
    }
    push(k, std::string(1, c));
    ++p;
    ++col;
  }
  out.push_back(Token{Token::Kind::end, "", line, col});
  return out;
}

// ------------------------------------------------------ expression parser

// The domain supplies the value type and the algebra operations; the parser
// is shared by scalar, polynomial and element expressions.
template <class Domain>
class ExprParser {
 public:
  using Value = typename Domain::Value;

  ExprParser(Domain& dom, const std::vector<Token>& toks, size_t pos = 0)
      : dom_(dom), toks_(toks), pos_(pos) {}

  size_t position() const { return pos_; }

  Value parse_expr() {
    Value v = parse_term();
    for (;;) {
      if (peek().kind == Token::Kind::plus) {
        advance();
        v = dom_.add(std::move(v), parse_term());
      } else if (peek().kind == Token::Kind::minus) {
        advance();
        v = dom_.sub(std::move(v), parse_term());
      } else {
        return v;
      }
    }
  }

  void expect_end() const {
    if (peek().kind != Token::Kind::end)
      throw ParseError("unexpected trailing input '" + peek().text + "'",
                       peek().line, peek().col);
  }

 private:
  Domain& dom_;
  const std::vector<Token>& toks_;
  size_t pos_;

  const Token& peek() const { return toks_[pos_]; }
  const Token& advance() { return toks_[pos_++]; }

  Value parse_term() {
    Value v = parse_factor();
    for (;;) {
      if (peek().kind == Token::Kind::star) {
        advance();
        v = dom_.mul(std::move(v), parse_factor());
      } else if (peek().kind == Token::Kind::slash) {
        const Token& tok = advance();
        v = dom_.div(std::move(v), parse_factor(), tok);
      } else {
        return v;
      }
    }
  }

  Value parse_factor() {
    if (peek().kind == Token::Kind::minus) {
      advance();
      return dom_.neg(parse_factor());
    }
    if (peek().kind == Token::Kind::plus) {
      advance();
      return parse_factor();
    }
    return parse_power();
  }

  Value parse_power() {
    Value v = parse_atom();
    if (peek().kind == Token::Kind::caret) {
      const Token& tok = advance();
      long e = parse_signed_int();
      v = dom_.pow_int(std::move(v), e, tok);
    }
    return v;
  }

  long parse_signed_int() {
    bool negative = false;
    if (peek().kind == Token::Kind::minus) {
      advance();
      negative = true;
    }
    if (peek().kind != Token::Kind::integer)
      throw ParseError("expected an integer exponent", peek().line,
                       peek().col);
    const Token& tok = advance();
    try {
      long v = std::stol(tok.text);
      return negative ? -v : v;
    } catch (const std::exception&) {
      throw ParseError("exponent out of range", tok.line, tok.col);
    }
  }

  Value parse_atom() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Token::Kind::integer:
        advance();
        return dom_.from_integer(tok);
      case Token::Kind::ident: {
        advance();
        if ((tok.text == "X" || tok.text == "Y") &&
            peek().kind == Token::Kind::lparen) {
          advance();
          if (peek().kind != Token::Kind::integer)
            throw ParseError("expected a letter index", peek().line,
                             peek().col);
          const Token& idx = advance();
          if (peek().kind != Token::Kind::rparen)
            throw ParseError("expected ')'", peek().line, peek().col);
          advance();
          return dom_.letter(
              tok.text == "X" ? LetterKind::x : LetterKind::y,
              std::stoi(idx.text), idx);
        }
        return dom_.from_symbol(tok);
      }
      case Token::Kind::lparen: {
        advance();
        Value v = parse_expr();
        if (peek().kind != Token::Kind::rparen)
          throw ParseError("expected ')'", peek().line, peek().col);
        advance();
        return v;
      }
      default:
        throw ParseError("unexpected token '" + tok.text + "'", tok.line,
                         tok.col);
    }
  }
};

// ----------------------------------------------------------------- domains

struct ScalarDomain {
  using Value = Scalar;
  FieldKind field;

  Value from_integer(const Token& t) { return Scalar(mpq_class(t.text)); }
  Value from_symbol(const Token& t) {
    if (t.text == "q") {
      if (field != FieldKind::rational_functions)
        throw ParseError("q is not available over the field Q", t.line, t.col);
      return Scalar::q();
    }
    throw ParseError("unknown symbol '" + t.text + "' in a scalar", t.line,
                     t.col);
  }
  Value letter(LetterKind, int, const Token& t) {
    throw ParseError("letters are not allowed in a scalar", t.line, t.col);
  }
  Value add(Value a, const Value& b) { return a += b; }
  Value sub(Value a, const Value& b) { return a -= b; }
  Value neg(Value a) { return -a; }
  Value mul(Value a, const Value& b) { return a *= b; }
  Value div(Value a, const Value& b, const Token& t) {
    if (b.is_zero()) throw ParseError("division by zero", t.line, t.col);
    return a /= b;
  }
  Value pow_int(Value a, long e, const Token& t) {
    if (e < 0 && a.is_zero())
      throw ParseError("negative power of zero", t.line, t.col);
    return pow(a, e);
  }
};

struct PolyDomain {
  using Value = Polynomial;
  RingCtxPtr ctx;

  Value from_integer(const Token& t) {
    return Polynomial::constant(ctx, Scalar(mpq_class(t.text)));
  }
  Value from_symbol(const Token& t) {
    if (t.text == "q") {
      if (ctx->field() != FieldKind::rational_functions)
        throw ParseError("q is not available over the field Q", t.line, t.col);
      return Polynomial::constant(ctx, Scalar::q());
    }
    if (auto g = ctx->generator_index(t.text))
      return Polynomial::generator(ctx, *g);
    throw ParseError("unknown variable '" + t.text + "'", t.line, t.col);
  }
  Value letter(LetterKind, int, const Token& t) {
    throw ParseError("letters are not allowed in a ring polynomial", t.line,
                     t.col);
  }
  Value add(Value a, const Value& b) { return a += b; }
  Value sub(Value a, const Value& b) { return a -= b; }
  Value neg(Value a) { return -a; }
  Value mul(Value a, const Value& b) { return a *= b; }
  Value div(Value a, const Value& b, const Token& t) {
    if (!b.is_constant() || b.is_zero())
      throw ParseError("division is only defined by nonzero scalars", t.line,
                       t.col);
    return a *= b.constant_coeff().inverse();
  }
  Value pow_int(Value a, long e, const Token& t) {
    if (e >= 0) return pow(a, static_cast<int>(e));
    if (!a.is_constant() || a.is_zero())
      throw ParseError("negative powers are only defined for nonzero scalars",
                       t.line, t.col);
    return Polynomial::constant(ctx, pow(a.constant_coeff(), e));
  }
};

struct ElementDomain {
  using Value = GradedElement;
  const TgwcDatum& d;

  Polynomial constant(const Scalar& s) const {
    return Polynomial::constant(d.ring(), s);
  }
  Value from_integer(const Token& t) {
    return GradedElement::ring_element(constant(Scalar(mpq_class(t.text))));
  }
  Value from_symbol(const Token& t) {
    if (t.text == "q") {
      if (d.ring()->field() != FieldKind::rational_functions)
        throw ParseError("q is not available over the field Q", t.line, t.col);
      return GradedElement::ring_element(constant(Scalar::q()));
    }
    if (auto g = d.ring()->generator_index(t.text))
      return GradedElement::ring_element(Polynomial::generator(d.ring(), *g));
    throw ParseError("unknown variable '" + t.text + "'", t.line, t.col);
  }
  Value letter(LetterKind k, int index, const Token& t) {
    if (index < 1 || index > d.rank())
      throw ParseError("letter index " + std::to_string(index) +
                           " out of range 1.." + std::to_string(d.rank()),
                       t.line, t.col);
    return GradedElement::monic(d, Word{Letter{k, index}});
  }
  Value add(Value a, const Value& b) { return a += b; }
  Value sub(Value a, const Value& b) { return a -= b; }
  Value neg(Value a) { return -a; }
  Value mul(const Value& a, const Value& b) { return multiply(d, a, b); }

  // Degree-zero constant-coefficient elements act as scalars.
  std::optional<Scalar> as_scalar(const Value& v) const {
    if (v.is_zero()) return Scalar(0);
    if (v.term_count() != 1) return std::nullopt;
    const auto& [w, c] = *v.terms().begin();
    if (!w.empty() || !c.is_constant()) return std::nullopt;
    return c.constant_coeff();
  }
  Value div(const Value& a, const Value& b, const Token& t) {
    auto s = as_scalar(b);
    if (!s || s->is_zero())
      throw ParseError("division is only defined by nonzero scalars", t.line,
                       t.col);
    return scalar_multiply(s->inverse(), a);
  }
  Value pow_int(const Value& a, long e, const Token& t) {
    if (e < 0) {
      auto s = as_scalar(a);
      if (!s || s->is_zero())
        throw ParseError(
            "negative powers are only defined for nonzero scalars", t.line,
            t.col);
      return GradedElement::ring_element(constant(pow(*s, e)));
    }
    Value acc = GradedElement::ring_element(constant(Scalar(1)));
    for (long k = 0; k < e; ++k) acc = multiply(d, acc, a);
    return acc;
  }
};

template <class Domain>
typename Domain::Value parse_with(Domain dom, const std::string& text) {
  std::vector<Token> toks = lex(text, 1);
  ExprParser<Domain> parser(dom, toks);
  auto v = parser.parse_expr();
  parser.expect_end();
  return v;
}

}  // namespace

Scalar parse_scalar(const std::string& text, FieldKind field) {
  return parse_with(ScalarDomain{field}, text);
}

Polynomial parse_polynomial(const RingCtxPtr& ctx, const std::string& text) {
  return parse_with(PolyDomain{ctx}, text);
}

GradedElement parse_element(const TgwcDatum& d, const std::string& text) {
  return parse_with(ElementDomain{d}, text);
}

// ------------------------------------------------------------- datum files

namespace {

struct SpecLine {
  int no;
  std::vector<Token> toks;
};

int token_int(const Token& t, const char* what) {
  if (t.kind != Token::Kind::integer)
    throw ParseError(std::string("expected ") + what, t.line, t.col);
  return std::stoi(t.text);
}

}  // namespace

TgwcDatum parse_tgwc_spec(const std::string& text) {
  // Split into comment-stripped token lines.
  std::vector<SpecLine> lines;
  {
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
      ++no;
      if (auto hash = raw.find('#'); hash != std::string::npos)
        raw.resize(hash);
      std::vector<Token> toks = lex(raw, no);
      if (toks.size() > 1) lines.push_back(SpecLine{no, std::move(toks)});
    }
  }

  std::optional<FieldKind> field;
  std::vector<std::string> vars;
  bool vars_seen = false;
  bool body_seen = false;
  RingCtxPtr ctx;
  std::map<int, std::vector<Polynomial>> sigma_images, sigma_inv_images;
  std::map<int, Polynomial> t_map;
  std::map<std::pair<int, int>, Scalar> mu_map;

  auto freeze_ctx = [&](const Token& at) {
    if (!field)
      throw ParseError("missing field declaration", at.line, at.col);
    if (!ctx) ctx = RingCtx::make(vars, *field);
    body_seen = true;
  };
  auto identity_images = [&]() {
    std::vector<Polynomial> images;
    for (int g = 0; g < ctx->generator_count(); ++g)
      images.push_back(Polynomial::generator(ctx, g));
    return images;
  };
  auto parse_mappings = [&](const std::vector<Token>& toks, size_t pos,
                            std::vector<Polynomial>& images) {
    // name -> expr (, name -> expr)*; empty list allowed.
    if (toks[pos].kind == Token::Kind::end) return;
    for (;;) {
      const Token& name = toks[pos];
      if (name.kind != Token::Kind::ident)
        throw ParseError("expected a generator name", name.line, name.col);
      auto g = ctx->generator_index(name.text);
      if (!g)
        throw ParseError("unknown variable '" + name.text + "'", name.line,
                         name.col);
      ++pos;
      if (toks[pos].kind != Token::Kind::arrow)
        throw ParseError("expected '->'", toks[pos].line, toks[pos].col);
      ++pos;
      PolyDomain dom{ctx};
      ExprParser<PolyDomain> parser(dom, toks, pos);
      images[*g] = parser.parse_expr();
      pos = parser.position();
      if (toks[pos].kind == Token::Kind::comma) {
        ++pos;
        continue;
      }
      if (toks[pos].kind == Token::Kind::end) return;
      throw ParseError("expected ',' or end of line", toks[pos].line,
                       toks[pos].col);
    }
  };

  for (const SpecLine& line : lines) {
    const std::vector<Token>& toks = line.toks;
    const Token& head = toks[0];
    if (head.kind != Token::Kind::ident)
      throw ParseError("expected a directive", head.line, head.col);

    if (head.text == "field") {
      if (field)
        throw ParseError("duplicate field declaration", head.line, head.col);
      if (vars_seen || body_seen)
        throw ParseError("field must be declared first", head.line, head.col);
      size_t pos = 1;
      if (toks[pos].kind != Token::Kind::ident || toks[pos].text != "Q")
        throw ParseError("expected Q or Q(q)", toks[pos].line, toks[pos].col);
      ++pos;
      if (toks[pos].kind == Token::Kind::lparen) {
        ++pos;
        if (toks[pos].kind != Token::Kind::ident || toks[pos].text != "q")
          throw ParseError("expected Q(q)", toks[pos].line, toks[pos].col);
        ++pos;
        if (toks[pos].kind != Token::Kind::rparen)
          throw ParseError("expected ')'", toks[pos].line, toks[pos].col);
        ++pos;
        field = FieldKind::rational_functions;
      } else {
        field = FieldKind::rationals;
      }
      if (toks[pos].kind != Token::Kind::end)
        throw ParseError("unexpected trailing input", toks[pos].line,
                         toks[pos].col);
      continue;
    }

    if (head.text == "vars") {
      if (!field)
        throw ParseError("missing field declaration", head.line, head.col);
      if (vars_seen)
        throw ParseError("duplicate vars declaration", head.line, head.col);
      if (body_seen)
        throw ParseError("vars must precede sigma, t and mu declarations",
                         head.line, head.col);
      vars_seen = true;
      size_t pos = 1;
      while (toks[pos].kind != Token::Kind::end) {
        if (toks[pos].kind == Token::Kind::comma) {
          ++pos;
          continue;
        }
        if (toks[pos].kind != Token::Kind::ident)
          throw ParseError("expected a variable name", toks[pos].line,
                           toks[pos].col);
        const std::string& name = toks[pos].text;
        if (name == "X" || name == "Y" || name == "q")
          throw ParseError("'" + name + "' is reserved", toks[pos].line,
                           toks[pos].col);
        vars.push_back(name);
        ++pos;
      }
      continue;
    }

    if (head.text == "sigma" || head.text == "sigma_inv") {
      freeze_ctx(head);
      int idx = token_int(toks[1], "a sigma index");
      if (idx < 1) throw ParseError("sigma index must be positive",
                                    toks[1].line, toks[1].col);
      if (toks[2].kind != Token::Kind::colon)
        throw ParseError("expected ':'", toks[2].line, toks[2].col);
      auto& target = (head.text == "sigma") ? sigma_images : sigma_inv_images;
      if (target.count(idx))
        throw ParseError("duplicate " + head.text + " " + std::to_string(idx),
                         head.line, head.col);
      std::vector<Polynomial> images = identity_images();
      parse_mappings(toks, 3, images);
      target.emplace(idx, std::move(images));
      continue;
    }

    if (head.text == "t") {
      freeze_ctx(head);
      int idx = token_int(toks[1], "a t index");
      if (idx < 1)
        throw ParseError("t index must be positive", toks[1].line, toks[1].col);
      if (toks[2].kind != Token::Kind::colon)
        throw ParseError("expected ':'", toks[2].line, toks[2].col);
      if (t_map.count(idx))
        throw ParseError("duplicate t " + std::to_string(idx), head.line,
                         head.col);
      PolyDomain dom{ctx};
      ExprParser<PolyDomain> parser(dom, toks, 3);
      Polynomial p = parser.parse_expr();
      if (toks[parser.position()].kind != Token::Kind::end)
        throw ParseError("unexpected trailing input",
                         toks[parser.position()].line,
                         toks[parser.position()].col);
      t_map.emplace(idx, std::move(p));
      continue;
    }

    if (head.text == "mu") {
      freeze_ctx(head);
      int i = token_int(toks[1], "a mu index");
      int j = token_int(toks[2], "a mu index");
      if (i == j)
        throw ParseError("mu is undefined on the diagonal", head.line,
                         head.col);
      if (toks[3].kind != Token::Kind::colon)
        throw ParseError("expected ':'", toks[3].line, toks[3].col);
      ScalarDomain dom{*field};
      ExprParser<ScalarDomain> parser(dom, toks, 4);
      Scalar value = parser.parse_expr();
      if (toks[parser.position()].kind != Token::Kind::end)
        throw ParseError("unexpected trailing input",
                         toks[parser.position()].line,
                         toks[parser.position()].col);
      std::pair<int, int> key{std::min(i, j), std::max(i, j)};
      auto it = mu_map.find(key);
      if (it != mu_map.end()) {
        if (it->second != value)
          throw ParseError("mu pair declared twice with conflicting values",
                           head.line, head.col);
      } else {
        mu_map.emplace(key, std::move(value));
      }
      continue;
    }

    throw ParseError("unknown directive '" + head.text + "'", head.line,
                     head.col);
  }

  if (!field) throw ParseError("missing field declaration");
  if (!ctx) ctx = RingCtx::make(vars, *field);

  int n = 0;
  for (const auto& [idx, images] : sigma_images) n = std::max(n, idx);
  for (const auto& [idx, images] : sigma_inv_images) n = std::max(n, idx);
  for (const auto& [idx, p] : t_map) n = std::max(n, idx);
  if (n == 0) throw ParseError("no sigma or t declarations");

  std::vector<RingMap> sigma;
  std::vector<Polynomial> t;
  for (int i = 1; i <= n; ++i) {
    auto fwd = sigma_images.find(i);
    if (fwd == sigma_images.end())
      throw ParseError("missing sigma " + std::to_string(i));
    auto inv = sigma_inv_images.find(i);
    if (inv == sigma_inv_images.end())
      throw ParseError("missing sigma_inv " + std::to_string(i));
    sigma.emplace_back(ctx, fwd->second, inv->second);
    auto ti = t_map.find(i);
    if (ti == t_map.end())
      throw ParseError("missing t " + std::to_string(i));
    t.push_back(ti->second);
  }

  std::map<std::pair<int, int>, Scalar> mu;
  for (const auto& [key, value] : mu_map) {
    if (key.first < 1 || key.second > n)
      throw ParseError("mu index out of range 1.." + std::to_string(n));
    mu[key] = value;
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!mu.count({i, j})) mu[{i, j}] = Scalar(1);

  return TgwcDatum(ctx, std::move(sigma), std::move(t), std::move(mu));
}

std::string print_tgwc_spec(const TgwcDatum& d) {
  if (!d.mu_symmetric())
    throw ParameterError("cannot serialize a datum with asymmetric mu");
  std::ostringstream out;
  out << "field "
      << (d.ring()->field() == FieldKind::rational_functions ? "Q(q)" : "Q")
      << "\n";
  if (d.ring()->generator_count() > 0) {
    out << "vars";
    for (const auto& name : d.ring()->generator_names()) out << " " << name;
    out << "\n";
  }
  auto emit_map = [&](const char* directive, int i,
                      const std::vector<Polynomial>& images) {
    out << directive << " " << i << ":";
    bool first = true;
    for (int g = 0; g < d.ring()->generator_count(); ++g) {
      if (images[g] == Polynomial::generator(d.ring(), g)) continue;
      out << (first ? " " : ", ") << d.ring()->generator_name(g) << " -> "
          << images[g].to_string();
      first = false;
    }
    out << "\n";
  };
  for (int i = 1; i <= d.rank(); ++i) {
    emit_map("sigma", i, d.sigma(i).forward_images());
    emit_map("sigma_inv", i, d.sigma(i).inverse_images());
  }
  for (int i = 1; i <= d.rank(); ++i)
    out << "t " << i << ": " << d.t(i).to_string() << "\n";
  for (int i = 1; i <= d.rank(); ++i)
    for (int j = i + 1; j <= d.rank(); ++j)
      out << "mu " << i << " " << j << ": " << d.mu(i, j).to_string() << "\n";
  return out.str();
}

}  // namespace tgwa
