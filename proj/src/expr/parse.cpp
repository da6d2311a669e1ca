#include "expr/parse.hpp"

#include <cctype>
#include <functional>
#include <optional>
#include <sstream>

namespace wnlie {

namespace {

struct Token {
  enum class Kind { integer, ident, op, end };
  Kind kind = Kind::end;
  std::string text;
  long value = 0;
  size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void expected(const std::string& what) const {
    fail(errc::parse_error, "at position " + std::to_string(tok_.pos) + ": expected " +
                                what + ", found '" +
                                (tok_.kind == Token::Kind::end ? "end of input" : tok_.text) +
                                "'");
  }

 private:
  void advance() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    tok_ = Token{};
    tok_.pos = i_;
    if (i_ >= text_.size()) return;
    char c = text_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = i_;
      while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
      tok_.kind = Token::Kind::integer;
      tok_.text = text_.substr(start, i_ - start);
      tok_.value = std::stol(tok_.text);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = i_;
      while (i_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_'))
        ++i_;
      tok_.kind = Token::Kind::ident;
      tok_.text = text_.substr(start, i_ - start);
      return;
    }
    tok_.kind = Token::Kind::op;
    tok_.text = std::string(1, c);
    ++i_;
  }

  const std::string& text_;
  size_t i_ = 0;
  Token tok_;
};

int param_index(const std::string& name, const std::vector<std::string>& params) {
  for (size_t i = 0; i < params.size(); ++i)
    if (params[i] == name) return static_cast<int>(i);
  return -1;
}

// Identifier classification: t<i>, d<i>, h<i>, E, or a declared parameter.
struct Ident {
  enum class Kind { t, d, h, euler, param } kind;
  int index = 0;  // 0-based
};

std::optional<Ident> classify(const std::string& name, int n,
                              const std::vector<std::string>& params, bool gens) {
  int p = param_index(name, params);
  if (p >= 0) return Ident{Ident::Kind::param, p};
  if (!gens) return std::nullopt;
  if (name == "E") return Ident{Ident::Kind::euler, 0};
  if (name.size() >= 2 && (name[0] == 't' || name[0] == 'd' || name[0] == 'h')) {
    for (size_t i = 1; i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    int idx = std::stoi(name.substr(1)) - 1;
    if (idx < 0 || idx >= n)
      fail(errc::parse_error, "index out of range in '" + name + "' (n = " + std::to_string(n) + ")");
    Ident::Kind k = name[0] == 't' ? Ident::Kind::t
                    : name[0] == 'd' ? Ident::Kind::d
                                     : Ident::Kind::h;
    return Ident{k, idx};
  }
  return std::nullopt;
}

int parse_exponent(Lexer& lex) {
  bool neg = false;
  if (lex.peek().kind == Token::Kind::op && lex.peek().text == "-") {
    lex.next();
    neg = true;
  }
  if (lex.peek().kind != Token::Kind::integer) lex.expected("integer exponent");
  long v = lex.next().value;
  return static_cast<int>(neg ? -v : v);
}

// --- element expressions -------------------------------------------------

class UParser {
 public:
  UParser(Lexer& lex, int n, const std::vector<std::string>& params)
      : lex_(lex), n_(n), params_(params) {}

  UElem expr() {
    UElem acc = term();
    while (lex_.peek().kind == Token::Kind::op &&
           (lex_.peek().text == "+" || lex_.peek().text == "-")) {
      std::string op = lex_.next().text;
      UElem rhs = term();
      acc = op == "+" ? acc + rhs : acc - rhs;
    }
    return acc;
  }

 private:
  // One multiplicative chain, fusing t-powers into the following d.
  UElem term() {
    UElem acc = u_one();
    MIndex pending(n_);
    bool have_pending = false;

    auto flush_guard = [&](const std::string& what) {
      if (have_pending)
        fail(errc::parse_error,
             "dangling t factors before " + what + "; a t run must end in some d<j>");
    };

    factor(acc, pending, have_pending, flush_guard);
    while (lex_.peek().kind == Token::Kind::op &&
           (lex_.peek().text == "*" || lex_.peek().text == "/")) {
      std::string op = lex_.next().text;
      if (op == "*") {
        factor(acc, pending, have_pending, flush_guard);
      } else {
        UElem divisor = parse_factor_elem();
        flushable_divide(acc, divisor, have_pending);
      }
    }
    if (have_pending)
      fail(errc::parse_error, "dangling t factors; a t run must end in some d<j>");
    return acc;
  }

  void flushable_divide(UElem& acc, const UElem& divisor, bool have_pending) {
    if (have_pending)
      fail(errc::parse_error, "cannot divide a dangling t run");
    auto s = as_scalar(divisor);
    if (!s) fail(errc::parse_error, "division by a non-scalar element");
    if (s->is_zero()) fail(errc::division_by_zero, "division by zero");
    acc = acc.scaled(s->inv());
  }

  static std::optional<Scalar> as_scalar(const UElem& u) {
    if (u.is_zero()) return Scalar(0);
    if (u.size() != 1 || !u.begin()->first.is_one()) return std::nullopt;
    return u.begin()->second;
  }

  // Parses one factor and folds it into (acc, pending).
  void factor(UElem& acc, MIndex& pending, bool& have_pending,
              const std::function<void(const std::string&)>& flush_guard) {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::op && t.text == "-") {
      lex_.next();
      factor(acc, pending, have_pending, flush_guard);
      acc = -acc;
      return;
    }
    if (t.kind == Token::Kind::integer) {
      flush_guard("a scalar");
      Scalar c{Rat(lex_.next().value)};
      int e = maybe_exponent();
      acc = acc.scaled(c.pow(e));
      return;
    }
    if (t.kind == Token::Kind::op && t.text == "(") {
      flush_guard("a parenthesized expression");
      lex_.next();
      UElem inner = expr();
      expect_op(")");
      int e = maybe_exponent();
      if (e < 0) {
        auto s = as_scalar(inner);
        if (!s) fail(errc::parse_error, "negative power of a non-scalar element");
        acc = acc.scaled(s->pow(e));
      } else {
        acc = mul(acc, u_pow(inner, e));
      }
      return;
    }
    if (t.kind == Token::Kind::op && t.text == "[") {
      flush_guard("a bracket");
      lex_.next();
      UElem x = expr();
      expect_op(",");
      UElem y = expr();
      expect_op("]");
      int e = maybe_exponent();
      if (e < 0) fail(errc::parse_error, "negative power of a bracket");
      acc = mul(acc, u_pow(commutator(x, y), e));
      return;
    }
    if (t.kind != Token::Kind::ident) lex_.expected("a factor");
    auto id = classify(t.text, n_, params_, true);
    if (!id) fail(errc::parse_error, "at position " + std::to_string(t.pos) +
                                         ": unknown name '" + t.text + "'");
    lex_.next();
    int e = maybe_exponent();
    switch (id->kind) {
      case Ident::Kind::param: {
        flush_guard("a parameter");
        acc = acc.scaled(Scalar::param(id->index, static_cast<int>(params_.size())).pow(e));
        return;
      }
      case Ident::Kind::t: {
        if (e < 0) fail(errc::parse_error, "negative exponent on t" +
                                               std::to_string(id->index + 1) +
                                               " (no t-localization)");
        pending[id->index] += e;
        have_pending = true;
        return;
      }
      case Ident::Kind::d: {
        if (have_pending) {
          if (e < 1)
            fail(errc::parse_error,
                 "a t run must be closed by d<j> with positive exponent");
          acc = mul(acc, u_gen(Gen{pending, id->index}));
          if (e > 1) acc = mul(acc, u_gen(gen_partial(n_, id->index), e - 1));
          pending = MIndex(n_);
          have_pending = false;
        } else if (e != 0) {
          acc = mul(acc, u_gen(gen_partial(n_, id->index), e));
        }
        return;
      }
      case Ident::Kind::h: {
        flush_guard("h" + std::to_string(id->index + 1));
        if (e < 0) fail(errc::parse_error, "negative exponent on h");
        acc = mul(acc, u_pow(u_gen(gen_h(n_, id->index)), e));
        return;
      }
      case Ident::Kind::euler: {
        flush_guard("E");
        if (e < 0) fail(errc::parse_error, "negative exponent on E");
        UElem eu;
        for (int i = 0; i < n_; ++i) eu += u_gen(gen_h(n_, i));
        acc = mul(acc, u_pow(eu, e));
        return;
      }
    }
  }

  UElem parse_factor_elem() {
    UElem acc = u_one();
    MIndex pending(n_);
    bool have_pending = false;
    auto guard = [&](const std::string&) {};
    factor(acc, pending, have_pending, guard);
    if (have_pending) fail(errc::parse_error, "dangling t factors in divisor");
    return acc;
  }

  int maybe_exponent() {
    if (lex_.peek().kind == Token::Kind::op && lex_.peek().text == "^") {
      lex_.next();
      return parse_exponent(lex_);
    }
    return 1;
  }

  void expect_op(const std::string& s) {
    if (lex_.peek().kind != Token::Kind::op || lex_.peek().text != s)
      lex_.expected("'" + s + "'");
    lex_.next();
  }

  Lexer& lex_;
  int n_;
  const std::vector<std::string>& params_;
};

}  // namespace

UElem parse_u_expr(const std::string& text, int n, const std::vector<std::string>& params) {
  Lexer lex(text);
  UParser p(lex, n, params);
  UElem out = p.expr();
  if (lex.peek().kind != Token::Kind::end) lex.expected("end of input");
  return out;
}

WittElem parse_witt_expr(const std::string& text, int n,
                         const std::vector<std::string>& params) {
  UElem u = parse_u_expr(text, n, params);
  WittElem w;
  for (const auto& [mono, c] : u) {
    if (mono.f.size() != 1 || mono.f[0].second != 1)
      fail(errc::domain_error, "not a vector field: " + mono.str());
    const Gen& g = mono.f[0].first;
    w.add(WittTerm{g.m, g.j}, c);
  }
  return w;
}

Scalar parse_scalar(const std::string& text, const std::vector<std::string>& params) {
  UElem u = parse_u_expr(text, 1, params);
  if (u.is_zero()) return Scalar(0);
  if (u.size() != 1 || !u.begin()->first.is_one())
    fail(errc::parse_error, "not a scalar expression: " + text);
  return u.begin()->second;
}

std::vector<Scalar> parse_scalar_vector(const std::string& text,
                                        const std::vector<std::string>& params) {
  std::vector<Scalar> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(parse_scalar(cur, params));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(parse_scalar(cur, params));
  return out;
}

MIndex parse_mindex(const std::string& text, int n) {
  std::vector<int> e;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) fail(errc::parse_error, "empty component in multi-index");
    e.push_back(std::stoi(cur));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  flush();
  if (static_cast<int>(e.size()) != n)
    fail(errc::dimension_mismatch, "multi-index has " + std::to_string(e.size()) +
                                       " entries, expected " + std::to_string(n));
  return MIndex(e);
}

PVec parse_pvec(const std::string& text, int n, const std::vector<std::string>& params,
                bool allow_negative) {
  Lexer lex(text);
  PVec acc;
  auto parse_term = [&](bool negate) {
    Scalar coeff(negate ? -1 : 1);
    MIndex m(n);
    while (true) {
      const Token& t = lex.peek();
      if (t.kind == Token::Kind::integer) {
        Scalar c{Rat(lex.next().value)};
        if (lex.peek().kind == Token::Kind::op && lex.peek().text == "/") {
          lex.next();
          if (lex.peek().kind != Token::Kind::integer) lex.expected("denominator");
          c = c / Scalar(Rat(lex.next().value));
        }
        coeff = coeff * c;
      } else if (t.kind == Token::Kind::ident) {
        auto id = classify(t.text, n, params, true);
        if (!id) lex.expected("t<i> or a parameter");
        lex.next();
        int e = 1;
        if (lex.peek().kind == Token::Kind::op && lex.peek().text == "^") {
          lex.next();
          e = parse_exponent(lex);
        }
        if (id->kind == Ident::Kind::param) {
          coeff = coeff * Scalar::param(id->index, static_cast<int>(params.size())).pow(e);
        } else if (id->kind == Ident::Kind::t) {
          if (e < 0 && !allow_negative)
            fail(errc::parse_error, "negative t exponent not allowed in a polynomial vector");
          m[id->index] += e;
        } else {
          lex.expected("t<i> or a parameter");
        }
      } else {
        lex.expected("a monomial factor");
      }
      if (lex.peek().kind == Token::Kind::op && lex.peek().text == "*") {
        lex.next();
        continue;
      }
      break;
    }
    acc.add(m, coeff);
  };
  bool neg = false;
  if (lex.peek().kind == Token::Kind::op && lex.peek().text == "-") {
    lex.next();
    neg = true;
  }
  parse_term(neg);
  while (lex.peek().kind == Token::Kind::op &&
         (lex.peek().text == "+" || lex.peek().text == "-")) {
    bool minus = lex.next().text == "-";
    parse_term(minus);
  }
  if (lex.peek().kind != Token::Kind::end) lex.expected("end of input");
  return acc;
}

WeylOp parse_weyl_op(const std::string& text, int n,
                     const std::vector<std::string>& params) {
  Lexer lex(text);
  WeylOp op;
  auto parse_term = [&](bool negate) {
    Scalar coeff(negate ? -1 : 1);
    std::vector<WeylFactor> word;
    while (true) {
      const Token& t = lex.peek();
      if (t.kind == Token::Kind::integer) {
        Scalar c{Rat(lex.next().value)};
        if (lex.peek().kind == Token::Kind::op && lex.peek().text == "/") {
          lex.next();
          if (lex.peek().kind != Token::Kind::integer) lex.expected("denominator");
          c = c / Scalar(Rat(lex.next().value));
        }
        coeff = coeff * c;
      } else if (t.kind == Token::Kind::ident) {
        auto id = classify(t.text, n, params, true);
        if (!id) lex.expected("t<i>, d<i> or a parameter");
        lex.next();
        int e = 1;
        if (lex.peek().kind == Token::Kind::op && lex.peek().text == "^") {
          lex.next();
          e = parse_exponent(lex);
        }
        if (id->kind == Ident::Kind::param) {
          coeff = coeff * Scalar::param(id->index, static_cast<int>(params.size())).pow(e);
        } else if (id->kind == Ident::Kind::t) {
          if (e < 0) fail(errc::parse_error, "negative t exponent in a Weyl operator");
          word.push_back(WeylFactor{true, id->index, e});
        } else if (id->kind == Ident::Kind::d) {
          word.push_back(WeylFactor{false, id->index, e});
        } else {
          lex.expected("t<i>, d<i> or a parameter");
        }
      } else {
        lex.expected("a factor");
      }
      if (lex.peek().kind == Token::Kind::op && lex.peek().text == "*") {
        lex.next();
        continue;
      }
      break;
    }
    op.terms.push_back({coeff, std::move(word)});
  };
  bool neg = false;
  if (lex.peek().kind == Token::Kind::op && lex.peek().text == "-") {
    lex.next();
    neg = true;
  }
  parse_term(neg);
  while (lex.peek().kind == Token::Kind::op &&
         (lex.peek().text == "+" || lex.peek().text == "-")) {
    bool minus = lex.next().text == "-";
    parse_term(minus);
  }
  if (lex.peek().kind != Token::Kind::end) lex.expected("end of input");
  return op;
}

PVec apply_weyl_op(const WeylOp& op, const DnModule& mod, const PVec& v) {
  PVec out;
  for (const auto& [coeff, word] : op.terms) {
    PVec cur = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      if (it->is_t) {
        for (int e = 0; e < it->exp; ++e) cur = mod.act_t(it->index, cur);
      } else if (it->exp >= 0) {
        for (int e = 0; e < it->exp; ++e) cur = mod.act_d(it->index, cur);
      } else {
        for (int e = 0; e < -it->exp; ++e) cur = mod.act_dinv(it->index, cur);
      }
    }
    out += cur.scaled(coeff);
  }
  return out;
}

}  // namespace wnlie
