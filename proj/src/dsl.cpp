#include "dsl.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>

namespace qgeo {

namespace {

// ------------------------------------------------------------------ lexer ---

enum class Tok {
  Ident,
  Int,
  LBrace,
  RBrace,
  LParen,
  RParen,
  Semi,
  Comma,
  Colon,
  Dot,
  Arrow,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  Pipe,
  Less,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  size_t line;
  size_t col;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  size_t line = 1, col = 1, i = 0;
  auto push = [&](Tok k, std::string s, size_t l, size_t c) {
    out.push_back(Token{k, std::move(s), l, c});
  };
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++col;
      ++i;
      continue;
    }
    if (ch == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    size_t l = line, c = col;
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      push(Tok::Ident, text.substr(i, j - i), l, c);
      col += j - i;
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      push(Tok::Int, text.substr(i, j - i), l, c);
      col += j - i;
      i = j;
      continue;
    }
    if (ch == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      push(Tok::Arrow, "->", l, c);
      i += 2;
      col += 2;
      continue;
    }
    Tok k;
    switch (ch) {
      case '{': k = Tok::LBrace; break;
      case '}': k = Tok::RBrace; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case ';': k = Tok::Semi; break;
      case ',': k = Tok::Comma; break;
      case ':': k = Tok::Colon; break;
      case '.': k = Tok::Dot; break;
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '|': k = Tok::Pipe; break;
      case '<': k = Tok::Less; break;
      default:
        throw ParseError(l, c, std::string("unexpected character '") + ch + "'");
    }
    push(k, std::string(1, ch), l, c);
    ++i;
    ++col;
  }
  out.push_back(Token{Tok::End, "", line, col});
  return out;
}

const char* tok_what(Tok k) {
  switch (k) {
    case Tok::Ident: return "a name";
    case Tok::Int: return "an integer";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Semi: return "';'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Dot: return "'.'";
    case Tok::Arrow: return "'->'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Caret: return "'^'";
    case Tok::Pipe: return "'|'";
    case Tok::Less: return "'<'";
    case Tok::End: return "end of input";
  }
  return "?";
}

// ------------------------------------------------------- expression parser ---

// A parsed value: either a plain element (rank 1) or a sum of two-leg
// tensor terms (rank 2).
struct Val {
  int rank = 1;
  Element el;
  std::vector<TensorTerm> tt;
};

class ExprParser {
 public:
  ExprParser(const std::vector<Token>& toks, size_t& idx, const Presentation& pres)
      : toks_(toks), idx_(idx), pres_(pres), ps_(pres.params()) {}

  Val parse_expr() {
    Val acc = parse_tensor();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      Token op = next();
      Val rhs = parse_tensor();
      if (acc.rank != rhs.rank)
        throw ParseError(op.line, op.col, "cannot add a tensor to a non-tensor");
      if (acc.rank == 1) {
        acc.el = (op.kind == Tok::Plus) ? acc.el + rhs.el : acc.el - rhs.el;
      } else {
        for (TensorTerm& t : rhs.tt) {
          if (op.kind == Tok::Minus) t.coeff = -t.coeff;
          acc.tt.push_back(std::move(t));
        }
      }
    }
    return acc;
  }

 private:
  Val parse_tensor() {
    Token first = peek();
    Val lhs = parse_mul();
    if (!at(Tok::Pipe)) return lhs;
    Token op = next();
    Val rhs = parse_mul();
    if (lhs.rank != 1 || rhs.rank != 1)
      throw ParseError(op.line, op.col, "tensor factors cannot themselves be tensors");
    if (at(Tok::Pipe)) {
      Token extra = peek();
      throw ParseError(extra.line, extra.col, "only two tensor factors are supported");
    }
    Val v;
    v.rank = 2;
    v.tt.push_back(TensorTerm{std::move(lhs.el), std::move(rhs.el), Scalar::one(ps_)});
    (void)first;
    return v;
  }

  Val parse_mul() {
    Val acc = parse_unary();
    while (at(Tok::Star) || at(Tok::Slash)) {
      Token op = next();
      Val rhs = parse_unary();
      if (op.kind == Tok::Star) {
        acc = multiply(std::move(acc), std::move(rhs), op);
      } else {
        std::optional<Scalar> d = as_scalar(rhs);
        if (!d || rhs.rank != 1)
          throw ParseError(op.line, op.col, "division requires a scalar divisor");
        if (d->is_zero()) throw ParseError(op.line, op.col, "division by zero");
        acc = scale(std::move(acc), d->inverse());
      }
    }
    return acc;
  }

  Val parse_unary() {
    if (at(Tok::Minus)) {
      next();
      Val v = parse_unary();
      return scale(std::move(v), -Scalar::one(ps_));
    }
    return parse_pow();
  }

  Val parse_pow() {
    Val base = parse_atom();
    if (!at(Tok::Caret)) return base;
    Token op = next();
    bool neg = false;
    if (at(Tok::Minus)) {
      next();
      neg = true;
    }
    Token e = expect(Tok::Int, "an integer exponent");
    long n = std::stol(e.text);
    if (neg) n = -n;
    std::optional<Scalar> b = as_scalar(base);
    if (!b || base.rank != 1)
      throw ParseError(op.line, op.col, "'^' requires a scalar base");
    if (b->is_zero() && n < 0) throw ParseError(op.line, op.col, "division by zero");
    Val v;
    v.el = unit_scaled(b->pow(n));
    return v;
  }

  Val parse_atom() {
    Token t = peek();
    if (t.kind == Tok::Int) {
      next();
      Val v;
      v.el = unit_scaled(Scalar::rational(ps_, Rat(t.text)));
      return v;
    }
    if (t.kind == Tok::LParen) {
      next();
      Val v = parse_expr();
      expect(Tok::RParen, "')'");
      return v;
    }
    if (t.kind == Tok::Ident) {
      next();
      if (t.text == "i") {
        Val v;
        v.el = unit_scaled(Scalar::imag_unit(ps_));
        return v;
      }
      std::optional<GenId> g = pres_.gen_id(t.text);
      if (g) {
        Word w{*g};
        while (at(Tok::Dot)) {
          next();
          Token gt = expect(Tok::Ident, "a generator name");
          std::optional<GenId> g2 = pres_.gen_id(gt.text);
          if (!g2)
            throw ParseError(gt.line, gt.col,
                             "unknown generator '" + gt.text + "'");
          w.push_back(*g2);
        }
        Val v;
        v.el = pres_.word(w);
        return v;
      }
      const auto& names = ps_->names();
      if (std::find(names.begin(), names.end(), t.text) != names.end()) {
        if (at(Tok::Dot))
          throw ParseError(peek().line, peek().col,
                           "'.' joins generators; '" + t.text + "' is a parameter");
        Val v;
        v.el = unit_scaled(Scalar::param(ps_, t.text));
        return v;
      }
      throw ParseError(t.line, t.col, "unknown symbol '" + t.text + "'");
    }
    throw ParseError(t.line, t.col,
                     std::string("expected an expression, found ") + tok_what(t.kind));
  }

  Element unit_scaled(const Scalar& s) const { return pres_.unit().scaled(s); }

  // The scalar content of a rank-1 value that is a multiple of the unit.
  static std::optional<Scalar> as_scalar(const Val& v) {
    if (v.rank != 1) return std::nullopt;
    if (v.el.is_zero()) return std::nullopt;
    if (v.el.term_count() != 1) return std::nullopt;
    const auto& [w, c] = *v.el.terms().begin();
    if (!w.empty()) return std::nullopt;
    return c;
  }

  Val scale(Val v, const Scalar& s) {
    if (v.rank == 1) {
      v.el = v.el.scaled(s);
    } else {
      for (TensorTerm& t : v.tt) t.coeff = t.coeff * s;
    }
    return v;
  }

  Val multiply(Val a, Val b, const Token& op) {
    if (a.rank == 1 && b.rank == 1) {
      Val v;
      v.el = a.el * b.el;
      return v;
    }
    if (a.rank == 1) {
      std::optional<Scalar> s = as_scalar(a);
      if (!s) throw ParseError(op.line, op.col,
                               "cannot multiply a tensor by a non-scalar element");
      return scale(std::move(b), *s);
    }
    if (b.rank == 1) {
      std::optional<Scalar> s = as_scalar(b);
      if (!s) throw ParseError(op.line, op.col,
                               "cannot multiply a tensor by a non-scalar element");
      return scale(std::move(a), *s);
    }
    throw ParseError(op.line, op.col, "tensor values cannot be multiplied");
  }

  bool at(Tok k) const { return toks_[idx_].kind == k; }
  const Token& peek() const { return toks_[idx_]; }
  Token next() { return toks_[idx_++]; }
  Token expect(Tok k, const char* what) {
    if (!at(k)) {
      const Token& t = peek();
      throw ParseError(t.line, t.col, std::string("expected ") + what + ", found " +
                                          tok_what(t.kind));
    }
    return next();
  }

  const std::vector<Token>& toks_;
  size_t& idx_;
  const Presentation& pres_;
  ParamSetPtr ps_;
};

// ------------------------------------------------------- document parser ---

class DocParser {
 public:
  explicit DocParser(const std::string& text) : toks_(lex(text)) {}

  DslDocument parse() {
    DslDocument doc;
    while (!at(Tok::End)) {
      Token head = expect(Tok::Ident, "a statement keyword");
      if (head.text == "params") {
        parse_params(doc, head);
      } else if (head.text == "algebra") {
        parse_algebra(doc);
      } else if (head.text == "coproduct" || head.text == "counit" ||
                 head.text == "antipode") {
        parse_map_block(doc, head.text);
      } else if (head.text == "braiding") {
        parse_braiding(doc);
      } else if (head.text == "check") {
        parse_check(doc);
      } else {
        throw ParseError(head.line, head.col,
                         "expected 'params', 'algebra', 'coproduct', 'counit', "
                         "'antipode', 'braiding', or 'check', found '" +
                             head.text + "'");
      }
    }
    if (!doc.params) doc.params = make_params({});
    return doc;
  }

 private:
  void parse_params(DslDocument& doc, const Token& head) {
    if (doc.params)
      throw ParseError(head.line, head.col, "duplicate 'params' statement");
    if (!doc.models.empty())
      throw ParseError(head.line, head.col,
                       "'params' must precede all algebra blocks");
    std::vector<std::string> names;
    for (;;) {
      Token n = expect(Tok::Ident, "a parameter name");
      if (n.text == "i")
        throw ParseError(n.line, n.col, "'i' is the imaginary unit and cannot be a parameter");
      if (std::find(names.begin(), names.end(), n.text) != names.end())
        throw ParseError(n.line, n.col, "duplicate parameter '" + n.text + "'");
      names.push_back(n.text);
      if (at(Tok::Comma)) {
        next();
        continue;
      }
      break;
    }
    expect(Tok::Semi, "';'");
    doc.params = make_params(std::move(names));
  }

  void parse_algebra(DslDocument& doc) {
    Token name = expect(Tok::Ident, "an algebra name");
    if (find_model(doc, name.text))
      throw ParseError(name.line, name.col, "duplicate algebra '" + name.text + "'");
    expect(Tok::LBrace, "'{'");
    if (!doc.params) doc.params = make_params({});

    std::vector<std::string> gens;
    std::vector<uint32_t> weights;
    std::optional<Presentation> pres;

    auto build = [&](const Token& where) {
      if (pres) return;
      if (gens.empty())
        throw ParseError(where.line, where.col,
                         "algebra '" + name.text + "' declares no generators");
      pres.emplace(name.text, doc.params, gens, weights);
    };

    while (!at(Tok::RBrace)) {
      Token item = expect(Tok::Ident, "'gens', 'order', or 'rule'");
      if (item.text == "gens") {
        if (!gens.empty())
          throw ParseError(item.line, item.col, "duplicate 'gens' item");
        if (pres)
          throw ParseError(item.line, item.col, "'gens' must precede rules");
        for (;;) {
          Token g = expect(Tok::Ident, "a generator name");
          if (g.text == "i")
            throw ParseError(g.line, g.col,
                             "'i' is the imaginary unit and cannot be a generator");
          if (std::find(gens.begin(), gens.end(), g.text) != gens.end())
            throw ParseError(g.line, g.col, "duplicate generator '" + g.text + "'");
          gens.push_back(g.text);
          uint32_t w = 1;
          if (at(Tok::Colon)) {
            next();
            Token wt = expect(Tok::Int, "a weight");
            w = static_cast<uint32_t>(std::stoul(wt.text));
            if (w == 0)
              throw ParseError(wt.line, wt.col, "generator weights must be positive");
          }
          weights.push_back(w);
          if (at(Tok::Comma)) {
            next();
            continue;
          }
          break;
        }
        expect(Tok::Semi, "';'");
      } else if (item.text == "order") {
        if (gens.empty())
          throw ParseError(item.line, item.col, "'order' must follow 'gens'");
        if (pres)
          throw ParseError(item.line, item.col, "'order' must precede rules");
        std::vector<std::string> order;
        std::vector<uint32_t> ow;
        for (;;) {
          Token g = expect(Tok::Ident, "a generator name");
          auto it = std::find(gens.begin(), gens.end(), g.text);
          if (it == gens.end())
            throw ParseError(g.line, g.col, "unknown generator '" + g.text + "'");
          if (std::find(order.begin(), order.end(), g.text) != order.end())
            throw ParseError(g.line, g.col,
                             "generator '" + g.text + "' listed twice in 'order'");
          order.push_back(g.text);
          ow.push_back(weights[static_cast<size_t>(it - gens.begin())]);
          if (at(Tok::Less)) {
            next();
            continue;
          }
          break;
        }
        Token semi = expect(Tok::Semi, "';'");
        if (order.size() != gens.size())
          throw ParseError(semi.line, semi.col,
                           "'order' must list every generator exactly once");
        gens = std::move(order);
        weights = std::move(ow);
      } else if (item.text == "rule") {
        build(item);
        Word lhs = parse_word(*pres);
        expect(Tok::Arrow, "'->'");
        if (at(Tok::Semi)) {
          const Token& t = peek();
          throw ParseError(t.line, t.col, "expected an expression, found ';'");
        }
        size_t idx = idx_;
        ExprParser ep(toks_, idx, *pres);
        Val rhs = ep.parse_expr();
        idx_ = idx;
        if (rhs.rank != 1)
          throw ParseError(item.line, item.col,
                           "a rule's right-hand side cannot be a tensor");
        expect(Tok::Semi, "';'");
        try {
          pres->add_rule(lhs, rhs.el);
        } catch (const Error& e) {
          throw ParseError(item.line, item.col, e.what());
        }
      } else {
        throw ParseError(item.line, item.col,
                         "expected 'gens', 'order', or 'rule', found '" + item.text +
                             "'");
      }
    }
    Token close = expect(Tok::RBrace, "'}'");
    build(close);
    doc.models.emplace_back(std::move(*pres));
  }

  // coproduct / counit / antipode blocks share the shape
  //   KEYWORD NAME { gen -> expr; ... }
  void parse_map_block(DslDocument& doc, const std::string& kind) {
    Token name = expect(Tok::Ident, "an algebra name");
    DslModel* m = find_model(doc, name.text);
    if (!m)
      throw ParseError(name.line, name.col, "unknown algebra '" + name.text + "'");
    const Presentation& p = m->pres;
    size_t n = p.ngens();

    bool present = (kind == "coproduct")  ? !m->coproduct.empty()
                   : (kind == "counit")   ? !m->counit.empty()
                                          : !m->antipode.empty();
    if (present)
      throw ParseError(name.line, name.col,
                       "duplicate '" + kind + "' block for '" + name.text + "'");

    std::vector<std::vector<TensorTerm>> cop(n);
    std::vector<Scalar> cu(n, Scalar::zero(doc.params));
    std::vector<Element> anti(n);
    std::vector<bool> seen(n, false);

    expect(Tok::LBrace, "'{'");
    while (!at(Tok::RBrace)) {
      Token g = expect(Tok::Ident, "a generator name");
      std::optional<GenId> gid = p.gen_id(g.text);
      if (!gid)
        throw ParseError(g.line, g.col, "unknown generator '" + g.text + "'");
      if (seen[*gid])
        throw ParseError(g.line, g.col,
                         "duplicate " + kind + " entry for '" + g.text + "'");
      seen[*gid] = true;
      expect(Tok::Arrow, "'->'");
      Token start = peek();
      size_t idx = idx_;
      ExprParser ep(toks_, idx, p);
      Val v = ep.parse_expr();
      idx_ = idx;
      expect(Tok::Semi, "';'");
      if (kind == "coproduct") {
        if (v.rank != 2)
          throw ParseError(start.line, start.col,
                           "a coproduct image must be a sum of tensors");
        cop[*gid] = std::move(v.tt);
      } else if (kind == "counit") {
        if (v.rank != 1)
          throw ParseError(start.line, start.col, "a counit value cannot be a tensor");
        if (v.el.is_zero()) {
          cu[*gid] = Scalar::zero(doc.params);
        } else if (v.el.term_count() == 1 && v.el.terms().begin()->first.empty()) {
          cu[*gid] = v.el.terms().begin()->second;
        } else {
          throw ParseError(start.line, start.col, "a counit value must be a scalar");
        }
      } else {
        if (v.rank != 1)
          throw ParseError(start.line, start.col,
                           "an antipode image cannot be a tensor");
        anti[*gid] = p.normal_form(v.el);
      }
    }
    Token close = expect(Tok::RBrace, "'}'");
    for (size_t g = 0; g < n; ++g)
      if (!seen[g])
        throw ParseError(close.line, close.col,
                         kind + " block for '" + name.text +
                             "' is missing generator '" + p.gen_name(g) + "'");
    if (kind == "coproduct")
      m->coproduct = std::move(cop);
    else if (kind == "counit")
      m->counit = std::move(cu);
    else
      m->antipode = std::move(anti);
  }

  void parse_braiding(DslDocument& doc) {
    Token name = expect(Tok::Ident, "an algebra name");
    DslModel* m = find_model(doc, name.text);
    if (!m)
      throw ParseError(name.line, name.col, "unknown algebra '" + name.text + "'");
    if (m->braiding)
      throw ParseError(name.line, name.col,
                       "duplicate 'braiding' block for '" + name.text + "'");
    const Presentation& p = m->pres;
    size_t n = p.ngens();

    BraidingTable psi;
    psi.entry.assign(n, std::vector<std::vector<std::tuple<GenId, GenId, Scalar>>>(n));
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));

    expect(Tok::LBrace, "'{'");
    while (!at(Tok::RBrace)) {
      Token g = expect(Tok::Ident, "a generator name");
      std::optional<GenId> gid = p.gen_id(g.text);
      if (!gid)
        throw ParseError(g.line, g.col, "unknown generator '" + g.text + "'");
      expect(Tok::Pipe, "'|'");
      Token h = expect(Tok::Ident, "a generator name");
      std::optional<GenId> hid = p.gen_id(h.text);
      if (!hid)
        throw ParseError(h.line, h.col, "unknown generator '" + h.text + "'");
      if (seen[*gid][*hid])
        throw ParseError(g.line, g.col, "duplicate braiding entry for '" + g.text +
                                            "|" + h.text + "'");
      seen[*gid][*hid] = true;
      expect(Tok::Arrow, "'->'");
      Token start = peek();
      size_t idx = idx_;
      ExprParser ep(toks_, idx, p);
      Val v = ep.parse_expr();
      idx_ = idx;
      expect(Tok::Semi, "';'");
      if (v.rank != 2)
        throw ParseError(start.line, start.col,
                         "a braiding image must be a sum of tensors");
      // Expand each tensor term into generator pairs and collect.
      std::map<std::pair<GenId, GenId>, Scalar> acc;
      for (const TensorTerm& t : v.tt) {
        for (const auto& [wl, cl] : t.left.terms())
          for (const auto& [wr, cr] : t.right.terms()) {
            if (wl.size() != 1 || wr.size() != 1)
              throw ParseError(start.line, start.col,
                               "a braiding image must be a sum of generator|generator "
                               "terms");
            Scalar c = t.coeff * cl * cr;
            auto key = std::make_pair(wl[0], wr[0]);
            auto it = acc.find(key);
            if (it == acc.end())
              acc.emplace(key, c);
            else
              it->second = it->second + c;
          }
      }
      for (const auto& [key, c] : acc)
        if (!c.is_zero()) psi.entry[*gid][*hid].push_back({key.first, key.second, c});
    }
    Token close = expect(Tok::RBrace, "'}'");
    for (size_t g = 0; g < n; ++g)
      for (size_t h = 0; h < n; ++h)
        if (!seen[g][h])
          throw ParseError(close.line, close.col,
                           "braiding block for '" + name.text +
                               "' is missing entry '" + p.gen_name(g) + "|" +
                               p.gen_name(h) + "'");
    m->braiding = std::move(psi);
  }

  void parse_check(DslDocument& doc) {
    Token n = expect(Tok::Ident, "a check name");
    std::string name = n.text;
    while (at(Tok::Minus)) {
      next();
      Token part = expect(Tok::Ident, "a check name");
      name += "-" + part.text;
    }
    CheckDirective d;
    d.name = std::move(name);
    if (at(Tok::Ident) && peek().text == "degree") {
      next();
      Token deg = expect(Tok::Int, "a degree bound");
      d.degree = static_cast<int>(std::stol(deg.text));
    }
    expect(Tok::Semi, "';'");
    doc.checks.push_back(std::move(d));
  }

  Word parse_word(const Presentation& p) {
    Word w;
    for (;;) {
      Token g = expect(Tok::Ident, "a generator name");
      std::optional<GenId> gid = p.gen_id(g.text);
      if (!gid)
        throw ParseError(g.line, g.col, "unknown generator '" + g.text + "'");
      w.push_back(*gid);
      if (at(Tok::Dot)) {
        next();
        continue;
      }
      break;
    }
    return w;
  }

  static DslModel* find_model(DslDocument& doc, const std::string& name) {
    for (DslModel& m : doc.models)
      if (m.pres.name() == name) return &m;
    return nullptr;
  }

  bool at(Tok k) const { return toks_[idx_].kind == k; }
  const Token& peek() const { return toks_[idx_]; }
  Token next() { return toks_[idx_++]; }
  Token expect(Tok k, const char* what) {
    if (!at(k)) {
      const Token& t = peek();
      throw ParseError(t.line, t.col, std::string("expected ") + what + ", found " +
                                          tok_what(t.kind));
    }
    return next();
  }

  std::vector<Token> toks_;
  size_t idx_ = 0;
};

// ---------------------------------------------------------------- printer ---

// A tensor leg, parenthesized whenever its expression form would not bind
// as one tensor factor.
std::string leg_str(const Presentation& p, const Element& e) {
  std::string s = p.element_str(e);
  if (e.term_count() > 1) return "(" + s + ")";
  return s;
}

// One tensor term with its coefficient folded into the left leg; returns
// the sign separately so sums can join terms with " + " / " - ".
std::pair<bool, std::string> tensor_term_str(const Presentation& p,
                                             const TensorTerm& t) {
  Element left = t.left.scaled(t.coeff);
  bool neg = false;
  if (left.term_count() == 1) {
    std::string s = p.element_str(left);
    if (!s.empty() && s[0] == '-') {
      neg = true;
      left = -left;
    }
  }
  return {neg, leg_str(p, left) + "|" + leg_str(p, t.right)};
}

std::string tensor_sum_str(const Presentation& p, const std::vector<TensorTerm>& ts) {
  if (ts.empty()) return "0|0";
  std::string out;
  bool first = true;
  for (const TensorTerm& t : ts) {
    auto [neg, body] = tensor_term_str(p, t);
    if (first) {
      out = (neg ? "-" : "") + body;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out;
}

std::string scalar_expr_str(const Scalar& s) {
  auto atom = s.signed_atom();
  if (atom) return (atom->first ? "-" : "") + atom->second;
  return s.str();
}

std::string braid_rhs_str(const Presentation& p,
                          std::vector<std::tuple<GenId, GenId, Scalar>> terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return std::make_pair(std::get<0>(a), std::get<1>(a)) <
           std::make_pair(std::get<0>(b), std::get<1>(b));
  });
  std::string out;
  bool first = true;
  for (const auto& [g2, h2, c] : terms) {
    std::string pair = p.gen_name(g2) + "|" + p.gen_name(h2);
    bool neg = false;
    std::string body;
    auto atom = c.signed_atom();
    if (atom) {
      neg = atom->first;
      body = (atom->second == "1") ? pair : atom->second + "*" + pair;
    } else {
      body = "(" + c.str() + ")*" + pair;
    }
    if (first) {
      out = (neg ? "-" : "") + body;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  if (out.empty()) out = "0*" + p.gen_name(0) + "|" + p.gen_name(0);
  return out;
}

}  // namespace

const DslModel* DslDocument::find(const std::string& name) const {
  for (const DslModel& m : models)
    if (m.pres.name() == name) return &m;
  return nullptr;
}

DslDocument parse_dsl(const std::string& text) { return DocParser(text).parse(); }

std::string print_dsl(const DslDocument& doc) {
  std::string out;
  const auto& pnames = doc.params ? doc.params->names() : std::vector<std::string>{};
  if (!pnames.empty()) {
    out += "params ";
    for (size_t k = 0; k < pnames.size(); ++k) {
      if (k) out += ", ";
      out += pnames[k];
    }
    out += ";\n";
  }
  bool blank = !pnames.empty();
  auto sep = [&] {
    if (blank) out += "\n";
    blank = true;
  };
  for (const DslModel& m : doc.models) {
    const Presentation& p = m.pres;
    sep();
    out += "algebra " + p.name() + " {\n  gens ";
    for (size_t g = 0; g < p.ngens(); ++g) {
      if (g) out += ", ";
      out += p.gen_name(g);
      if (p.gen_weights()[g] != 1) out += ":" + std::to_string(p.gen_weights()[g]);
    }
    out += ";\n  order ";
    for (size_t g = 0; g < p.ngens(); ++g) {
      if (g) out += " < ";
      out += p.gen_name(g);
    }
    out += ";\n";
    for (const RewriteRule& r : p.rules()) {
      out += "  rule " + word_str(r.lhs, p.gen_names()) + " -> " +
             p.element_str(r.rhs) + ";\n";
    }
    out += "}\n";
    if (!m.coproduct.empty()) {
      sep();
      out += "coproduct " + p.name() + " {\n";
      for (size_t g = 0; g < p.ngens(); ++g)
        out += "  " + p.gen_name(g) + " -> " + tensor_sum_str(p, m.coproduct[g]) +
               ";\n";
      out += "}\n";
    }
    if (!m.counit.empty()) {
      sep();
      out += "counit " + p.name() + " {\n";
      for (size_t g = 0; g < p.ngens(); ++g)
        out += "  " + p.gen_name(g) + " -> " + scalar_expr_str(m.counit[g]) + ";\n";
      out += "}\n";
    }
    if (!m.antipode.empty()) {
      sep();
      out += "antipode " + p.name() + " {\n";
      for (size_t g = 0; g < p.ngens(); ++g)
        out += "  " + p.gen_name(g) + " -> " + p.element_str(m.antipode[g]) + ";\n";
      out += "}\n";
    }
    if (m.braiding) {
      sep();
      out += "braiding " + p.name() + " {\n";
      for (size_t g = 0; g < p.ngens(); ++g)
        for (size_t h = 0; h < p.ngens(); ++h)
          out += "  " + p.gen_name(g) + "|" + p.gen_name(h) + " -> " +
                 braid_rhs_str(p, m.braiding->entry[g][h]) + ";\n";
      out += "}\n";
    }
  }
  if (!doc.checks.empty()) {
    sep();
    for (const CheckDirective& c : doc.checks) {
      out += "check " + c.name;
      if (c.degree >= 0) out += " degree " + std::to_string(c.degree);
      out += ";\n";
    }
  }
  return out;
}

Element parse_element(const Presentation& p, const std::string& text) {
  std::vector<Token> toks = lex(text);
  size_t idx = 0;
  ExprParser ep(toks, idx, p);
  Val v = ep.parse_expr();
  if (toks[idx].kind != Tok::End)
    throw ParseError(toks[idx].line, toks[idx].col,
                     std::string("unexpected ") + tok_what(toks[idx].kind) +
                         " after the expression");
  if (v.rank != 1)
    throw ParseError(toks[0].line, toks[0].col,
                     "expected a plain element, found a tensor expression");
  return v.el;
}

nlohmann::ordered_json element_json(const Presentation& p, const Element& e) {
  std::vector<std::pair<Word, Scalar>> ts(e.terms().begin(), e.terms().end());
  std::sort(ts.begin(), ts.end(), [&p](const auto& a, const auto& b) {
    return p.word_less(b.first, a.first);
  });
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& [w, c] : ts) {
    nlohmann::ordered_json word = nlohmann::ordered_json::array();
    for (GenId g : w) word.push_back(p.gen_name(g));
    out.push_back({{"word", word}, {"coeff", c.str()}});
  }
  return out;
}

namespace {

// Tensor-term lists compare after expanding leg products, so that the
// same map written with different coefficient placement is still equal.
std::map<std::pair<Word, Word>, Scalar> tensor_map(const std::vector<TensorTerm>& ts) {
  std::map<std::pair<Word, Word>, Scalar> acc;
  for (const TensorTerm& t : ts)
    for (const auto& [wl, cl] : t.left.terms())
      for (const auto& [wr, cr] : t.right.terms()) {
        Scalar c = t.coeff * cl * cr;
        auto key = std::make_pair(wl, wr);
        auto it = acc.find(key);
        if (it == acc.end())
          acc.emplace(key, c);
        else
          it->second = it->second + c;
      }
  for (auto it = acc.begin(); it != acc.end();)
    it = it->second.is_zero() ? acc.erase(it) : std::next(it);
  return acc;
}

std::map<std::pair<GenId, GenId>, Scalar> braid_map(
    const std::vector<std::tuple<GenId, GenId, Scalar>>& terms) {
  std::map<std::pair<GenId, GenId>, Scalar> acc;
  for (const auto& [g2, h2, c] : terms) {
    auto key = std::make_pair(g2, h2);
    auto it = acc.find(key);
    if (it == acc.end())
      acc.emplace(key, c);
    else
      it->second = it->second + c;
  }
  for (auto it = acc.begin(); it != acc.end();)
    it = it->second.is_zero() ? acc.erase(it) : std::next(it);
  return acc;
}

}  // namespace

bool models_equal(const DslModel& a, const DslModel& b) {
  const Presentation& pa = a.pres;
  const Presentation& pb = b.pres;
  if (pa.gen_names() != pb.gen_names()) return false;
  if (pa.gen_weights() != pb.gen_weights()) return false;
  if (pa.rules().size() != pb.rules().size()) return false;
  for (size_t k = 0; k < pa.rules().size(); ++k) {
    if (pa.rules()[k].lhs != pb.rules()[k].lhs) return false;
    if (pa.rules()[k].rhs != pb.rules()[k].rhs) return false;
  }
  if (a.coproduct.size() != b.coproduct.size()) return false;
  for (size_t g = 0; g < a.coproduct.size(); ++g)
    if (tensor_map(a.coproduct[g]) != tensor_map(b.coproduct[g])) return false;
  if (a.counit != b.counit) return false;
  if (a.antipode.size() != b.antipode.size()) return false;
  for (size_t g = 0; g < a.antipode.size(); ++g)
    if (a.antipode[g] != b.antipode[g]) return false;
  if (a.braiding.has_value() != b.braiding.has_value()) return false;
  if (a.braiding) {
    if (a.braiding->ngens() != b.braiding->ngens()) return false;
    for (size_t g = 0; g < a.braiding->ngens(); ++g)
      for (size_t h = 0; h < a.braiding->ngens(); ++h)
        if (braid_map(a.braiding->entry[g][h]) != braid_map(b.braiding->entry[g][h]))
          return false;
  }
  return true;
}

}  // namespace qgeo
