#include "liepres/relation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "liepres/errors.hpp"

namespace liepres {

// ---------------------------------------------------------------------------
// Coefficient trees
// ---------------------------------------------------------------------------

CoefPtr CoefExpr::num(const Rational& v) {
  auto e = std::make_shared<CoefExpr>();
  e->kind = Kind::Num;
  e->value = v;
  return e;
}

CoefPtr CoefExpr::symbol(CoefSym s) {
  auto e = std::make_shared<CoefExpr>();
  e->kind = Kind::Sym;
  e->sym = s;
  return e;
}

CoefPtr CoefExpr::unknown(std::string name) {
  auto e = std::make_shared<CoefExpr>();
  e->kind = Kind::Unknown;
  e->name = std::move(name);
  return e;
}

CoefPtr CoefExpr::node(Kind k, CoefPtr a, CoefPtr b) {
  auto e = std::make_shared<CoefExpr>();
  e->kind = k;
  e->a = std::move(a);
  e->b = std::move(b);
  return e;
}

bool coef_equal(const CoefPtr& a, const CoefPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case CoefExpr::Kind::Num:
      return a->value == b->value;
    case CoefExpr::Kind::Sym:
      return a->sym == b->sym;
    case CoefExpr::Kind::Unknown:
      return a->name == b->name;
    case CoefExpr::Kind::Neg:
      return coef_equal(a->a, b->a);
    default:
      return coef_equal(a->a, b->a) && coef_equal(a->b, b->b);
  }
}

bool coef_has_unknown(const CoefPtr& c, std::vector<std::string>* names) {
  if (!c) return false;
  if (c->kind == CoefExpr::Kind::Unknown) {
    if (names && std::find(names->begin(), names->end(), c->name) == names->end()) {
      names->push_back(c->name);
    }
    return true;
  }
  bool found = coef_has_unknown(c->a, names);
  // Evaluate both branches so `names` collects everything.
  bool found_b = coef_has_unknown(c->b, names);
  return found || found_b;
}

namespace {

// Printing precedence: additive 1, multiplicative 2, power 3, atom 4.
int coef_prec(const CoefExpr& e) {
  switch (e.kind) {
    case CoefExpr::Kind::Add:
    case CoefExpr::Kind::Sub:
    case CoefExpr::Kind::Neg:
      return 1;
    case CoefExpr::Kind::Mul:
    case CoefExpr::Kind::Div:
      return 2;
    case CoefExpr::Kind::Pow:
      return 3;
    case CoefExpr::Kind::Num:
    case CoefExpr::Kind::Sym:
    case CoefExpr::Kind::Unknown:
      return 4;
  }
  return 4;
}

const char* sym_name(CoefSym s) {
  switch (s) {
    case CoefSym::t:
      return "t";
    case CoefSym::lambda:
      return "lambda";
    case CoefSym::n:
      return "n";
  }
  return "?";
}

void print_coef_rec(const CoefExpr& e, int min_prec, std::string& out) {
  bool parens = coef_prec(e) < min_prec;
  if (parens) out += '(';
  switch (e.kind) {
    case CoefExpr::Kind::Num: {
      std::string s = e.value.to_string();
      // A negative literal is an atom, but gluing "-" against an operator
      // would be unreadable; parenthesize when embedded.
      if (e.value.sign() < 0 && min_prec > 1 && !parens) {
        out += '(';
        out += s;
        out += ')';
      } else {
        out += s;
      }
      break;
    }
    case CoefExpr::Kind::Sym:
      out += sym_name(e.sym);
      break;
    case CoefExpr::Kind::Unknown:
      out += e.name;
      break;
    case CoefExpr::Kind::Add:
      print_coef_rec(*e.a, 1, out);
      out += '+';
      print_coef_rec(*e.b, 2, out);
      break;
    case CoefExpr::Kind::Sub:
      print_coef_rec(*e.a, 1, out);
      out += '-';
      print_coef_rec(*e.b, 2, out);
      break;
    case CoefExpr::Kind::Mul:
      print_coef_rec(*e.a, 2, out);
      out += '*';
      print_coef_rec(*e.b, 2, out);
      break;
    case CoefExpr::Kind::Div:
      print_coef_rec(*e.a, 2, out);
      out += '/';
      print_coef_rec(*e.b, 3, out);
      break;
    case CoefExpr::Kind::Neg:
      out += '-';
      print_coef_rec(*e.a, 2, out);
      break;
    case CoefExpr::Kind::Pow:
      print_coef_rec(*e.a, 4, out);
      out += '^';
      if (e.b->kind == CoefExpr::Kind::Num && e.b->value.is_integer() &&
          e.b->value.sign() >= 0) {
        out += e.b->value.to_string();
      } else {
        out += '(';
        print_coef_rec(*e.b, 1, out);
        out += ')';
      }
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string print_coef(const CoefPtr& c) {
  std::string out;
  if (c) print_coef_rec(*c, 1, out);
  return out;
}

MultiPoly eval_coef(const CoefPtr& c, const CoefEnv& env) {
  if (!c) return MultiPoly::constant(Rational(1));
  switch (c->kind) {
    case CoefExpr::Kind::Num:
      return MultiPoly::constant(c->value);
    case CoefExpr::Kind::Sym:
      switch (c->sym) {
        case CoefSym::t:
          return MultiPoly::variable(Var::t);
        case CoefSym::lambda:
          return MultiPoly::variable(Var::lambda);
        case CoefSym::n:
          if (!env.n) throw UnboundParameter("coefficient mentions n but no rank is bound");
          return MultiPoly::constant(*env.n);
      }
      break;
    case CoefExpr::Kind::Unknown:
      throw UnboundParameter("unknown coefficient '" + c->name +
                             "' (run the recovery solver to determine it)");
    case CoefExpr::Kind::Add:
      return eval_coef(c->a, env) + eval_coef(c->b, env);
    case CoefExpr::Kind::Sub:
      return eval_coef(c->a, env) - eval_coef(c->b, env);
    case CoefExpr::Kind::Mul:
      return eval_coef(c->a, env) * eval_coef(c->b, env);
    case CoefExpr::Kind::Div: {
      MultiPoly num = eval_coef(c->a, env);
      MultiPoly den = eval_coef(c->b, env);
      if (den.is_zero()) throw Error("coefficient divides by zero");
      if (den.is_constant()) return num * (Rational(1) / den.as_constant());
      return MultiPoly::divide_exact(num, den);
    }
    case CoefExpr::Kind::Neg:
      return -eval_coef(c->a, env);
    case CoefExpr::Kind::Pow: {
      long e = eval_coef_integer(c->b, env);
      return eval_coef(c->a, env).pow(static_cast<unsigned>(e));
    }
  }
  throw Error("eval_coef: unreachable");
}

long eval_coef_integer(const CoefPtr& c, const CoefEnv& env) {
  MultiPoly p = eval_coef(c, env);
  if (!p.is_constant()) {
    throw UnboundParameter("exponent '" + print_coef(c) + "' does not reduce to a number");
  }
  Rational v = p.as_constant();
  if (!v.is_integer() || v.sign() < 0) {
    throw Error("exponent '" + print_coef(c) + "' = " + v.to_string() +
                " is not a nonnegative integer");
  }
  return static_cast<long>(v.numerator().get_si());
}

// ---------------------------------------------------------------------------
// Words
// ---------------------------------------------------------------------------

WordPtr Word::generator(char g) {
  auto w = std::make_shared<Word>();
  w->kind = Kind::Gen;
  w->gen = g;
  return w;
}

WordPtr Word::z_index(int i) {
  if (i == 0) return generator('z');
  auto w = std::make_shared<Word>();
  w->kind = Kind::ZIndex;
  w->index = i;
  return w;
}

WordPtr Word::bracket(WordPtr l, WordPtr r) {
  auto w = std::make_shared<Word>();
  w->kind = Kind::Bracket;
  w->left = std::move(l);
  w->right = std::move(r);
  return w;
}

WordPtr Word::ad_power(WordPtr base, CoefPtr exp, WordPtr arg) {
  auto w = std::make_shared<Word>();
  w->kind = Kind::Ad;
  w->left = std::move(base);
  w->right = std::move(arg);
  w->exp = std::move(exp);
  return w;
}

bool word_equal(const WordPtr& a, const WordPtr& b) { return word_compare(a, b) == 0; }

namespace {

int leaf_rank(const Word& w) {
  if (w.kind == Word::Kind::ZIndex) return 3 + w.index;
  switch (w.gen) {
    case 'x':
      return 0;
    case 'y':
      return 1;
    case 'h':
      return 2;
    case 'z':
      return 3;
  }
  return 100;
}

int kind_rank(const Word& w) {
  switch (w.kind) {
    case Word::Kind::Gen:
    case Word::Kind::ZIndex:
      return 0;
    case Word::Kind::Bracket:
      return 1;
    case Word::Kind::Ad:
      return 2;
  }
  return 3;
}

}  // namespace

int word_compare(const WordPtr& a, const WordPtr& b) {
  if (a == b) return 0;
  if (!a || !b) return a ? 1 : -1;
  int ka = kind_rank(*a), kb = kind_rank(*b);
  if (ka != kb) return ka < kb ? -1 : 1;
  switch (a->kind) {
    case Word::Kind::Gen:
    case Word::Kind::ZIndex: {
      int ra = leaf_rank(*a), rb = leaf_rank(*b);
      return ra == rb ? 0 : (ra < rb ? -1 : 1);
    }
    case Word::Kind::Bracket: {
      int c = word_compare(a->left, b->left);
      if (c != 0) return c;
      return word_compare(a->right, b->right);
    }
    case Word::Kind::Ad: {
      int c = word_compare(a->left, b->left);
      if (c != 0) return c;
      c = word_compare(a->right, b->right);
      if (c != 0) return c;
      return print_coef(a->exp).compare(print_coef(b->exp));
    }
  }
  return 0;
}

std::string print_word(const WordPtr& w) {
  if (!w) return "";
  switch (w->kind) {
    case Word::Kind::Gen:
      return std::string(1, w->gen);
    case Word::Kind::ZIndex:
      return "z" + std::to_string(w->index);
    case Word::Kind::Bracket:
      return "[" + print_word(w->left) + "," + print_word(w->right) + "]";
    case Word::Kind::Ad: {
      std::string e;
      if (w->exp->kind == CoefExpr::Kind::Num && w->exp->value.is_integer() &&
          w->exp->value.sign() >= 0) {
        e = w->exp->value.to_string();
      } else {
        e = "(" + print_coef(w->exp) + ")";
      }
      return "(ad " + print_word(w->left) + ")^" + e + " " + print_word(w->right);
    }
  }
  return "";
}

int word_z_count(const WordPtr& w) {
  if (!w) return 0;
  switch (w->kind) {
    case Word::Kind::Gen:
      return w->gen == 'z' ? 1 : 0;
    case Word::Kind::ZIndex:
      return 1;
    case Word::Kind::Bracket: {
      int l = word_z_count(w->left), r = word_z_count(w->right);
      return (l < 0 || r < 0) ? -1 : l + r;
    }
    case Word::Kind::Ad: {
      int l = word_z_count(w->left), r = word_z_count(w->right);
      if (l < 0 || r < 0) return -1;
      if (l == 0) return r;  // symbolic exponent does not matter then
      if (w->exp->kind == CoefExpr::Kind::Num && w->exp->value.is_integer()) {
        return l * static_cast<int>(w->exp->value.numerator().get_si()) + r;
      }
      return -1;
    }
  }
  return 0;
}

WordPtr expand_ad(const WordPtr& w, const CoefEnv& env) {
  if (!w) return w;
  switch (w->kind) {
    case Word::Kind::Gen:
    case Word::Kind::ZIndex:
      return w;
    case Word::Kind::Bracket:
      return Word::bracket(expand_ad(w->left, env), expand_ad(w->right, env));
    case Word::Kind::Ad: {
      long e = eval_coef_integer(w->exp, env);
      WordPtr base = expand_ad(w->left, env);
      WordPtr acc = expand_ad(w->right, env);
      for (long i = 0; i < e; ++i) acc = Word::bracket(base, acc);
      return acc;
    }
  }
  return w;
}

NormalizedWord normalize_word(const WordPtr& w) {
  NormalizedWord out;
  out.word = w;
  if (!w) return out;
  switch (w->kind) {
    case Word::Kind::Gen:
    case Word::Kind::ZIndex:
      return out;
    case Word::Kind::Bracket: {
      NormalizedWord l = normalize_word(w->left);
      NormalizedWord r = normalize_word(w->right);
      if (l.vanishes || r.vanishes) {
        out.vanishes = true;
        return out;
      }
      int cmp = word_compare(l.word, r.word);
      if (cmp == 0) {
        out.vanishes = true;  // [w, w] = 0
        return out;
      }
      if (cmp > 0) {
        out.word = Word::bracket(r.word, l.word);
        out.sign = -l.sign * r.sign;
      } else {
        out.word = Word::bracket(l.word, r.word);
        out.sign = l.sign * r.sign;
      }
      return out;
    }
    case Word::Kind::Ad: {
      // Integer powers expand to brackets; symbolic ones stay atoms with
      // normalized children.
      if (w->exp->kind == CoefExpr::Kind::Num && w->exp->value.is_integer() &&
          w->exp->value.sign() >= 0) {
        return normalize_word(expand_ad(w, CoefEnv{}));
      }
      NormalizedWord l = normalize_word(w->left);
      NormalizedWord r = normalize_word(w->right);
      if (l.vanishes || r.vanishes) {
        out.vanishes = true;
        return out;
      }
      out.word = Word::ad_power(l.word, w->exp, r.word);
      out.sign = l.sign * r.sign;
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Relations: structure queries
// ---------------------------------------------------------------------------

int Relation::z_count() const {
  int best = 0;
  for (const auto* side : {&lhs, &rhs}) {
    for (const Term& t : *side) {
      int c = word_z_count(t.word);
      if (c < 0) return -1;
      best = std::max(best, c);
    }
  }
  return best;
}

bool Relation::has_unknowns(std::vector<std::string>* names) const {
  bool found = false;
  for (const auto* side : {&lhs, &rhs}) {
    for (const Term& t : *side) {
      if (coef_has_unknown(t.coeff, names)) found = true;
    }
  }
  return found;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

struct Token {
  enum class Kind {
    Int,
    Ident,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Equals,
    End
  };
  Kind kind;
  std::string text;
  size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(&s) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    const std::string& s = *s_;
    while (pos_ < s.size() &&
           (s[pos_] == ' ' || s[pos_] == '\t' || s[pos_] == '\r' || s[pos_] == '\n')) {
      ++pos_;
    }
    tok_.pos = pos_;
    if (pos_ >= s.size() || s[pos_] == '#') {  // '#' comments out the rest
      tok_.kind = Token::Kind::End;
      tok_.text.clear();
      return;
    }
    char c = s[pos_];
    auto single = [&](Token::Kind k) {
      tok_.kind = k;
      tok_.text = std::string(1, c);
      ++pos_;
    };
    switch (c) {
      case '+':
        return single(Token::Kind::Plus);
      case '-':
        return single(Token::Kind::Minus);
      case '*':
        return single(Token::Kind::Star);
      case '/':
        return single(Token::Kind::Slash);
      case '^':
        return single(Token::Kind::Caret);
      case '(':
        return single(Token::Kind::LParen);
      case ')':
        return single(Token::Kind::RParen);
      case '[':
        return single(Token::Kind::LBracket);
      case ']':
        return single(Token::Kind::RBracket);
      case ',':
        return single(Token::Kind::Comma);
      case '=':
        return single(Token::Kind::Equals);
      default:
        break;
    }
    if (c >= '0' && c <= '9') {
      size_t start = pos_;
      while (pos_ < s.size() && s[pos_] >= '0' && s[pos_] <= '9') ++pos_;
      tok_.kind = Token::Kind::Int;
      tok_.text = s.substr(start, pos_ - start);
      return;
    }
    // UTF-8 Greek lambda is accepted as an alias for the ASCII spelling.
    if (pos_ + 1 < s.size() && static_cast<unsigned char>(c) == 0xCE &&
        static_cast<unsigned char>(s[pos_ + 1]) == 0xBB) {
      pos_ += 2;
      tok_.kind = Token::Kind::Ident;
      tok_.text = "lambda";
      return;
    }
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
      size_t start = pos_;
      while (pos_ < s.size() &&
             ((s[pos_] >= 'a' && s[pos_] <= 'z') || (s[pos_] >= 'A' && s[pos_] <= 'Z') ||
              (s[pos_] >= '0' && s[pos_] <= '9') || s[pos_] == '_')) {
        ++pos_;
      }
      tok_.kind = Token::Kind::Ident;
      tok_.text = s.substr(start, pos_ - start);
      return;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
  }

  const std::string* s_;
  size_t pos_ = 0;
  Token tok_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  Relation parse() {
    Relation rel;
    rel.lhs = parse_side();
    expect(Token::Kind::Equals, "expected '='");
    rel.rhs = parse_side();
    if (lex_.peek().kind != Token::Kind::End) {
      throw SyntaxError("unexpected trailing input", lex_.peek().pos);
    }
    return rel;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(msg, lex_.peek().pos); }

  Token expect(Token::Kind k, const std::string& msg) {
    if (lex_.peek().kind != k) fail(msg);
    return lex_.take();
  }

  bool side_terminator() const {
    auto k = lex_.peek().kind;
    return k == Token::Kind::Equals || k == Token::Kind::End || k == Token::Kind::Comma ||
           k == Token::Kind::RBracket;
  }

  std::vector<Term> parse_side() {
    // A side that is literally "0" is the empty term list.
    if (lex_.peek().kind == Token::Kind::Int && lex_.peek().text == "0") {
      Lexer save = lex_;
      lex_.take();
      if (side_terminator()) return {};
      lex_ = save;  // "0" was the start of a coefficient like 0*... ; reparse
    }
    std::vector<Term> terms;
    bool neg = false;
    if (lex_.peek().kind == Token::Kind::Minus) {
      lex_.take();
      neg = true;
    }
    while (true) {
      for (Term& t : parse_term(neg)) terms.push_back(std::move(t));
      if (lex_.peek().kind == Token::Kind::Plus) {
        lex_.take();
        neg = false;
      } else if (lex_.peek().kind == Token::Kind::Minus) {
        lex_.take();
        neg = true;
      } else {
        break;
      }
    }
    return terms;
  }

  static bool is_word_ident(const std::string& s) {
    if (s == "x" || s == "y" || s == "z" || s == "h") return true;
    if (s.size() > 1 && s[0] == 'z') {
      return std::all_of(s.begin() + 1, s.end(), [](char c) { return c >= '0' && c <= '9'; });
    }
    return false;
  }

  // Does the current token open a bracket word?
  bool at_word_start() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::LBracket) return true;
    if (t.kind == Token::Kind::Ident) return is_word_ident(t.text) || t.text == "ad";
    if (t.kind == Token::Kind::LParen) {
      Lexer save = lex_;
      lex_.take();
      bool ad = lex_.peek().kind == Token::Kind::Ident && lex_.peek().text == "ad";
      lex_ = save;
      return ad;
    }
    return false;
  }

  static bool is_scalar_ident(const std::string& s) {
    return s == "t" || s == "lambda" || s == "n";
  }

  // One written term, already distributed over sums inside brackets.
  std::vector<Term> parse_term(bool negative) {
    CoefPtr coeff;
    // If the coefficient swallowed a bare identifier and no word follows, the
    // identifier was almost certainly a misspelled generator; say so.
    std::string swallowed;
    size_t swallowed_pos = 0;
    auto mul_into = [&](const CoefPtr& atom) {
      coeff = coeff ? CoefExpr::node(CoefExpr::Kind::Mul, coeff, atom) : atom;
    };
    while (!at_word_start()) {
      const Token& t = lex_.peek();
      if (t.kind == Token::Kind::Int || t.kind == Token::Kind::Ident ||
          t.kind == Token::Kind::LParen) {
        if (t.kind == Token::Kind::Ident && !is_scalar_ident(t.text)) {
          swallowed = t.text;
          swallowed_pos = t.pos;
        }
        CoefPtr atom = parse_coef_factor();
        if (lex_.peek().kind == Token::Kind::Slash) {
          lex_.take();
          atom = CoefExpr::node(CoefExpr::Kind::Div, atom, parse_coef_factor());
        }
        mul_into(atom);
        if (lex_.peek().kind == Token::Kind::Star) lex_.take();  // optional
        continue;
      }
      if (coeff) {
        if (!swallowed.empty()) {
          throw UnknownSymbol("'" + swallowed + "' is not a generator (at byte " +
                              std::to_string(swallowed_pos) + ")");
        }
        fail("expected a bracket word after the coefficient");
      }
      fail("expected a term");
    }
    std::vector<Term> combo = parse_word_combo();
    if (combo.empty()) return {};  // bracket against zero: the term drops out
    for (Term& t : combo) {
      t.negative = t.negative != negative;
      if (coeff) {
        t.coeff = t.coeff ? CoefExpr::node(CoefExpr::Kind::Mul, coeff, t.coeff) : coeff;
      }
    }
    return combo;
  }

  // --- coefficients ---------------------------------------------------------

  CoefPtr parse_coef_expr() {  // full grammar, inside parentheses
    CoefPtr lhs = parse_coef_product();
    while (true) {
      if (lex_.peek().kind == Token::Kind::Plus) {
        lex_.take();
        lhs = CoefExpr::node(CoefExpr::Kind::Add, lhs, parse_coef_product());
      } else if (lex_.peek().kind == Token::Kind::Minus) {
        lex_.take();
        lhs = CoefExpr::node(CoefExpr::Kind::Sub, lhs, parse_coef_product());
      } else {
        return lhs;
      }
    }
  }

  CoefPtr parse_coef_product() {
    bool neg = false;
    while (lex_.peek().kind == Token::Kind::Minus) {
      lex_.take();
      neg = !neg;
    }
    CoefPtr lhs = parse_coef_factor();
    while (true) {
      if (lex_.peek().kind == Token::Kind::Star) {
        lex_.take();
        lhs = CoefExpr::node(CoefExpr::Kind::Mul, lhs, parse_coef_factor());
      } else if (lex_.peek().kind == Token::Kind::Slash) {
        lex_.take();
        lhs = CoefExpr::node(CoefExpr::Kind::Div, lhs, parse_coef_factor());
      } else if (lex_.peek().kind == Token::Kind::Int ||
                 lex_.peek().kind == Token::Kind::Ident ||
                 lex_.peek().kind == Token::Kind::LParen) {
        lhs = CoefExpr::node(CoefExpr::Kind::Mul, lhs, parse_coef_factor());  // juxtaposition
      } else {
        break;
      }
    }
    return neg ? CoefExpr::node(CoefExpr::Kind::Neg, lhs, nullptr) : lhs;
  }

  CoefPtr parse_coef_factor() {
    CoefPtr base = parse_coef_atom();
    if (lex_.peek().kind == Token::Kind::Caret) {
      lex_.take();
      base = CoefExpr::node(CoefExpr::Kind::Pow, base, parse_exponent());
    }
    return base;
  }

  CoefPtr parse_exponent() {
    if (lex_.peek().kind == Token::Kind::Int) {
      return CoefExpr::num(Rational(lex_.take().text));
    }
    if (lex_.peek().kind == Token::Kind::LParen) {
      lex_.take();
      CoefPtr e = parse_coef_expr();
      expect(Token::Kind::RParen, "expected ')' closing the exponent");
      return e;
    }
    fail("expected an integer or parenthesized exponent after '^'");
  }

  CoefPtr parse_coef_atom() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::Int) {
      Token tok = lex_.take();
      // Fold integer/integer into one rational literal.
      if (lex_.peek().kind == Token::Kind::Slash) {
        Lexer save = lex_;
        lex_.take();
        if (lex_.peek().kind == Token::Kind::Int) {
          Token den = lex_.take();
          return CoefExpr::num(Rational(tok.text + "/" + den.text));
        }
        lex_ = save;
      }
      return CoefExpr::num(Rational(tok.text));
    }
    if (t.kind == Token::Kind::Ident) {
      Token tok = lex_.take();
      if (tok.text == "t") return CoefExpr::symbol(CoefSym::t);
      if (tok.text == "lambda") return CoefExpr::symbol(CoefSym::lambda);
      if (tok.text == "n") return CoefExpr::symbol(CoefSym::n);
      if (is_word_ident(tok.text) || tok.text == "ad") {
        throw SyntaxError("generator '" + tok.text + "' cannot appear inside a coefficient",
                          tok.pos);
      }
      return CoefExpr::unknown(tok.text);
    }
    if (t.kind == Token::Kind::LParen) {
      lex_.take();
      CoefPtr e = parse_coef_expr();
      expect(Token::Kind::RParen, "expected ')'");
      return e;
    }
    fail("expected a coefficient");
  }

  // --- words ----------------------------------------------------------------

  // Parses one word which, because bracket slots hold whole sides, may expand
  // into a signed linear combination of plain words.
  std::vector<Term> parse_word_combo() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::Ident) {
      Token tok = lex_.take();
      Term one;
      one.word = leaf_for(tok);
      return {one};
    }
    if (t.kind == Token::Kind::LBracket) {
      lex_.take();
      std::vector<Term> a = parse_side();
      expect(Token::Kind::Comma, "expected ',' between bracket entries");
      std::vector<Term> b = parse_side();
      expect(Token::Kind::RBracket, "expected ']'");
      std::vector<Term> out;
      for (const Term& ta : a) {
        for (const Term& tb : b) {
          Term prod;
          prod.negative = ta.negative != tb.negative;
          if (ta.coeff && tb.coeff) {
            prod.coeff = CoefExpr::node(CoefExpr::Kind::Mul, ta.coeff, tb.coeff);
          } else {
            prod.coeff = ta.coeff ? ta.coeff : tb.coeff;
          }
          prod.word = Word::bracket(ta.word, tb.word);
          out.push_back(std::move(prod));
        }
      }
      return out;
    }
    if (t.kind == Token::Kind::LParen) {
      lex_.take();
      Token ad = expect(Token::Kind::Ident, "expected 'ad'");
      if (ad.text != "ad") throw SyntaxError("expected 'ad'", ad.pos);
      WordPtr base = parse_pure_word();
      expect(Token::Kind::RParen, "expected ')' after the ad operand");
      expect(Token::Kind::Caret, "expected '^' after '(ad ...)'");
      CoefPtr exp = parse_exponent();
      WordPtr arg = parse_pure_word();
      Term one;
      one.word = Word::ad_power(base, exp, arg);
      return {one};
    }
    fail("expected a bracket word");
  }

  WordPtr leaf_for(const Token& tok) {
    if (tok.text.size() == 1) return Word::generator(tok.text[0]);
    if (tok.text[0] == 'z' && is_word_ident(tok.text)) {
      return Word::z_index(static_cast<int>(std::stol(tok.text.substr(1))));
    }
    throw UnknownSymbol("'" + tok.text + "' is not a generator (at byte " +
                        std::to_string(tok.pos) + ")");
  }

  // A word that must stay a single unscaled tree (ad operands).
  WordPtr parse_pure_word() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::Ident) {
      if (!is_word_ident(t.text)) {
        Token tok = lex_.take();
        throw UnknownSymbol("'" + tok.text + "' is not a generator (at byte " +
                            std::to_string(tok.pos) + ")");
      }
      return leaf_for(lex_.take());
    }
    if (t.kind == Token::Kind::LBracket) {
      lex_.take();
      WordPtr a = parse_pure_word();
      expect(Token::Kind::Comma, "expected ',' between bracket entries");
      WordPtr b = parse_pure_word();
      expect(Token::Kind::RBracket, "expected ']'");
      return Word::bracket(a, b);
    }
    fail("expected a plain bracket word");
  }

  Lexer lex_;
};

}  // namespace

Relation parse_relation(const std::string& text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Printer
// ---------------------------------------------------------------------------

namespace {

std::string print_term_body(const Term& t) {
  if (!t.coeff) return print_word(t.word);
  std::string c;
  // A composite coefficient gets parentheses exactly when '*' would bind into
  // it; print_coef_rec handles that via precedence.
  print_coef_rec(*t.coeff, 2, c);
  return c + "*" + print_word(t.word);
}

}  // namespace

std::string print_side(const std::vector<Term>& side) {
  if (side.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < side.size(); ++i) {
    const Term& t = side[i];
    if (i == 0) {
      if (t.negative) out += "-";
    } else {
      out += t.negative ? " - " : " + ";
    }
    out += print_term_body(t);
  }
  return out;
}

std::string print_relation(const Relation& rel) {
  return print_side(rel.lhs) + " = " + print_side(rel.rhs);
}

// ---------------------------------------------------------------------------
// Normalized form
// ---------------------------------------------------------------------------

namespace {

struct WordLess {
  bool operator()(const WordPtr& a, const WordPtr& b) const { return word_compare(a, b) < 0; }
};

void accumulate_side(const std::vector<Term>& side, const CoefEnv& env, int sign,
                     std::map<WordPtr, MultiPoly, WordLess>& acc) {
  for (const Term& t : side) {
    MultiPoly c = eval_coef(t.coeff, env);
    if (t.negative) c = -c;
    if (sign < 0) c = -c;
    NormalizedWord nw = normalize_word(expand_ad(t.word, env));
    if (nw.vanishes) continue;
    if (nw.sign < 0) c = -c;
    auto [it, inserted] = acc.emplace(nw.word, c);
    if (!inserted) it->second += c;
  }
}

std::vector<SemTerm> collect(std::map<WordPtr, MultiPoly, WordLess>& acc) {
  std::vector<SemTerm> out;
  for (auto& [w, c] : acc) {
    if (!c.is_zero()) out.push_back({std::move(c), w});
  }
  return out;
}

}  // namespace

std::vector<SemTerm> normalize_side(const std::vector<Term>& side, const CoefEnv& env) {
  std::map<WordPtr, MultiPoly, WordLess> acc;
  accumulate_side(side, env, +1, acc);
  return collect(acc);
}

std::vector<SemTerm> normalize_relation(const Relation& rel, const CoefEnv& env) {
  std::map<WordPtr, MultiPoly, WordLess> acc;
  accumulate_side(rel.lhs, env, +1, acc);
  accumulate_side(rel.rhs, env, -1, acc);
  return collect(acc);
}

bool relations_proportional(const Relation& a, const Relation& b, const CoefEnv& env) {
  std::vector<SemTerm> na = normalize_relation(a, env);
  std::vector<SemTerm> nb = normalize_relation(b, env);
  if (na.size() != nb.size()) return false;
  if (na.empty()) return true;  // both are 0 = 0
  for (size_t i = 0; i < na.size(); ++i) {
    if (!word_equal(na[i].word, nb[i].word)) return false;
  }
  // One overall factor: cross-multiplication against the leading pair.
  for (size_t i = 1; i < na.size(); ++i) {
    if (na[i].coeff * nb[0].coeff != nb[i].coeff * na[0].coeff) return false;
  }
  return true;
}

}  // namespace liepres
