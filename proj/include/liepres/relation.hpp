#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "liepres/multipoly.hpp"

namespace liepres {

// ---------------------------------------------------------------------------
// Coefficient expressions
//
// Scalars multiplying bracket words: polynomials in t, lambda and the family
// parameter n, kept as parsed trees so the printer reproduces the source
// text.  A bare identifier other than t/lambda/n is an unknown coefficient
// awaiting recovery.
// ---------------------------------------------------------------------------

enum class CoefSym { t, lambda, n };

struct CoefExpr;
using CoefPtr = std::shared_ptr<const CoefExpr>;

struct CoefExpr {
  enum class Kind { Num, Sym, Unknown, Add, Sub, Mul, Div, Pow, Neg };

  Kind kind;
  Rational value;    // Num
  CoefSym sym{};     // Sym
  std::string name;  // Unknown
  CoefPtr a, b;      // children; for Pow, b is the exponent

  static CoefPtr num(const Rational& v);
  static CoefPtr symbol(CoefSym s);
  static CoefPtr unknown(std::string name);
  static CoefPtr node(Kind k, CoefPtr a, CoefPtr b);
};

bool coef_equal(const CoefPtr& a, const CoefPtr& b);
// Collects unknown names (deduplicated, in appearance order).
bool coef_has_unknown(const CoefPtr& c, std::vector<std::string>* names = nullptr);
std::string print_coef(const CoefPtr& c);

// Evaluation environment: the family parameter, when the key binds one.
struct CoefEnv {
  std::optional<Rational> n;
};

// Coefficient tree -> polynomial in t, lambda.  Throws UnboundParameter when
// n is mentioned but not bound, or when an unknown coefficient is hit.
MultiPoly eval_coef(const CoefPtr& c, const CoefEnv& env);
// Same, but the result must be a nonnegative integer (ad-power exponents).
long eval_coef_integer(const CoefPtr& c, const CoefEnv& env);

// ---------------------------------------------------------------------------
// Bracket words
// ---------------------------------------------------------------------------

struct Word;
using WordPtr = std::shared_ptr<const Word>;

struct Word {
  enum class Kind { Gen, ZIndex, Bracket, Ad };

  Kind kind;
  char gen = 0;         // Gen: 'x', 'y', 'z', 'h'
  int index = 0;        // ZIndex: the i of z_i (>= 1; z_0 is stored as Gen z)
  WordPtr left, right;  // Bracket: [left,right]; Ad: (ad left)^exp right
  CoefPtr exp;          // Ad exponent (integer or expression in n)

  static WordPtr generator(char g);
  static WordPtr z_index(int i);
  static WordPtr bracket(WordPtr l, WordPtr r);
  static WordPtr ad_power(WordPtr base, CoefPtr exp, WordPtr arg);
};

bool word_equal(const WordPtr& a, const WordPtr& b);
// Total order behind antisymmetry normalization:
//   x < y < h < z < z1 < z2 < ... < brackets < ad-powers,
// brackets compared left child first.
int word_compare(const WordPtr& a, const WordPtr& b);
std::string print_word(const WordPtr& w);
// Number of z occurrences (z and every z_i count once); -1 when a symbolic
// ad-power makes the count depend on n.
int word_z_count(const WordPtr& w);

// Replaces every (ad w)^e v node by e nested brackets; e may mention n, which
// must then be bound in env.
WordPtr expand_ad(const WordPtr& w, const CoefEnv& env);

// Canonical orientation: children normalized, then every bracket ordered
// ascending with the swap sign tracked.  A bracket of equal children is
// identically zero.
struct NormalizedWord {
  WordPtr word;
  int sign = 1;
  bool vanishes = false;
};
NormalizedWord normalize_word(const WordPtr& w);

// ---------------------------------------------------------------------------
// Relations
// ---------------------------------------------------------------------------

struct Term {
  bool negative = false;
  CoefPtr coeff;  // null -> implicit 1
  WordPtr word;
};

struct Relation {
  std::vector<Term> lhs, rhs;  // empty vector is the side "0"

  // Max z-occurrence count over all words (the paper's relation type);
  // -1 when it depends on n through a symbolic ad-power.
  int z_count() const;
  bool has_unknowns(std::vector<std::string>* names = nullptr) const;
};

// Parses one relation in the catalog grammar:
//   relation := side "=" side
//   side     := "0" | ["-"] term (("+"|"-") term)*
//   term     := [coeff "*"] word          (the "*" may be omitted)
//   coeff    := polynomial in t, lambda, n; rationals, "^", parentheses
//   word     := x|y|z|h | "z"INT | "[" side "," side "]"
//             | "(ad " word ")^" exp word      (exp: integer or "(...)" )
// Linear combinations inside "[ , ]" are distributed bilinearly at parse
// time, so stored words are always plain trees.  "#" starts a comment.
// Throws SyntaxError (with byte position) or UnknownSymbol.
Relation parse_relation(const std::string& text);

// Canonical printer: compact bracket words, " + "/" - " between terms,
// explicit "*" between coefficient and word.  The built-in catalog is stored
// in this form, making parse -> print byte-identical on it.
std::string print_relation(const Relation& rel);
std::string print_side(const std::vector<Term>& side);

// ---------------------------------------------------------------------------
// Normalized (semantic) form
// ---------------------------------------------------------------------------

// One side reduced to sorted (polynomial coefficient, canonical word) pairs:
// ad-powers expanded, words antisymmetry-normalized with signs folded into
// the coefficients, like terms combined, zero terms dropped.
struct SemTerm {
  MultiPoly coeff;
  WordPtr word;
};

std::vector<SemTerm> normalize_side(const std::vector<Term>& side, const CoefEnv& env);
// LHS - RHS, normalized; the relation as a single "= 0" combination.
std::vector<SemTerm> normalize_relation(const Relation& rel, const CoefEnv& env);

// True when the two relations are the same constraint: normalized forms
// proportional by one overall nonzero factor (an equation and its scalar
// multiples agree).
bool relations_proportional(const Relation& a, const Relation& b, const CoefEnv& env);

}  // namespace liepres
