#include "liepres/recover.hpp"

#include <set>
#include <tuple>
#include <variant>

#include "liepres/errors.hpp"
#include "liepres/linalg.hpp"

namespace liepres {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Accumulates one polynomial-valued component, splitting each monomial into
// its spatial part (everything but t, lambda) and its scalar part.
void split_scalar(uint64_t slot, const MultiPoly& value, PolyCoords& out) {
  for (const auto& [mkey, c] : value.terms()) {
    Monomial m(mkey);
    Monomial scalar = Monomial::of(Var::t, m.exponent(Var::t)) *
                      Monomial::of(Var::lambda, m.exponent(Var::lambda));
    Monomial spatial = m.with_exponent(Var::t, 0).with_exponent(Var::lambda, 0);
    out[{slot, spatial.key()}] += MultiPoly::term(c, scalar);
  }
}

}  // namespace

PolyCoords poly_coordinates(const Payload& payload) {
  PolyCoords out;
  std::visit(
      overloaded{
          [&](const SparseMatrix& m) {
            for (const auto& [k, v] : m.entries()) split_scalar(k, v, out);
          },
          [&](const CoordVec& v) {
            for (const auto& [i, c] : v.entries) {
              split_scalar(static_cast<uint64_t>(static_cast<uint32_t>(i)), c, out);
            }
          },
          [&](const DiffOperator& d) {
            for (const auto& [order, c] : d.terms()) {
              split_scalar(static_cast<uint64_t>(order), c, out);
            }
          },
          [&](const MultiPoly& p) { split_scalar(0, p, out); },
      },
      payload);
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

Recovery recover_coefficients(const Relation& rel, const GeneratorTriple& triple,
                              const CoefEnv& env) {
  Recovery result;
  PolyCoords lhs = poly_coordinates(evaluate_side(rel.lhs, triple, env).payload());
  if (rel.rhs.empty()) {
    // Nothing to solve for: "= 0" either already holds or cannot be fixed.
    result.kind = lhs.empty() ? Recovery::Kind::Unique : Recovery::Kind::Infeasible;
    return result;
  }

  std::vector<PolyCoords> words;
  words.reserve(rel.rhs.size());
  for (const Term& term : rel.rhs) {
    words.push_back(poly_coordinates(evaluate_word(term.word, triple, env).payload()));
  }

  // Candidate scalar monomials per unknown: mu is plausible for c_i exactly
  // when mu * (some monomial of word_i) lands in the left side's support at
  // a shared (slot, spatial) coordinate.
  std::vector<std::vector<Monomial>> candidates(words.size());
  for (size_t i = 0; i < words.size(); ++i) {
    std::set<uint64_t> mus;
    for (const auto& [key, scalar] : words[i]) {
      auto it = lhs.find(key);
      if (it == lhs.end()) continue;
      for (const auto& [wk, wc] : scalar.terms()) {
        for (const auto& [lk, lc] : it->second.terms()) {
          bool ok = false;
          Monomial mu = Monomial(lk).divide(Monomial(wk), &ok);
          if (ok) mus.insert(mu.key());
        }
      }
    }
    for (uint64_t k : mus) candidates[i].emplace_back(k);
  }

  // Column layout: (word index, candidate monomial).
  std::vector<std::pair<size_t, Monomial>> columns;
  for (size_t i = 0; i < candidates.size(); ++i) {
    for (const Monomial& mu : candidates[i]) columns.emplace_back(i, mu);
  }

  // Row layout: every (slot, spatial, scalar monomial) touched by the left
  // side or by any candidate-scaled word.
  using RowKey = std::tuple<uint64_t, uint64_t, uint64_t>;
  std::map<RowKey, size_t> row_of;
  auto row_index = [&](const RowKey& k) {
    auto [it, inserted] = row_of.emplace(k, row_of.size());
    return it->second;
  };
  for (const auto& [key, scalar] : lhs) {
    for (const auto& [mk, c] : scalar.terms()) row_index({key.first, key.second, mk});
  }
  for (const auto& [i, mu] : columns) {
    for (const auto& [key, scalar] : words[i]) {
      for (const auto& [mk, c] : scalar.terms()) {
        row_index({key.first, key.second, (Monomial(mk) * mu).key()});
      }
    }
  }

  QDense a(row_of.size(), columns.size());
  std::vector<Rational> b(row_of.size(), Rational(0));
  for (const auto& [key, scalar] : lhs) {
    for (const auto& [mk, c] : scalar.terms()) {
      b[row_index({key.first, key.second, mk})] = c;
    }
  }
  for (size_t col = 0; col < columns.size(); ++col) {
    const auto& [i, mu] = columns[col];
    for (const auto& [key, scalar] : words[i]) {
      for (const auto& [mk, c] : scalar.terms()) {
        a.at(row_index({key.first, key.second, (Monomial(mk) * mu).key()}), col) += c;
      }
    }
  }

  LinearSolution sol = solve_dense(a, b);
  if (!sol.consistent) {
    result.kind = Recovery::Kind::Infeasible;
    return result;
  }
  result.kind = sol.kernel.empty() ? Recovery::Kind::Unique : Recovery::Kind::Parameterized;
  result.freedom = sol.kernel.size();
  result.coefficients.assign(words.size(), MultiPoly::zero());
  for (size_t col = 0; col < columns.size(); ++col) {
    const auto& [i, mu] = columns[col];
    result.coefficients[i] += MultiPoly::term(sol.particular[col], mu);
  }
  return result;
}

std::string Recovery::describe(const Relation& rel) const {
  switch (kind) {
    case Kind::Infeasible:
      return "left side is not a combination of the claimed words";
    case Kind::Unique:
    case Kind::Parameterized:
      break;
  }
  std::string out;
  for (size_t i = 0; i < coefficients.size(); ++i) {
    if (!out.empty()) out += "; ";
    out += "c(" + (i < rel.rhs.size() ? print_word(rel.rhs[i].word) : "?") +
           ") = " + coefficients[i].to_string();
  }
  if (out.empty()) out = "exact (nothing to solve)";
  if (kind == Kind::Parameterized) {
    out += " (+" + std::to_string(freedom) + "-dim freedom)";
  }
  return out;
}

}  // namespace liepres
