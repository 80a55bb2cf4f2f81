#include "liepres/span.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "liepres/errors.hpp"

namespace liepres {

SpanResult span_closure(const std::vector<LieElement>& seeds, const Rational& t_value) {
  SpanResult result;
  result.t_value = t_value;
  if (seeds.empty()) return result;
  for (size_t i = 1; i < seeds.size(); ++i) {
    if (seeds[i].owner() != seeds[0].owner()) {
      throw BackendMismatch("span_closure: seeds from different backends");
    }
  }
  size_t next = 0;
  for (const LieElement& s : seeds) {
    if (result.echelon.insert(s.coordinates(t_value))) result.basis.push_back(s);
  }
  while (next < result.basis.size()) {
    LieElement v = result.basis[next++];
    for (const LieElement& s : seeds) {
      LieElement w = bracket(s, v);
      if (w.is_zero()) continue;
      if (result.echelon.insert(w.coordinates(t_value))) result.basis.push_back(w);
    }
  }
  return result;
}

SpanResult span_of(const std::vector<LieElement>& elements, const Rational& t_value) {
  SpanResult result;
  result.t_value = t_value;
  for (const LieElement& e : elements) {
    if (e.owner() != elements[0].owner()) {
      throw BackendMismatch("span_of: elements from different backends");
    }
    if (e.is_zero()) continue;
    if (result.echelon.insert(e.coordinates(t_value))) result.basis.push_back(e);
  }
  return result;
}

LieElement element_from_coordinates(const std::shared_ptr<const LieAlgebra>& algebra,
                                    const QVec& coords) {
  LieElement out = algebra->zero();
  bool started = false;
  for (const auto& [i, c] : coords) {
    LieElement piece =
        LieElement(algebra, algebra->element_of_coordinate(i)).scaled(MultiPoly::constant(c));
    if (!started) {
      out = piece;
      started = true;
    } else {
      out = out + piece;
    }
  }
  if (!started) throw Error("element_from_coordinates: empty coordinate vector");
  return out;
}

std::string DecompositionReport::spectrum_string() const {
  std::ostringstream os;
  bool first = true;
  for (const Summand& s : summands) {
    for (int r = 0; r < s.multiplicity; ++r) {
      if (!first) os << ", ";
      first = false;
      os << s.k;
    }
  }
  return os.str();
}

std::string DecompositionReport::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const Summand& s : summands) {
    if (!first) os << " + ";
    first = false;
    if (s.multiplicity > 1) os << s.multiplicity << " ";
    os << "L^" << s.k;
  }
  os << " (dim " << total_dim << ")";
  return os.str();
}

DecompositionReport decompose_adjoint(const GeneratorTriple& triple, const SpanResult& span) {
  const auto& algebra = triple.x().owner();
  const Rational& t_value = span.t_value;

  // Coordinate directions the span actually uses.
  std::set<int> used;
  for (const auto& [pivot, row] : span.echelon.rows()) {
    for (const auto& [i, c] : row) used.insert(i);
  }

  // ad h must be diagonal on those directions; record each weight.
  std::map<int, long> weight_of;
  for (int i : used) {
    LieElement e(algebra, algebra->element_of_coordinate(i));
    LieElement he = bracket(triple.h(), e);
    QVec ec = e.coordinates(t_value);
    QVec hc = he.coordinates(t_value);
    // hc must equal w * ec for an integer w.
    Rational w(0);
    if (!hc.empty()) {
      if (ec.size() != hc.size()) {
        throw NotDiagonalizable("ad h is not diagonal on coordinate #" + std::to_string(i));
      }
      w = hc.begin()->second / ec.begin()->second;
      QVec scaled = ec;
      for (auto& [k, v] : scaled) v *= w;
      if (scaled != hc) {
        throw NotDiagonalizable("ad h is not diagonal on coordinate #" + std::to_string(i));
      }
    }
    if (!w.is_integer()) {
      throw NotDiagonalizable("ad h has non-integer weight " + w.to_string() +
                              " on coordinate #" + std::to_string(i));
    }
    weight_of[i] = w.numerator().get_si();
  }

  // Project the span's rows onto each weight; since ad h preserves the
  // span, the projections are exactly the weight components.
  std::map<long, QEchelon> weight_spaces;
  for (const auto& [pivot, row] : span.echelon.rows()) {
    std::map<long, QVec> pieces;
    for (const auto& [i, c] : row) pieces[weight_of.at(i)][i] = c;
    for (auto& [w, piece] : pieces) weight_spaces[w].insert(std::move(piece));
  }
  size_t weight_total = 0;
  for (const auto& [w, ech] : weight_spaces) weight_total += ech.dim();
  if (weight_total != span.dim()) {
    throw NotDiagonalizable("weight spaces sum to " + std::to_string(weight_total) +
                            " but the span has dimension " + std::to_string(span.dim()));
  }

  // Highest-weight vectors: kernel of ad x on each weight space.
  DecompositionReport report;
  report.total_dim = span.dim();
  size_t dim_check = 0;
  for (const auto& [w, ech] : weight_spaces) {
    if (w < 0) continue;
    std::vector<QVec> images;
    for (const auto& [pivot, row] : ech.rows()) {
      LieElement e = element_from_coordinates(algebra, row);
      images.push_back(bracket(triple.x(), e).coordinates(t_value));
    }
    // Solve sum_i c_i * images[i] = 0.
    std::set<int> support;
    for (const QVec& im : images) {
      for (const auto& [i, c] : im) support.insert(i);
    }
    std::map<int, size_t> rowindex;
    for (int i : support) rowindex.emplace(i, rowindex.size());
    QDense A(support.size(), images.size());
    for (size_t col = 0; col < images.size(); ++col) {
      for (const auto& [i, c] : images[col]) A.at(rowindex.at(i), col) = c;
    }
    size_t mult = images.size() - (support.empty() ? 0 : A.rref());
    if (mult > 0) {
      report.summands.push_back({static_cast<int>(w), static_cast<int>(mult)});
      dim_check += mult * static_cast<size_t>(w + 1);
    }
  }
  std::sort(report.summands.begin(), report.summands.end(),
            [](const Summand& a, const Summand& b) { return a.k < b.k; });
  if (dim_check != span.dim()) {
    throw NotDiagonalizable("isotypic dimensions sum to " + std::to_string(dim_check) +
                            " but the span has dimension " + std::to_string(span.dim()));
  }
  return report;
}

}  // namespace liepres
