#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "liepres/diff_operator.hpp"
#include "liepres/linalg.hpp"
#include "liepres/multipoly.hpp"
#include "liepres/sparse_matrix.hpp"

namespace liepres {

// Element of an abstract-basis backend: basis index -> coefficient.
struct CoordVec {
  std::map<int, MultiPoly> entries;

  bool is_zero() const { return entries.empty(); }
  void add(int index, const MultiPoly& c);
  CoordVec operator-() const;
  CoordVec& operator+=(const CoordVec& o);
  CoordVec& operator-=(const CoordVec& o);
  CoordVec scaled(const MultiPoly& c) const;
  bool operator==(const CoordVec& o) const { return entries == o.entries; }
  std::string to_string() const;
};

// What an element of some backend actually is.  The MultiPoly alternative
// is the Poisson backend (polynomials in q, p, t under the Poisson bracket).
using Payload = std::variant<SparseMatrix, CoordVec, DiffOperator, MultiPoly>;

Payload add_payload(const Payload& a, const Payload& b);
Payload sub_payload(const Payload& a, const Payload& b);
Payload neg_payload(const Payload& a);
Payload scale_payload(const Payload& a, const MultiPoly& c);
bool payload_is_zero(const Payload& a);
std::string payload_to_string(const Payload& a);

class LieElement;

// A bracket backend.  Instances own their elements: combining elements of
// two different instances throws BackendMismatch even if the payloads are
// structurally compatible.
class LieAlgebra : public std::enable_shared_from_this<LieAlgebra> {
 public:
  virtual ~LieAlgebra() = default;

  virtual std::string name() const = 0;
  virtual Payload bracket_payload(const Payload& a, const Payload& b) const = 0;

  // Exact rational coordinates of a payload with t specialized, used by
  // span/decomposition machinery.  The default handles matrix and
  // coordinate-vector payloads; backends with richer payloads override.
  virtual QVec to_coordinates(const Payload& a, const Rational& t_value) const;
  // Inverse direction: the basis payload behind coordinate #index.
  virtual Payload element_of_coordinate(int index) const;

  LieElement element(Payload payload) const;
  LieElement zero() const;
};

// A payload tagged with its owning algebra; the only element type user code
// touches.
class LieElement {
 public:
  LieElement(std::shared_ptr<const LieAlgebra> owner, Payload payload)
      : owner_(std::move(owner)), payload_(std::move(payload)) {}

  const std::shared_ptr<const LieAlgebra>& owner() const { return owner_; }
  const Payload& payload() const { return payload_; }

  bool is_zero() const { return payload_is_zero(payload_); }

  LieElement operator-() const { return {owner_, neg_payload(payload_)}; }
  LieElement operator+(const LieElement& o) const;
  LieElement operator-(const LieElement& o) const;
  LieElement scaled(const MultiPoly& c) const { return {owner_, scale_payload(payload_, c)}; }
  LieElement scaled(const Rational& c) const { return scaled(MultiPoly::constant(c)); }

  bool operator==(const LieElement& o) const;

  QVec coordinates(const Rational& t_value = Rational(1)) const {
    return owner_->to_coordinates(payload_, t_value);
  }

  std::string to_string() const { return payload_to_string(payload_); }

 private:
  std::shared_ptr<const LieAlgebra> owner_;
  Payload payload_;
};

LieElement bracket(const LieElement& a, const LieElement& b);

// Candidate generators (x, y, z) with h = [x, y].  Construction verifies
//   [h, x] = 2x,  [h, y] = -2y,          (the sl2 relations for x, y)
//   [y, z] = 0,   [h, z] = -k1 z,        (z is a lowest-weight vector)
// and, when `truncating`, that (ad x)^{k1+1} z = 0.  Failures throw
// WeightMismatch naming the relation that broke.
class GeneratorTriple {
 public:
  GeneratorTriple(LieElement x, LieElement y, LieElement z, int k1, bool truncating);

  const LieElement& x() const { return x_; }
  const LieElement& y() const { return y_; }
  const LieElement& z() const { return z_; }
  const LieElement& h() const { return h_; }
  int k1() const { return k1_; }
  bool truncating() const { return truncating_; }

  // z_i = (ad x)^i z, cached.
  const LieElement& z_i(int i) const;

 private:
  LieElement x_, y_, z_, h_;
  int k1_;
  bool truncating_;
  mutable std::vector<LieElement> z_cache_;
};

}  // namespace liepres
