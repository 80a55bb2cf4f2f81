#include "liepres/lie.hpp"

#include <sstream>

#include "liepres/errors.hpp"

namespace liepres {

void CoordVec::add(int index, const MultiPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = entries.emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) entries.erase(it);
  }
}

CoordVec CoordVec::operator-() const {
  CoordVec r;
  for (const auto& [i, c] : entries) r.entries.emplace_hint(r.entries.end(), i, -c);
  return r;
}

CoordVec& CoordVec::operator+=(const CoordVec& o) {
  for (const auto& [i, c] : o.entries) add(i, c);
  return *this;
}

CoordVec& CoordVec::operator-=(const CoordVec& o) {
  for (const auto& [i, c] : o.entries) add(i, -c);
  return *this;
}

CoordVec CoordVec::scaled(const MultiPoly& c) const {
  CoordVec r;
  if (c.is_zero()) return r;
  for (const auto& [i, v] : entries) {
    MultiPoly prod = v * c;
    if (!prod.is_zero()) r.entries.emplace_hint(r.entries.end(), i, std::move(prod));
  }
  return r;
}

std::string CoordVec::to_string() const {
  if (entries.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : entries) {
    if (!first) os << ", ";
    first = false;
    os << "#" << i << ": " << c.to_string();
  }
  return os.str();
}

namespace {

[[noreturn]] void kind_mismatch() {
  throw BackendMismatch("payloads of different kinds combined");
}

}  // namespace

Payload add_payload(const Payload& a, const Payload& b) {
  if (a.index() != b.index()) kind_mismatch();
  return std::visit(
      [&](const auto& x) -> Payload {
        using T = std::decay_t<decltype(x)>;
        T r = x;
        r += std::get<T>(b);
        return r;
      },
      a);
}

Payload sub_payload(const Payload& a, const Payload& b) {
  if (a.index() != b.index()) kind_mismatch();
  return std::visit(
      [&](const auto& x) -> Payload {
        using T = std::decay_t<decltype(x)>;
        T r = x;
        r -= std::get<T>(b);
        return r;
      },
      a);
}

Payload neg_payload(const Payload& a) {
  return std::visit([](const auto& x) -> Payload { return -x; }, a);
}

Payload scale_payload(const Payload& a, const MultiPoly& c) {
  // Scalars must be central for the backend: no u for operators, no q/p for
  // Poisson polynomials (use the product structure for those instead).
  if (std::holds_alternative<DiffOperator>(a) && c.depends_on(Var::u)) {
    throw Error("scale: u-dependent factor is not central for operators");
  }
  if (std::holds_alternative<MultiPoly>(a) && (c.depends_on(Var::q) || c.depends_on(Var::p))) {
    throw Error("scale: q/p-dependent factor is not central for Poisson elements");
  }
  return std::visit(
      [&](const auto& x) -> Payload {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, MultiPoly>) {
          return x * c;
        } else {
          return x.scaled(c);
        }
      },
      a);
}

bool payload_is_zero(const Payload& a) {
  return std::visit([](const auto& x) { return x.is_zero(); }, a);
}

std::string payload_to_string(const Payload& a) {
  return std::visit([](const auto& x) { return x.to_string(); }, a);
}

QVec LieAlgebra::to_coordinates(const Payload& a, const Rational& t_value) const {
  QVec out;
  if (const auto* m = std::get_if<SparseMatrix>(&a)) {
    int n = m->size();
    for (const auto& [key, entry] : m->entries()) {
      int i = static_cast<int>(key >> 32);
      int j = static_cast<int>(key & 0xffffffffu);
      MultiPoly e = entry.evaluate(Var::t, t_value);
      if (e.is_zero()) continue;
      if (!e.is_constant()) {
        throw Error(name() + ": matrix entry not scalar after t-evaluation: " + e.to_string());
      }
      out[(i - 1) * n + (j - 1)] = e.as_constant();
    }
    return out;
  }
  if (const auto* v = std::get_if<CoordVec>(&a)) {
    for (const auto& [i, c] : v->entries) {
      MultiPoly e = c.evaluate(Var::t, t_value);
      if (e.is_zero()) continue;
      if (!e.is_constant()) {
        throw Error(name() + ": coefficient not scalar after t-evaluation: " + e.to_string());
      }
      out[i] = e.as_constant();
    }
    return out;
  }
  throw Error(name() + ": backend does not provide default coordinates");
}

Payload LieAlgebra::element_of_coordinate(int) const {
  throw Error(name() + ": backend does not enumerate coordinates");
}

LieElement LieAlgebra::element(Payload payload) const {
  return LieElement(shared_from_this(), std::move(payload));
}

LieElement LieAlgebra::zero() const {
  // The additive identity is representable in every payload kind; the
  // coordinate vector is the cheapest neutral choice only for abstract
  // backends, so ask bracket users to start from concrete elements instead.
  return LieElement(shared_from_this(), CoordVec{});
}

namespace {
void check_owners(const LieElement& a, const LieElement& b, const char* op) {
  if (a.owner() != b.owner()) {
    throw BackendMismatch(std::string(op) + ": elements of '" + a.owner()->name() + "' and '" +
                          b.owner()->name() + "'");
  }
}
}  // namespace

LieElement LieElement::operator+(const LieElement& o) const {
  check_owners(*this, o, "add");
  return {owner_, add_payload(payload_, o.payload_)};
}

LieElement LieElement::operator-(const LieElement& o) const {
  check_owners(*this, o, "sub");
  return {owner_, sub_payload(payload_, o.payload_)};
}

bool LieElement::operator==(const LieElement& o) const {
  check_owners(*this, o, "compare");
  return payload_is_zero(sub_payload(payload_, o.payload_));
}

LieElement bracket(const LieElement& a, const LieElement& b) {
  check_owners(a, b, "bracket");
  return LieElement(a.owner(), a.owner()->bracket_payload(a.payload(), b.payload()));
}

GeneratorTriple::GeneratorTriple(LieElement x, LieElement y, LieElement z, int k1, bool truncating)
    : x_(std::move(x)),
      y_(std::move(y)),
      z_(std::move(z)),
      h_(bracket(x_, y_)),
      k1_(k1),
      truncating_(truncating) {
  if (z_.is_zero()) {
    throw WeightMismatch("generator triple: z = 0");
  }
  if (!(bracket(h_, x_) == x_.scaled(Rational(2)))) {
    throw WeightMismatch("generator triple: [[x,y],x] != 2x");
  }
  if (!(bracket(h_, y_) == y_.scaled(Rational(-2)))) {
    throw WeightMismatch("generator triple: [[x,y],y] != -2y");
  }
  if (!bracket(y_, z_).is_zero()) {
    throw WeightMismatch("generator triple: [y,z] != 0");
  }
  if (!(bracket(h_, z_) == z_.scaled(Rational(-k1_)))) {
    throw WeightMismatch("generator triple: [[x,y],z] != -" + std::to_string(k1_) + "z");
  }
  z_cache_.push_back(z_);
  if (truncating_ && !z_i(k1_ + 1).is_zero()) {
    throw WeightMismatch("generator triple: (ad x)^" + std::to_string(k1_ + 1) + " z != 0");
  }
}

const LieElement& GeneratorTriple::z_i(int i) const {
  if (i < 0) throw Error("GeneratorTriple::z_i: negative index");
  while (static_cast<int>(z_cache_.size()) <= i) {
    z_cache_.push_back(bracket(x_, z_cache_.back()));
  }
  return z_cache_[static_cast<size_t>(i)];
}

}  // namespace liepres
