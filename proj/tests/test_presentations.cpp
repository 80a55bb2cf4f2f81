#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "liepres/catalog.hpp"
#include "liepres/errors.hpp"
#include "liepres/evaluate.hpp"
#include "liepres/limits.hpp"
#include "liepres/recover.hpp"
#include "liepres/report.hpp"
#include "liepres/verify.hpp"

using namespace liepres;

namespace {

// One resolved backend per key, shared across checks inside a test case.
struct Bench {
  ResolvedCatalog resolved;
  CoefEnv env;
  BackendContext ctx;

  explicit Bench(const std::string& key)
      : resolved(Catalog::builtin().resolve(key)), env(resolved.env()), ctx(build_backend(resolved)) {}

  bool holds(const std::string& text) const {
    return evaluate_relation(parse_relation(text), *ctx.triple, env).is_zero();
  }
  Recovery solve(const std::string& text) const {
    return recover_coefficients(parse_relation(text), *ctx.triple, env);
  }
};

const EntryResult* find_entry(const VerificationReport& rep, const std::string& id) {
  for (const auto& e : rep.entries) {
    if (e.relation_id == id) return &e;
  }
  return nullptr;
}

MultiPoly t_poly(long coeff, unsigned power) {
  return MultiPoly::term(Rational(coeff), Monomial::of(Var::t, power));
}

}  // namespace

TEST_CASE("relation evaluation against the classical backends") {
  Bench sl3("sl:3");
  // Defining identities and the two-parameter family rows, all with formal t.
  CHECK(sl3.holds("[[x,y],x] = 2*x"));
  CHECK(sl3.holds("[y,z] = 0"));
  CHECK(sl3.holds("[z1,z2] = 24*t^2*y"));
  CHECK(sl3.holds("3*[z1,z2] - 2*[z,z3] = 120*t^2*y"));
  CHECK_FALSE(sl3.holds("[z1,z2] = 23*t^2*y"));
  // Symbolic ad exponents read the resolved rank (n = 3 here).
  CHECK(sl3.holds("(ad z1)^(n-2) z = 0"));
  CHECK(sl3.holds("(ad x)^(2*n-1) z = 0"));

  // The generic-family rows specialize correctly at the pinned ranks too.
  Bench sl4("sl:4");
  CHECK(sl4.holds("3*[z1,z2] - 2*[z,z3] = 288*t^2*y"));
  CHECK(sl4.holds("4*[z3,[z,z1]] - 3*[z2,[z,z2]] = 4032*t^2*z"));
}

TEST_CASE("coefficient recovery: unique, parameterized, infeasible") {
  Bench sl5("sl:5");
  Recovery r = sl5.solve("3*[z1,z2] - 2*[z,z3] = c*y");
  REQUIRE(r.kind == Recovery::Kind::Unique);
  REQUIRE(r.coefficients.size() == 1);
  CHECK(r.coefficients[0] == t_poly(504, 2));
  CHECK(r.describe(parse_relation("3*[z1,z2] - 2*[z,z3] = c*y")) == "c(y) = 504*t^2");

  // The two single-word solves behind the rank-4 "3.2" anomaly: the stated
  // constant -576*t^2 fits [z2,[z,z2]], not the word it is printed against.
  Bench sl4("sl:4");
  Recovery a = sl4.solve("[z3,[z,z1]] = c*z");
  REQUIRE(a.kind == Recovery::Kind::Unique);
  CHECK(a.coefficients[0] == t_poly(576, 2));
  Recovery b = sl4.solve("[z2,[z,z2]] = c*z");
  REQUIRE(b.kind == Recovery::Kind::Unique);
  CHECK(b.coefficients[0] == t_poly(-576, 2));

  // Dependent claimed words leave solution freedom; the particular solution
  // still solves the system, pinned here by the invariant combinations.
  Bench sl3("sl:3");
  Recovery p = sl3.solve("3*[z1,z2] - 2*[z,z3] = c1*[z1,z2] + c2*[z,z3]");
  REQUIRE(p.kind == Recovery::Kind::Parameterized);
  CHECK(p.freedom == 1);
  REQUIRE(p.coefficients.size() == 2);
  CHECK(p.coefficients[0] - p.coefficients[1] == MultiPoly::constant(Rational(5)));
  Recovery q = sl3.solve("3*[z1,z2] - 2*[z,z3] = c1*y + c2*y");
  REQUIRE(q.kind == Recovery::Kind::Parameterized);
  CHECK(q.coefficients[0] + q.coefficients[1] == t_poly(120, 2));

  Recovery bad = sl3.solve("[z1,z2] = c*z");
  CHECK(bad.kind == Recovery::Kind::Infeasible);
  CHECK(bad.describe(parse_relation("[z1,z2] = c*z")) ==
        "left side is not a combination of the claimed words");
  CHECK(sl3.solve("x = c1*y + c2*[z1,z2]").kind == Recovery::Kind::Infeasible);
}

TEST_CASE("formal limits: scaling, renormalization, fixed points, divergence") {
  // sl family, p = 1: the lambda polynomial collapses to its top coefficient.
  Relation sl = parse_relation("3*[z1,z2] - 2*[z,z3] = 24*t^2*(lambda^2-4)*y");
  CHECK(print_relation(formal_limit_relation(sl, 1)) == "3*[z1,z2] - 2*[z,z3] = 24*t^2*y");

  // o/sp family, p = 2, both y-sign variants map to their star counterparts.
  Relation osp = parse_relation(
      "9*[z2,z3] - 5*[z1,z4] = 216*t*(lambda^2-19)*z2 + 432*t^2*(lambda^2-4)*(lambda^2-9)*y");
  CHECK(print_relation(formal_limit_relation(osp, 2)) ==
        "9*[z2,z3] - 5*[z1,z4] = 216*t*z2 + 432*t^2*y");
  Relation osp_minus = parse_relation(
      "9*[z2,z3] - 5*[z1,z4] = 216*t*(lambda^2-19)*z2 - 432*t^2*(lambda^2-4)*(lambda^2-9)*y");
  CHECK(print_relation(formal_limit_relation(osp_minus, 2)) ==
        "9*[z2,z3] - 5*[z1,z4] = 216*t*z2 - 432*t^2*y");

  // lambda-free relations are fixed points (each z carries one t, so both
  // sides pick up the same net power and the renormalization cancels it).
  for (const char* text : {"[y,z] = 0", "3*[z1,z2] - 2*[z,z3] = 24*t^2*y", "[z,[z,z1]] = 0"}) {
    Relation rel = parse_relation(text);
    CHECK(print_relation(formal_limit_relation(rel, 1)) == print_relation(rel));
    CHECK(print_relation(formal_limit_relation(rel, 2)) == print_relation(rel));
  }

  // Mixed net powers mean the relation is not homogeneous under the scaling.
  CHECK_THROWS_AS(formal_limit_relation(parse_relation("z1 = t*z1"), 1), DivergentLimit);
  CHECK_THROWS_AS(formal_limit_relation(parse_relation("[y,z] = 0"), 3), DivergentLimit);

  // Cross-check against the stored star block, id by id.
  CHECK(relations_proportional(formal_limit_relation(osp, 2),
                               parse_relation("9*[z2,z3] - 5*[z1,z4] = 216*t*z2 + 432*t^2*y"),
                               CoefEnv{}));
}

TEST_CASE("verify_suite: all-green keys") {
  VerificationReport sl3 = verify_suite("sl:3");
  CHECK(sl3.exit_code() == 0);
  CHECK_FALSE(sl3.any(Outcome::RecoveredCoefficient));
  const EntryResult* gen = find_entry(sl3, "generation");
  REQUIRE(gen != nullptr);
  CHECK(gen->outcome == Outcome::ExactPass);
  CHECK(gen->notes.find("dim 8") != std::string::npos);
  const EntryResult* dec = find_entry(sl3, "decomposition");
  REQUIRE(dec != nullptr);
  CHECK(dec->outcome == Outcome::ExactPass);
  CHECK(dec->notes.find("L^2 + L^4") != std::string::npos);

  // Spot-check mode: numeric t instead of formal t, same verdicts.
  VerifyOptions at_two;
  at_two.t_value = Rational(2);
  CHECK(verify_suite("sl:3", at_two).exit_code() == 0);
}

TEST_CASE("verify_suite: transcribed anomalies route to recovery or span failure") {
  VerificationReport sl4 = verify_suite("sl:4");
  CHECK(sl4.exit_code() == 2);
  const EntryResult* printed = find_entry(sl4, "3.2");
  REQUIRE(printed != nullptr);
  CHECK(printed->outcome == Outcome::RecoveredCoefficient);
  CHECK(printed->recovered.find("576*t^2") != std::string::npos);
  const EntryResult* fixed = find_entry(sl4, "3.2N");
  REQUIRE(fixed != nullptr);
  CHECK(fixed->outcome == Outcome::ExactPass);

  VerificationReport e8 = verify_suite("e8");
  CHECK(e8.exit_code() == 1);
  const EntryResult* dropped = find_entry(e8, "2.3");
  REQUIRE(dropped != nullptr);
  CHECK(dropped->outcome == Outcome::Fail);
  CHECK(dropped->notes.find("not in the span") != std::string::npos);
  const EntryResult* restored = find_entry(e8, "2.3N");
  REQUIRE(restored != nullptr);
  CHECK(restored->outcome == Outcome::ExactPass);
  const EntryResult* gen = find_entry(e8, "generation");
  REQUIRE(gen != nullptr);
  CHECK(gen->notes.find("dim 248") != std::string::npos);

  VerificationReport oe4 = verify_suite("o_even:4");
  CHECK(oe4.exit_code() == 2);
  const EntryResult* dec = find_entry(oe4, "decomposition");
  REQUIRE(dec != nullptr);
  CHECK(dec->outcome == Outcome::ExactPass);
  CHECK(dec->notes.find("over-counts") != std::string::npos);
}

TEST_CASE("verify_suite: lambda and star families") {
  VerificationReport lam = verify_suite("sl_lambda");
  CHECK(lam.exit_code() == 0);
  const EntryResult* cas = find_entry(lam, "casimir");
  REQUIRE(cas != nullptr);
  CHECK(cas->outcome == Outcome::ExactPass);
  CHECK(cas->notes.find("lambda^2 - 1") != std::string::npos);

  VerificationReport star = verify_suite("sl_star");
  CHECK(star.exit_code() == 0);
  for (const auto& e : star.entries) {
    CHECK(e.outcome == Outcome::ExactPass);
    CHECK(e.notes.find("limit of sl_lambda") != std::string::npos);
  }
  CHECK(verify_suite("osp_star").exit_code() == 0);
}

TEST_CASE("recover_suite: solved constants match the stated polynomials") {
  VerificationReport sl5 = recover_suite("sl:5");
  CHECK(sl5.exit_code() == 0);
  for (const auto& e : sl5.entries) CHECK(e.outcome == Outcome::ExactPass);
  // Rows with an empty right-hand side have nothing to solve for.
  CHECK(find_entry(sl5, "1.1") == nullptr);
  CHECK(find_entry(sl5, "2.1") != nullptr);

  VerificationReport sl4 = recover_suite("sl:4");
  CHECK(sl4.exit_code() == 2);
  const EntryResult* printed = find_entry(sl4, "3.2");
  REQUIRE(printed != nullptr);
  CHECK(printed->outcome == Outcome::RecoveredCoefficient);
}

TEST_CASE("reports: deterministic text, schema-tagged JSON") {
  VerificationReport first = verify_suite("sl:3");
  VerificationReport second = verify_suite("sl:3");
  CHECK(first.render_text() == second.render_text());
  CHECK(first.render_text().rfind("# liepres-report/1\n", 0) == 0);
  CHECK(first.render_text().find("millis") == std::string::npos);

  nlohmann::json parsed = nlohmann::json::parse(first.render_json());
  CHECK(parsed.at("schema") == kReportSchema);
  CHECK(parsed.at("algebra") == "sl:3");
  REQUIRE(parsed.at("entries").is_array());
  CHECK(parsed.at("entries").size() == first.entries.size());
  nlohmann::json a = parsed, b = nlohmann::json::parse(second.render_json());
  for (auto& e : a.at("entries")) e.erase("millis");
  for (auto& e : b.at("entries")) e.erase("millis");
  CHECK(a == b);
}
