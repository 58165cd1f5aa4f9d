#include "flagdomain/chevalley.hpp"
#include "flagdomain/grading.hpp"
#include "flagdomain/selftest.hpp"

#include <doctest.h>

using namespace flagdomain;

namespace {

LieElement x(const RootSystem& rs, const Root& a, Rational c = 1) {
  return LieElement::basis(rs, BasisElement::root_vector(rs, a), c);
}
LieElement h(const RootSystem& rs, std::size_t i) { return LieElement::basis(rs, BasisElement::cartan(rs, i)); }

}  // namespace

TEST_CASE("A1: [x_a, x_-a] = h_1 and the weight action") {
  const auto rs = RootSystem::build({'A', 1});
  const StructureTable t(rs);
  CHECK(t.constants().empty());
  CHECK(bracket(t, x(*rs, Root({1})), x(*rs, Root({-1}))) == h(*rs, 0));
  CHECK(bracket(t, h(*rs, 0), x(*rs, Root({1}))) == x(*rs, Root({1}), 2));
  CHECK(bracket(t, h(*rs, 0), x(*rs, Root({-1}))) == x(*rs, Root({-1}), -2));
}

TEST_CASE("coroot brackets in a non-simply-laced type") {
  const auto rs = RootSystem::build({'C', 2});
  const StructureTable t(rs);
  // 2s1+s2 is long: coroot h_1 + h_2; s1+s2 is short: h_1 + 2h_2.
  CHECK(bracket(t, x(*rs, Root({2, 1})), x(*rs, Root({-2, -1}))) == h(*rs, 0) + h(*rs, 1));
  CHECK(bracket(t, x(*rs, Root({1, 1})), x(*rs, Root({-1, -1}))) == h(*rs, 0) + h(*rs, 1) * Rational(2));
}

TEST_CASE("structure constant magnitudes from root strings") {
  const auto a2 = RootSystem::build({'A', 2});
  CHECK(std::abs(StructureTable(a2).constant(Root({1, 0}), Root({0, 1}))) == 1);

  const auto g2 = RootSystem::build({'G', 2});
  const StructureTable t(g2);
  CHECK(std::abs(t.constant(Root({1, 0}), Root({0, 1}))) == 1);
  CHECK(std::abs(t.constant(Root({1, 0}), Root({1, 1}))) == 2);
  CHECK(std::abs(t.constant(Root({1, 0}), Root({2, 1}))) == 3);
  CHECK(t.constant(Root({1, 0}), Root({3, 1})) == 0);
}

TEST_CASE("extraspecial pairs carry positive constants") {
  for (const auto& type : admissible_types(4)) {
    const auto rs = RootSystem::build(type);
    const StructureTable t(rs);
    for (std::size_t k = rs->rank(); k < rs->num_positive(); ++k) {
      // smallest simple-index a with xi - a a positive root, in root order
      for (std::size_t a = 0; a < k; ++a) {
        const Root rest = rs->root(k) - rs->root(a);
        if (!rs->contains(rest) || !rest.is_positive()) continue;
        CAPTURE(type.name());
        CAPTURE(rs->root(k).str());
        CHECK(t.constant(rs->root(a), rest) > 0);
        break;
      }
    }
  }
}

TEST_CASE("A2: [x_s1, x_s2] = +-x_(s1+s2) and [x, x] = 0") {
  const auto rs = RootSystem::build({'A', 2});
  const StructureTable t(rs);
  const LieElement z = bracket(t, x(*rs, Root({1, 0})), x(*rs, Root({0, 1})));
  CHECK((z == x(*rs, Root({1, 1})) || z == x(*rs, Root({1, 1}), -1)));
  for (std::size_t k = 0; k < rs->dim_algebra(); ++k) {
    const LieElement e = LieElement::basis(*rs, k);
    CHECK(bracket(t, e, e).is_zero());
  }
}

TEST_CASE("Killing form against trace formulas for sl_n") {
  // On sl_2, ad h has eigenvalues 2, -2, 0: B(h, h) = 8; B(e, f) = 4.
  const auto a1 = RootSystem::build({'A', 1});
  const StructureTable t1(a1);
  CHECK(killing_form(t1, h(*a1, 0), h(*a1, 0)) == 8);
  CHECK(killing_form(t1, x(*a1, Root({1})), x(*a1, Root({-1}))) == 4);
  CHECK(killing_form(t1, x(*a1, Root({1})), x(*a1, Root({1}))) == 0);

  // sl_3: B(X, Y) = 6 tr(XY). h_1 = diag(1,-1,0), h_2 = diag(0,1,-1).
  const auto a2 = RootSystem::build({'A', 2});
  const StructureTable t2(a2);
  CHECK(killing_form(t2, h(*a2, 0), h(*a2, 0)) == 12);
  CHECK(killing_form(t2, h(*a2, 0), h(*a2, 1)) == -6);
  for (std::size_t k = 0; k < a2->size(); ++k) {
    const LieElement e = LieElement::basis(*a2, k);
    CHECK(killing_form(t2, e, LieElement::basis(*a2, a2->negative_index(k))) == 6);
    for (std::size_t j = 0; j < a2->size(); ++j)
      if (j != a2->negative_index(k)) CHECK(killing_form(t2, e, LieElement::basis(*a2, j)) == 0);
  }
}

TEST_CASE("conjugation: involution, automorphism, sign law on A2 (Q,Q)") {
  const auto rs = RootSystem::build({'A', 2});
  const StructureTable t(rs);
  const DomainSpec spec(rs, parse_labels("Q,Q"));
  const RealFormConjugation c(rs, spec.simple_parity());
  CHECK(c.parity(Root({1, 0})) == 1);
  CHECK(c.parity(Root({1, 1})) == 0);

  for (std::size_t k = 0; k < rs->dim_algebra(); ++k) {
    const LieElement e = LieElement::basis(*rs, k);
    CHECK(conjugate(c, conjugate(c, e)) == e);
    const Rational b = killing_form(t, e, conjugate(c, e));
    if (k < rs->size() && c.parity(k) == 1) CHECK(b > 0);
    else CHECK(b < 0);
  }
  const LieElement u = x(*rs, Root({1, 0}), 3) + x(*rs, Root({-1, -1}), ratio(-1, 2)) + h(*rs, 1);
  const LieElement v = x(*rs, Root({0, 1})) + x(*rs, Root({1, 1}), 2) + h(*rs, 0) * Rational(5);
  CHECK(conjugate(c, bracket(t, u, v)) == bracket(t, conjugate(c, u), conjugate(c, v)));
}

TEST_CASE("bracket is bilinear and antisymmetric on general elements") {
  const auto rs = RootSystem::build({'B', 3});
  const StructureTable t(rs);
  const std::size_t d = rs->dim_algebra();
  auto element = [&](int salt) {
    LieElement e = LieElement::zero(*rs);
    for (std::size_t k = 0; k < d; ++k) e.add(k, ratio(static_cast<long>((k * 7 + salt) % 5) - 2, 1 + salt % 3));
    return e;
  };
  const LieElement a = element(1), b = element(2), c = element(4);
  CHECK(bracket(t, a, b) == bracket(t, b, a) * Rational(-1));
  CHECK(bracket(t, a + c, b) == bracket(t, a, b) + bracket(t, c, b));
  CHECK(bracket(t, a * ratio(3, 2), b) == bracket(t, a, b) * ratio(3, 2));
}

TEST_CASE("zero coefficients are not stored") {
  const auto rs = RootSystem::build({'A', 2});
  LieElement e = x(*rs, Root({1, 0}));
  e.add(0, -1);
  CHECK(e.is_zero());
  CHECK(e.coeffs().empty());
}

TEST_CASE("bracket rejects elements of another root system") {
  const auto a2 = RootSystem::build({'A', 2});
  const auto c2 = RootSystem::build({'C', 2});
  const StructureTable t(a2);
  CHECK_THROWS_AS(bracket(t, LieElement::basis(*a2, 0), LieElement::basis(*c2, 0)), std::invalid_argument);
}

TEST_CASE("Jacobi holds exhaustively up to rank 4") {
  for (const auto& type : admissible_types(4)) {
    CAPTURE(type.name());
    CHECK_FALSE(find_jacobi_violation(StructureTable(RootSystem::build(type))).has_value());
  }
}

TEST_CASE("sampled Jacobi on E6") {
  CHECK_FALSE(find_jacobi_violation(StructureTable(RootSystem::build({'E', 6})), 3000).has_value());
}

TEST_CASE("a corrupted structure table fails Jacobi with a witness triple") {
  const auto rs = RootSystem::build({'B', 2});
  const StructureTable good(rs);
  std::vector<int> constants = good.raw();
  // Flip N(s1, s2) and N(s2, s1) together so antisymmetry still holds.
  const std::size_t i = 0, j = 1, m = rs->size();
  constants[i * m + j] = -constants[i * m + j];
  constants[j * m + i] = -constants[j * m + i];
  const StructureTable bad(rs, constants);

  const auto triple = find_jacobi_violation(bad);
  REQUIRE(triple.has_value());
  SelftestReport report;
  check_structure_table(bad, report);
  const InvariantCheck* c = report.find("chevalley", "Jacobi identity");
  REQUIRE(c != nullptr);
  CHECK_FALSE(c->passed());
  REQUIRE(c->witnesses.size() == 1);
  CHECK(c->witnesses[0].find("B2 triple (") == 0);
  CHECK(report.find("chevalley", "bracket is antisymmetric")->passed());
}
