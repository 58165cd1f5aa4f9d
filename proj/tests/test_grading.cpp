#include "flagdomain/grading.hpp"
#include "flagdomain/selftest.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace flagdomain;

namespace {

DomainSpec spec(const char* type, const char* labels) {
  return DomainSpec(RootSystem::build(parse_type(type)), parse_labels(labels));
}

std::vector<Root> roots_of(const RootSystem& rs, const RootSet& set) {
  std::vector<Root> out;
  for (std::size_t k : set) out.push_back(rs.root(k));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Root> sorted(std::vector<Root> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("grading elements") {
  CHECK(grading_element(spec("A2", "K,Q")) == Coweight({2, 1}));
  CHECK(grading_element(spec("A2", "Q,Q")) == Coweight({1, 1}));
  CHECK(grading_element(spec("C3", "V,K,Q")) == Coweight({0, 2, 1}));
  CHECK(auxiliary_grading(spec("A2", "K,Q")) == Coweight({0, 1}));
  CHECK(auxiliary_grading(spec("A2", "Q,Q")) == Coweight({1, 1}));
}

TEST_CASE("labelings without Q or of the wrong length are rejected") {
  const auto rs = RootSystem::build({'A', 2});
  CHECK_THROWS_WITH_AS(DomainSpec(rs, parse_labels("V,V")), "no noncompact simple root", std::invalid_argument);
  CHECK_THROWS_WITH_AS(DomainSpec(rs, parse_labels("K,K")), "no noncompact simple root", std::invalid_argument);
  CHECK_THROWS_AS(DomainSpec(rs, parse_labels("Q")), std::invalid_argument);
  CHECK_THROWS_AS(parse_labels("Q,X"), std::invalid_argument);
  CHECK_THROWS_AS(parse_labels("Q,,K"), std::invalid_argument);
  CHECK(parse_labels("kq") == parse_labels("K,Q"));
  CHECK(format_labels(parse_labels("VKQ")) == "V,K,Q");
}

TEST_CASE("A2 decompositions") {
  const auto rs = RootSystem::build({'A', 2});
  const auto g = decompose(*rs, Coweight({2, 1}));
  CHECK(g.depth() == 3);
  CHECK(roots_of(*rs, g.level(1)) == std::vector<Root>{Root({0, 1})});
  CHECK(roots_of(*rs, g.level(2)) == std::vector<Root>{Root({1, 0})});
  CHECK(roots_of(*rs, g.level(3)) == std::vector<Root>{Root({1, 1})});
  CHECK(roots_of(*rs, g.level(-3)) == std::vector<Root>{Root({-1, -1})});

  const auto g2 = decompose(*rs, Coweight({1, 1}));
  CHECK(g2.depth() == 2);
  CHECK(roots_of(*rs, g2.level(1)) == sorted({Root({1, 0}), Root({0, 1})}));
  CHECK(roots_of(*rs, g2.level(2)) == std::vector<Root>{Root({1, 1})});

  const auto g0 = decompose(*rs, Coweight({0, 0}));
  CHECK(g0.depth() == 0);
  CHECK(g0.level(0).size() == 6);
  CHECK(g0.levels().size() == 1);
}

TEST_CASE("decompose rejects non-integral coweights") {
  const auto rs = RootSystem::build({'A', 2});
  CHECK_THROWS_AS(decompose(*rs, Coweight({ratio(1, 2), 0})), std::invalid_argument);
  CHECK_THROWS_AS(decompose(*rs, Coweight({1})), std::invalid_argument);
}

TEST_CASE("splits") {
  {
    const auto s = spec("A2", "Q,Q");
    const auto& rs = s.root_system();
    const Splits sp = split(s);
    CHECK(roots_of(rs, sp.k_minus) == std::vector<Root>{Root({-1, -1})});
    CHECK(roots_of(rs, sp.q_plus) == sorted({Root({1, 0}), Root({0, 1})}));
    CHECK(sp.v_roots.empty());
  }
  {
    const auto s = spec("C2", "K,Q");
    const auto& rs = s.root_system();
    const Splits sp = split(s);
    CHECK(roots_of(rs, sp.k_minus) == std::vector<Root>{Root({-1, 0})});
    CHECK(roots_of(rs, sp.q_plus) == sorted({Root({0, 1}), Root({1, 1}), Root({2, 1})}));
  }
  {
    const auto s = spec("A2", "V,Q");
    const auto& rs = s.root_system();
    const Splits sp = split(s);
    CHECK(roots_of(rs, sp.v_roots) == sorted({Root({1, 0}), Root({-1, 0})}));
    CHECK(roots_of(rs, sp.q_plus) == sorted({Root({0, 1}), Root({1, 1})}));
    CHECK(sp.k_plus.empty());
  }
}

TEST_CASE("labeling enumeration") {
  for (std::size_t r = 1; r <= 5; ++r) {
    const auto all = all_labelings(r);
    const auto valid = std::count_if(all.begin(), all.end(), is_valid_labeling);
    CHECK(all.size() == static_cast<std::size_t>(std::pow(3, r)));
    CHECK(valid == static_cast<long>(std::pow(3, r) - std::pow(2, r)));
    CHECK(std::is_sorted(all.begin(), all.end(), [](const auto& a, const auto& b) {
      return format_labels(a) < format_labels(b);
    }));
  }
}

TEST_CASE("grading invariants for every labeling up to rank 4") {
  SelftestReport report;
  for (const auto& type : admissible_types(4)) {
    const auto rs = RootSystem::build(type);
    for (const auto& l : suite_labelings(rs->rank())) check_grading(DomainSpec(rs, l), report);
  }
  for (const auto& c : report.checks()) {
    CAPTURE(c.invariant);
    CHECK(c.cases > 0);
    CHECK(c.passed());
  }
}

TEST_CASE("compact roots are exactly those with even T'-value") {
  const auto rs = RootSystem::build({'B', 3});
  for (const auto& l : suite_labelings(3)) {
    const DomainSpec s(rs, l);
    const auto g = decompose(*rs, grading_element(s));
    const Coweight aux = auxiliary_grading(s);
    for (std::size_t k = 0; k < rs->size(); ++k) {
      const Rational v = aux.evaluate(rs->root(k));
      CHECK((g.level_of(k) % 2 == 0) == (v.get_num() % 2 == 0));
    }
  }
}
