#include "flagdomain/roots.hpp"

#include <doctest.h>

#include <algorithm>
#include <deque>
#include <set>

using namespace flagdomain;

namespace {

// Orbit of the simple roots under simple reflections, from a Cartan matrix
// given explicitly: s_j(a) = a - (sum_i a_i C[i][j]) e_j.
std::set<std::vector<int>> reflection_closure(const std::vector<std::vector<int>>& C) {
  const std::size_t n = C.size();
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> todo;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    todo.push_back(e);
  }
  while (!todo.empty()) {
    auto a = todo.front();
    todo.pop_front();
    if (!seen.insert(a).second) continue;
    for (std::size_t j = 0; j < n; ++j) {
      int k = 0;
      for (std::size_t i = 0; i < n; ++i) k += a[i] * C[i][j];
      auto b = a;
      b[j] -= k;
      if (!seen.count(b)) todo.push_back(b);
    }
  }
  return seen;
}

std::set<std::vector<int>> root_set(const RootSystem& rs) {
  std::set<std::vector<int>> out;
  for (const auto& r : rs.roots()) out.insert(r.coeffs());
  return out;
}

}  // namespace

TEST_CASE("A2 has the six roots +-s1, +-s2, +-(s1+s2)") {
  const auto rs = RootSystem::build({'A', 2});
  CHECK(root_set(*rs) == std::set<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}, {-1, 0}, {0, -1}, {-1, -1}});
  CHECK(rs->highest_root() == Root({1, 1}));
}

TEST_CASE("C2 roots and coroots") {
  const auto rs = RootSystem::build({'C', 2});
  CHECK(root_set(*rs) ==
        std::set<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {-1, 0}, {0, -1}, {-1, -1}, {-2, -1}});
  CHECK(rs->coroot_coords(Root({2, 1})) == RationalVector{1, 1});
  CHECK(rs->coroot_coords(Root({1, 1})) == RationalVector{1, 2});
  CHECK(rs->length_class(Root({2, 1})) == LengthClass::Long);
  CHECK(rs->length_class(Root({1, 1})) == LengthClass::Short);
}

TEST_CASE("G2 has 12 roots and highest root 3s1 + 2s2 with s1 short") {
  const auto rs = RootSystem::build({'G', 2});
  CHECK(rs->size() == 12);
  CHECK(rs->highest_root() == Root({3, 2}));
  CHECK(rs->length_class(simple_root(2, 0)) == LengthClass::Short);
  CHECK(rs->length_class(simple_root(2, 1)) == LengthClass::Long);
}

TEST_CASE("highest roots in Bourbaki numbering") {
  CHECK(RootSystem::build({'B', 3})->highest_root() == Root({1, 2, 2}));
  CHECK(RootSystem::build({'C', 3})->highest_root() == Root({2, 2, 1}));
  CHECK(RootSystem::build({'D', 4})->highest_root() == Root({1, 2, 1, 1}));
  CHECK(RootSystem::build({'F', 4})->highest_root() == Root({2, 3, 4, 2}));
  CHECK(RootSystem::build({'E', 6})->highest_root() == Root({1, 2, 2, 3, 2, 1}));
  CHECK(RootSystem::build({'E', 7})->highest_root() == Root({2, 2, 3, 4, 3, 2, 1}));
  CHECK(RootSystem::build({'E', 8})->highest_root() == Root({2, 3, 4, 6, 5, 4, 3, 2}));
}

TEST_CASE("root sets match the reflection closure of hand-written Cartan matrices") {
  const std::vector<std::pair<RootSystemType, std::vector<std::vector<int>>>> cases = {
      {{'A', 3}, {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}},
      {{'B', 3}, {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}},
      {{'C', 3}, {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}},
      {{'G', 2}, {{2, -1}, {-3, 2}}},
      {{'F', 4}, {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}}},
      {{'D', 4}, {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}},
  };
  for (const auto& [type, C] : cases) {
    CAPTURE(type.name());
    const auto rs = RootSystem::build(type);
    CHECK(rs->cartan_matrix() == C);
    CHECK(root_set(*rs) == reflection_closure(C));
  }
}

TEST_CASE("every admissible type up to rank 8: counts, closure, ordering") {
  for (const auto& type : admissible_types(8)) {
    CAPTURE(type.name());
    const auto rs = RootSystem::build(type);
    CHECK(rs->size() == expected_root_count(type));
    CHECK(root_set(*rs) == reflection_closure(rs->cartan_matrix()));
    CHECK(rs->dim_algebra() == rs->size() + rs->rank());

    const auto pos = rs->positive_roots();
    for (std::size_t k = 0; k < pos.size(); ++k) {
      CHECK(rs->root(rs->negative_index(k)) == -pos[k]);
      if (k > 0) CHECK(pos[k - 1].height() <= pos[k].height());
    }
    for (std::size_t i = 0; i < rs->rank(); ++i) CHECK(rs->root(i) == simple_root(rs->rank(), i));
  }
}

TEST_CASE("closed-form root counts") {
  CHECK(expected_root_count({'A', 4}) == 20);
  CHECK(expected_root_count({'B', 4}) == 32);
  CHECK(expected_root_count({'D', 5}) == 40);
  CHECK(expected_root_count({'E', 6}) == 72);
  CHECK(expected_root_count({'E', 7}) == 126);
  CHECK(expected_root_count({'E', 8}) == 240);
  CHECK(expected_root_count({'F', 4}) == 48);
}

TEST_CASE("coweight evaluation") {
  CHECK(Coweight({1, 0}).evaluate(Root({1, 0})) == 1);
  CHECK(Coweight({1, 0}).evaluate(Root({0, 1})) == 0);
  CHECK(Coweight({2, 1}).evaluate(Root({1, 1})) == 3);
  CHECK(Coweight({ratio(1, 2), ratio(-1, 3)}).evaluate(Root({2, 3})) == 0);
  CHECK_THROWS_AS(Coweight({1, 0, 0}).evaluate(Root({1, 1})), std::invalid_argument);
}

TEST_CASE("root_sum") {
  const auto rs = RootSystem::build({'A', 2});
  CHECK(rs->root_sum(Root({1, 0}), Root({0, 1})) == Root({1, 1}));
  CHECK_FALSE(rs->root_sum(Root({1, 0}), Root({1, 1})).has_value());
  for (const auto& a : rs->roots()) CHECK_FALSE(rs->root_sum(a, -a).has_value());
  CHECK_THROWS_AS(rs->root_sum(Root({2, 1}), Root({0, 1})), std::invalid_argument);
}

TEST_CASE("simply-laced coroots have the root's coordinates") {
  for (const auto& type : {RootSystemType{'A', 3}, RootSystemType{'D', 5}, RootSystemType{'E', 6}}) {
    const auto rs = RootSystem::build(type);
    for (const auto& a : rs->roots()) {
      const auto m = rs->coroot_coords(a);
      for (std::size_t i = 0; i < rs->rank(); ++i) CHECK(m[i] == a[i]);
    }
  }
}

TEST_CASE("type parsing and admissibility") {
  CHECK(parse_type("g2") == RootSystemType{'G', 2});
  CHECK(parse_type("E8") == RootSystemType{'E', 8});
  for (const char* bad : {"B1", "C1", "D3", "E5", "E9", "F3", "G3", "H3", "A0", "A", "", "Ax"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_type(bad), std::invalid_argument);
  }
  CHECK(admissible_types(2).size() == 5);  // A1 A2 B2 C2 G2
}
