#include "flagdomain/oracle.hpp"

namespace flagdomain::oracle {

LieElement from_dense(const RootSystem& rs, const RationalVector& v) {
  LieElement out = LieElement::zero(rs);
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) out.add(k, v[k]);
  return out;
}

std::vector<LieElement> generators(const RootSystem& rs, const RootSupportedSubspace& s) {
  std::vector<LieElement> out;
  for (std::size_t k : s.root_support()) out.push_back(LieElement::basis(rs, k));
  for (const auto& row : s.cartan_part().rows()) {
    LieElement h = LieElement::zero(rs);
    for (std::size_t i = 0; i < row.size(); ++i)
      if (row[i] != 0) h.add(rs.size() + i, row[i]);
    out.push_back(std::move(h));
  }
  return out;
}

EchelonBasis as_span(const RootSystem& rs, const RootSupportedSubspace& s) {
  EchelonBasis span(rs.dim_algebra());
  for (const auto& g : generators(rs, s)) span.insert(g.dense());
  return span;
}

EchelonBasis span_closure(const StructureTable& table, const std::vector<LieElement>& seed) {
  const RootSystem& rs = table.root_system();
  EchelonBasis span(rs.dim_algebra());
  std::vector<LieElement> accepted;
  std::vector<LieElement> pending;
  for (const auto& x : seed)
    if (span.insert(x.dense())) pending.push_back(x);

  while (!pending.empty()) {
    const LieElement x = pending.back();
    pending.pop_back();
    accepted.push_back(x);
    for (const auto& y : accepted) {
      const LieElement z = bracket(table, x, y);
      if (!z.is_zero() && span.insert(z.dense())) pending.push_back(z);
    }
  }
  return span;
}

bool is_ideal(const StructureTable& table, const RootSupportedSubspace& s) {
  const RootSystem& rs = table.root_system();
  const EchelonBasis span = as_span(rs, s);
  for (const auto& g : generators(rs, s))
    for (std::size_t k = 0; k < rs.dim_algebra(); ++k)
      if (!span.contains(bracket(table, LieElement::basis(rs, k), g).dense())) return false;
  return true;
}

std::string basis_name(const RootSystem& rs, std::size_t index) {
  if (index < rs.size()) return "x_" + rs.root(index).str();
  return "h_" + std::to_string(index - rs.size() + 1);
}

}  // namespace flagdomain::oracle
