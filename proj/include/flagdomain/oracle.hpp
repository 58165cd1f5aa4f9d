#ifndef FLAGDOMAIN_ORACLE_HPP
#define FLAGDOMAIN_ORACLE_HPP

// Brute-force linear algebra over the Chevalley basis. Slow, but it only
// uses `bracket` and exact spans, so it checks the support-level shortcuts
// in analysis against the structure constants themselves.

#include "flagdomain/analysis.hpp"
#include "flagdomain/chevalley.hpp"
#include "flagdomain/exact.hpp"

#include <string>
#include <vector>

namespace flagdomain::oracle {

LieElement from_dense(const RootSystem& rs, const RationalVector& v);

/// Span of a root-supported subspace inside g_C (root vectors first,
/// then h_1..h_r, matching the basis order of LieElement).
EchelonBasis as_span(const RootSystem& rs, const RootSupportedSubspace& s);

/// Smallest bracket-closed subspace containing the given elements.
EchelonBasis span_closure(const StructureTable& table, const std::vector<LieElement>& seed);

/// Generators of a root-supported subspace: its root vectors and a basis
/// of its Cartan part.
std::vector<LieElement> generators(const RootSystem& rs, const RootSupportedSubspace& s);

/// True iff [g_C, s] is contained in s, checked on all basis pairs.
bool is_ideal(const StructureTable& table, const RootSupportedSubspace& s);

/// "x_(1,0)" or "h_2" (1-based).
std::string basis_name(const RootSystem& rs, std::size_t index);

}  // namespace flagdomain::oracle

#endif
