#ifndef FLAGDOMAIN_CHEVALLEY_HPP
#define FLAGDOMAIN_CHEVALLEY_HPP

#include "flagdomain/exact.hpp"
#include "flagdomain/roots.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace flagdomain {

/// One element of the Chevalley basis: a root vector x_alpha or a Cartan
/// element h_i = h_{sigma_i}.
///
/// The basis of g_C is indexed by position: root vectors in the order of
/// RootSystem::roots(), followed by h_1..h_r.
class BasisElement {
public:
  static BasisElement root_vector(const RootSystem& rs, const Root& alpha);
  static BasisElement cartan(const RootSystem& rs, std::size_t i);
  static BasisElement from_index(const RootSystem& rs, std::size_t index);

  std::size_t index() const { return index_; }
  bool is_root_vector() const { return is_root_; }
  bool is_cartan() const { return !is_root_; }

  friend auto operator<=>(const BasisElement&, const BasisElement&) = default;

private:
  BasisElement(std::size_t index, bool is_root) : index_(index), is_root_(is_root) {}

  std::size_t index_ = 0;
  bool is_root_ = true;
};

/// Finitely supported rational combination of basis elements.
class LieElement {
public:
  LieElement() = default;
  LieElement(RootSystemType type, std::size_t dim) : type_(type), dim_(dim) {}

  static LieElement basis(const RootSystem& rs, std::size_t index, Rational coeff = 1);
  static LieElement basis(const RootSystem& rs, const BasisElement& e, Rational coeff = 1) {
    return basis(rs, e.index(), std::move(coeff));
  }
  static LieElement zero(const RootSystem& rs) { return {rs.type(), rs.dim_algebra()}; }

  const RootSystemType& type() const { return type_; }
  std::size_t dim() const { return dim_; }
  const std::map<std::size_t, Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(std::size_t index) const;

  /// Adds c * e_index, dropping the entry if it cancels.
  void add(std::size_t index, const Rational& c);

  LieElement& operator+=(const LieElement& other);
  LieElement operator+(const LieElement& other) const;
  LieElement operator-(const LieElement& other) const;
  LieElement operator*(const Rational& c) const;

  /// Dense coordinate vector of length dim().
  RationalVector dense() const;

  friend bool operator==(const LieElement&, const LieElement&) = default;

private:
  RootSystemType type_;
  std::size_t dim_ = 0;
  std::map<std::size_t, Rational> coeffs_;
};

/// Integer structure constants N_{alpha,beta} of a Chevalley basis:
/// [x_a, x_b] = N_{a,b} x_{a+b} when a+b is a root.
///
/// Signs follow the extraspecial-pair convention: for each positive
/// non-simple root xi, the pair (a, xi - a) with a minimal in the root
/// order gets N = +(p+1). All other constants are derived from those.
class StructureTable {
public:
  explicit StructureTable(RootSystemPtr rs);
  /// Table with explicitly supplied constants, indexed [i * size + j] by
  /// root index. Used to build perturbed tables for fault injection.
  StructureTable(RootSystemPtr rs, std::vector<int> constants);

  const RootSystem& root_system() const { return *rs_; }
  const RootSystemPtr& root_system_ptr() const { return rs_; }

  /// N_{root(i), root(j)}; zero when the sum is not a root.
  int constant(std::size_t i, std::size_t j) const { return constants_[i * rs_->size() + j]; }
  int constant(const Root& alpha, const Root& beta) const;
  const std::vector<int>& raw() const { return constants_; }

  /// All (alpha, beta) -> N with alpha + beta a root.
  std::map<std::pair<Root, Root>, int> constants() const;

  /// Bracket of two basis elements by index.
  LieElement basis_bracket(std::size_t a, std::size_t b) const;

private:
  RootSystemPtr rs_;
  std::vector<int> constants_;
};

/// Bilinear bracket. Throws std::invalid_argument when either element was
/// built over a different root system.
LieElement bracket(const StructureTable& table, const LieElement& x, const LieElement& y);

/// Killing form B(x, y) = trace(ad x . ad y), computed over the basis.
Rational killing_form(const StructureTable& table, const LieElement& x, const LieElement& y);

/// Antilinear involution of g_C fixing a real form of equal rank:
/// x_alpha -> -(-1)^parity(alpha) x_{-alpha}, h -> -h.
class RealFormConjugation {
public:
  /// `simple_parity[i]` in {0,1}; parity extends additively mod 2.
  RealFormConjugation(RootSystemPtr rs, std::vector<int> simple_parity);

  int parity(const Root& alpha) const;
  int parity(std::size_t root_index) const { return parity_[root_index]; }
  const RootSystem& root_system() const { return *rs_; }

private:
  RootSystemPtr rs_;
  std::vector<int> parity_;
};

LieElement conjugate(const RealFormConjugation& c, const LieElement& x);

}  // namespace flagdomain

#endif
