#ifndef FLAGDOMAIN_ANALYSIS_HPP
#define FLAGDOMAIN_ANALYSIS_HPP

#include "flagdomain/exact.hpp"
#include "flagdomain/grading.hpp"
#include "flagdomain/roots.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace flagdomain {

/// An h-stable subspace of g_C: a set of full root spaces plus a subspace
/// of the Cartan subalgebra in simple-coroot coordinates.
class RootSupportedSubspace {
public:
  explicit RootSupportedSubspace(const RootSystem& rs);
  static RootSupportedSubspace from_roots(const RootSystem& rs, const RootSet& roots);

  bool has_root(std::size_t index) const { return support_[index]; }
  /// Returns true if the root was not already present.
  bool add_root(std::size_t index);
  bool add_cartan(const RationalVector& coroot_coords) { return cartan_.insert(coroot_coords); }

  RootSet root_support() const;
  std::size_t num_roots() const;
  const EchelonBasis& cartan_part() const { return cartan_; }
  std::size_t dimension() const { return num_roots() + cartan_.rank(); }
  bool contains_all(const RootSet& roots) const;

  friend bool operator==(const RootSupportedSubspace&, const RootSupportedSubspace&) = default;

private:
  std::vector<bool> support_;
  EchelonBasis cartan_;
};

/// Smallest subalgebra containing `seed`, computed on supports: roots are
/// closed under sums and a pair +-alpha contributes alpha^vee.
RootSupportedSubspace lie_closure(const RootSystem& rs, const RootSupportedSubspace& seed);

/// True iff the algebra generated by k_- + q_+ contains every negative root.
bool is_bracket_generating(const DomainSpec& spec);

struct GenerationSanity {
  bool by_levels_one_two = false;  // g_- generated by g_-1 + g_-2
  bool by_aux_level_one = false;  // g'_- generated by g'_-1
};
GenerationSanity generation_sanity(const DomainSpec& spec);

/// The ideal f = f_1 + f_0 + f_-1 built from the T'-level(-1) roots that
/// are not sums of a T'-level(1) root and a T'-level(-2) root.
struct FIdeal {
  RootSet gamma_set;  // positive representatives alpha with -alpha in the set
  RootSet f_plus;
  RootSet f_minus;
  RootSupportedSubspace f_zero;

  std::array<std::size_t, 3> dims() const { return {f_plus.size(), f_zero.dimension(), f_minus.size()}; }
  bool is_zero() const { return f_plus.empty(); }
  /// f as a subspace of g_C.
  RootSupportedSubspace as_subspace() const;
};
FIdeal compute_f(const DomainSpec& spec);

/// Roots whose T-level is even (the compact roots), in index order.
RootSet compact_roots(const DomainSpec& spec);

/// Basis of the coweights vanishing on every compact root.
std::vector<Coweight> compact_kernel(const DomainSpec& spec);

/// A nonzero central element of k_C, as a primitive integer coweight whose
/// first nonzero coefficient is positive; nullopt if k_C has no center.
std::optional<Coweight> hermitian_center(const DomainSpec& spec);

enum class Fibration { Holomorphic, Antiholomorphic, None };
std::string to_string(Fibration f);
Fibration parse_fibration(const std::string& s);

struct ClassificationReport {
  RootSystemType type;
  std::vector<Label> labels;
  std::size_t dim_g = 0, rank = 0, dim_k = 0, dim_q = 0;
  int depth = 0;
  std::size_t dimC_D = 0, dimC_Z = 0, dimC_U = 0;
  std::vector<std::size_t> real_tangent_dims;  // dim m_l = 2|levels(l)|, l = 1..depth
  bool hermitian_GK = false;
  Fibration fibration = Fibration::None;
  bool classical = false;
  std::array<std::size_t, 3> f_dims{0, 0, 0};
  bool bracket_generating = false;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

ClassificationReport classify(const DomainSpec& spec);

}  // namespace flagdomain

#endif
