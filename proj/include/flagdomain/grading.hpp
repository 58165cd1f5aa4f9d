#ifndef FLAGDOMAIN_GRADING_HPP
#define FLAGDOMAIN_GRADING_HPP

#include "flagdomain/chevalley.hpp"
#include "flagdomain/roots.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace flagdomain {

/// Sorted indices into RootSystem::roots().
using RootSet = std::vector<std::size_t>;

/// Role of a simple root: V lies in the isotropy algebra v, K is compact
/// but outside v, Q is noncompact.
enum class Label : char { V = 'V', K = 'K', Q = 'Q' };

char to_char(Label l);
Label parse_label(char c);
std::vector<Label> parse_labels(const std::string& text);  // "K,Q" or "KQ"
std::string format_labels(const std::vector<Label>& labels);  // "K,Q"

/// A flag domain G/V of an equal-rank real form: simple-root labels fix
/// the real form (through the parity of Q-coefficients) and the parabolic.
class DomainSpec {
public:
  /// Throws std::invalid_argument on wrong length or when no root is
  /// labeled Q ("no noncompact simple root").
  DomainSpec(RootSystemPtr rs, std::vector<Label> labels);

  const RootSystem& root_system() const { return *rs_; }
  const RootSystemPtr& root_system_ptr() const { return rs_; }
  const std::vector<Label>& labels() const { return labels_; }

  /// Parity vector on simple roots (1 for Q) for RealFormConjugation.
  std::vector<int> simple_parity() const;

private:
  RootSystemPtr rs_;
  std::vector<Label> labels_;
};

/// T = sum_{Q} T^i + 2 sum_{K} T^i.
Coweight grading_element(const DomainSpec& spec);
/// T' = sum_{Q} T^i.
Coweight auxiliary_grading(const DomainSpec& spec);

/// Eigenspace decomposition of g_C under an integral coweight. The Cartan
/// subalgebra always sits in level 0 and is not listed among the roots.
class GradedDecomposition {
public:
  const std::map<int, RootSet>& levels() const { return levels_; }
  /// Roots at level l (empty if none).
  const RootSet& level(int l) const;
  int depth() const { return depth_; }
  /// Level of the root with the given index.
  int level_of(std::size_t root_index) const { return level_of_[root_index]; }
  /// All roots at negative (resp. positive) levels.
  RootSet negative() const;
  RootSet positive() const;

private:
  friend GradedDecomposition decompose(const RootSystem& rs, const Coweight& w);

  std::map<int, RootSet> levels_;
  std::vector<int> level_of_;
  int depth_ = 0;
};

/// Throws std::invalid_argument if w is not integral on every root.
GradedDecomposition decompose(const RootSystem& rs, const Coweight& w);

/// The k/q/v bookkeeping of a domain.
struct Splits {
  RootSet v_roots;  // level 0
  RootSet k_plus, k_minus;  // even nonzero levels
  RootSet q_plus, q_minus;  // odd levels
  RootSet p_roots;  // levels >= 0
  RootSet kcap_p;  // even levels >= 0
};

Splits split(const DomainSpec& spec);

/// Every labeling in {K,Q,V}^rank in lexicographic order, valid or not.
std::vector<std::vector<Label>> all_labelings(std::size_t rank);
bool is_valid_labeling(const std::vector<Label>& labels);

}  // namespace flagdomain

#endif
