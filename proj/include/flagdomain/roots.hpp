#ifndef FLAGDOMAIN_ROOTS_HPP
#define FLAGDOMAIN_ROOTS_HPP

#include "flagdomain/exact.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace flagdomain {

/// Cartan-Killing type of an irreducible reduced root system.
///
/// Admissible pairs: A(n>=1), B(n>=2), C(n>=2), D(n>=4), E(6,7,8), F(4), G(2).
struct RootSystemType {
  char family = 'A';
  int rank = 1;

  bool admissible() const;
  /// Throws std::invalid_argument with a diagnostic when not admissible.
  void validate() const;
  std::string name() const;  // e.g. "C2"

  friend bool operator==(const RootSystemType&, const RootSystemType&) = default;
};

/// Parses "A2", "g2", "E8", ... Throws std::invalid_argument.
RootSystemType parse_type(const std::string& text);

/// A root written in simple-root coordinates, alpha = sum n_i sigma_i.
class Root {
public:
  Root() = default;
  explicit Root(std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {}

  const std::vector<int>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  int operator[](std::size_t i) const { return coeffs_[i]; }

  int height() const;
  bool is_zero() const;
  bool is_positive() const;  // nonzero with all n_i >= 0

  Root operator-() const;
  Root operator+(const Root& other) const;
  Root operator-(const Root& other) const;

  std::string str() const;  // "(1,0,2)"

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;

private:
  std::vector<int> coeffs_;
};

/// Simple root of the given rank: sigma_i (0-based index).
Root simple_root(std::size_t rank, std::size_t i);

/// A rational combination sum c_i T^i of the basis dual to the simple roots.
class Coweight {
public:
  Coweight() = default;
  explicit Coweight(RationalVector coeffs) : coeffs_(std::move(coeffs)) {}

  const RationalVector& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  bool is_zero() const;

  /// sum c_i n_i. Throws std::invalid_argument on rank mismatch.
  Rational evaluate(const Root& alpha) const;

  friend bool operator==(const Coweight&, const Coweight&) = default;

private:
  RationalVector coeffs_;
};

enum class LengthClass { Long, Short };

/// Full root system of an irreducible type in simple-root coordinates.
///
/// Simple roots follow Bourbaki numbering. Roots are stored with the
/// positive roots first, ordered by height and, within a height, by
/// descending lexicographic order of the coefficient vector (so sigma_1
/// precedes sigma_2); the negative roots follow in the same order, so
/// index i + num_positive() holds the negative of index i.
///
/// The Cartan matrix is C[i][j] = 2(sigma_i, sigma_j) / (sigma_j, sigma_j),
/// so that s_j(alpha) = alpha - (sum_i n_i C[i][j]) sigma_j.
class RootSystem {
public:
  static std::shared_ptr<const RootSystem> build(const RootSystemType& type);

  const RootSystemType& type() const { return type_; }
  std::size_t rank() const { return static_cast<std::size_t>(type_.rank); }
  std::size_t size() const { return roots_.size(); }
  std::size_t num_positive() const { return roots_.size() / 2; }
  /// Dimension of the complex simple Lie algebra.
  std::size_t dim_algebra() const { return roots_.size() + rank(); }

  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  /// Integer-scaled symmetric form (sigma_i, sigma_j).
  const std::vector<std::vector<int>>& gram() const { return gram_; }

  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(std::size_t index) const { return roots_[index]; }
  std::vector<Root> positive_roots() const;
  const Root& highest_root() const { return roots_[num_positive() - 1]; }

  std::optional<std::size_t> index_of(const Root& alpha) const;
  bool contains(const Root& alpha) const { return index_of(alpha).has_value(); }
  /// Index of -root(index).
  std::size_t negative_index(std::size_t index) const;
  /// Index of root(i) + root(j) when that is a root, nullopt otherwise.
  std::optional<std::size_t> sum_index(std::size_t i, std::size_t j) const;

  /// (alpha, beta) in the integer scaling of gram().
  long inner_product(const Root& alpha, const Root& beta) const;
  /// <alpha, sigma_i^vee> = sum_j n_j C[j][i].
  int pairing(const Root& alpha, std::size_t i) const;
  /// Simple reflection s_i(alpha).
  Root reflect(const Root& alpha, std::size_t i) const;
  LengthClass length_class(const Root& alpha) const;

  /// alpha + beta if it is a root; nullopt if it is not (including zero).
  /// Throws std::invalid_argument if either input is not a root.
  std::optional<Root> root_sum(const Root& alpha, const Root& beta) const;

  /// Coordinates of alpha^vee in the simple-coroot basis.
  RationalVector coroot_coords(const Root& alpha) const;

private:
  RootSystem() = default;

  RootSystemType type_;
  std::vector<std::vector<int>> gram_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> roots_;
  std::map<Root, std::size_t> index_;
  std::vector<int> sum_table_;  // size()^2, -1 when absent
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Closed-form number of roots for the type.
std::size_t expected_root_count(const RootSystemType& type);

/// Every admissible type with rank in [1, max_rank].
std::vector<RootSystemType> admissible_types(int max_rank);

}  // namespace flagdomain

#endif
