#ifndef FLAGDOMAIN_EXACT_HPP
#define FLAGDOMAIN_EXACT_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace flagdomain {

/// Arbitrary-precision rational used by every symbolic module.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

std::string to_string(const Rational& q);

/// num/den in canonical form; GMP arithmetic requires canonical operands.
/// Throws std::domain_error when den == 0.
Rational ratio(long num, long den);

/// A subspace of Q^n kept in reduced row echelon form.
///
/// Two subspaces are equal iff their echelon bases are equal, so the basis
/// doubles as a canonical representative.
class EchelonBasis {
public:
  explicit EchelonBasis(std::size_t ambient_dim = 0) : dim_(ambient_dim) {}

  std::size_t ambient_dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }
  const std::vector<RationalVector>& rows() const { return rows_; }

  /// Adds v to the span. Returns true if the span grew.
  bool insert(const RationalVector& v);
  bool contains(const RationalVector& v) const;

  bool operator==(const EchelonBasis& other) const {
    return dim_ == other.dim_ && rows_ == other.rows_;
  }

private:
  /// Reduces v against the current rows; returns the remainder.
  RationalVector reduce(RationalVector v) const;

  std::size_t dim_;
  std::vector<RationalVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Basis of { x : A x = 0 } for a row-major matrix A with `cols` columns.
std::vector<RationalVector> nullspace(const std::vector<RationalVector>& rows,
                                      std::size_t cols);

}  // namespace flagdomain

#endif
