#include "flagdomain/exact.hpp"

#include <algorithm>
#include <stdexcept>

namespace flagdomain {

Rational ratio(long num, long den) {
  if (den == 0) throw std::domain_error("ratio: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

RationalVector EchelonBasis::reduce(RationalVector v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (v[p] == 0) continue;
    const Rational factor = v[p];
    for (std::size_t j = p; j < dim_; ++j) v[j] -= factor * rows_[r][j];
  }
  return v;
}

bool EchelonBasis::insert(const RationalVector& v) {
  if (v.size() != dim_) throw std::invalid_argument("EchelonBasis: dimension mismatch");
  RationalVector rem = reduce(v);
  auto it = std::find_if(rem.begin(), rem.end(), [](const Rational& q) { return q != 0; });
  if (it == rem.end()) return false;
  const std::size_t p = static_cast<std::size_t>(it - rem.begin());
  const Rational lead = rem[p];
  for (std::size_t j = p; j < dim_; ++j) rem[j] /= lead;
  // Clear the new pivot column from the existing rows.
  for (auto& row : rows_) {
    if (row[p] == 0) continue;
    const Rational factor = row[p];
    for (std::size_t j = p; j < dim_; ++j) row[j] -= factor * rem[j];
  }
  const auto pos = static_cast<std::size_t>(
      std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin());
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(rem));
  return true;
}

bool EchelonBasis::contains(const RationalVector& v) const {
  if (v.size() != dim_) throw std::invalid_argument("EchelonBasis: dimension mismatch");
  const RationalVector rem = reduce(v);
  return std::all_of(rem.begin(), rem.end(), [](const Rational& q) { return q == 0; });
}

std::vector<RationalVector> nullspace(const std::vector<RationalVector>& rows,
                                      std::size_t cols) {
  EchelonBasis ech(cols);
  for (const auto& r : rows) ech.insert(r);

  std::vector<bool> is_pivot(cols, false);
  std::vector<std::size_t> pivot_of_row;
  for (const auto& r : ech.rows()) {
    const auto p = static_cast<std::size_t>(
        std::find_if(r.begin(), r.end(), [](const Rational& q) { return q != 0; }) - r.begin());
    is_pivot[p] = true;
    pivot_of_row.push_back(p);
  }

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector x(cols, Rational(0));
    x[free] = 1;
    for (std::size_t r = 0; r < ech.rows().size(); ++r) x[pivot_of_row[r]] = -ech.rows()[r][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace flagdomain
