#include "flagdomain/chevalley.hpp"

#include <stdexcept>

namespace flagdomain {

BasisElement BasisElement::root_vector(const RootSystem& rs, const Root& alpha) {
  const auto idx = rs.index_of(alpha);
  if (!idx) throw std::invalid_argument("not a root: " + alpha.str());
  return {*idx, true};
}

BasisElement BasisElement::cartan(const RootSystem& rs, std::size_t i) {
  if (i >= rs.rank()) throw std::invalid_argument("Cartan index out of range");
  return {rs.size() + i, false};
}

BasisElement BasisElement::from_index(const RootSystem& rs, std::size_t index) {
  if (index >= rs.dim_algebra()) throw std::invalid_argument("basis index out of range");
  return {index, index < rs.size()};
}

LieElement LieElement::basis(const RootSystem& rs, std::size_t index, Rational coeff) {
  LieElement e(rs.type(), rs.dim_algebra());
  e.add(index, coeff);
  return e;
}

Rational LieElement::coeff(std::size_t index) const {
  auto it = coeffs_.find(index);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void LieElement::add(std::size_t index, const Rational& c) {
  if (c == 0) return;
  if (index >= dim_) throw std::invalid_argument("LieElement: index out of range");
  auto [it, inserted] = coeffs_.try_emplace(index, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

LieElement& LieElement::operator+=(const LieElement& other) {
  if (!(type_ == other.type_)) throw std::invalid_argument("LieElement: mismatched root systems");
  for (const auto& [k, c] : other.coeffs_) add(k, c);
  return *this;
}

LieElement LieElement::operator+(const LieElement& other) const {
  LieElement out = *this;
  out += other;
  return out;
}

LieElement LieElement::operator-(const LieElement& other) const { return *this + other * Rational(-1); }

LieElement LieElement::operator*(const Rational& c) const {
  LieElement out(type_, dim_);
  if (c == 0) return out;
  for (const auto& [k, v] : coeffs_) out.coeffs_.emplace(k, v * c);
  return out;
}

RationalVector LieElement::dense() const {
  RationalVector v(dim_, Rational(0));
  for (const auto& [k, c] : coeffs_) v[k] = c;
  return v;
}

namespace {

// Structure constants for every ordered pair of roots, built from the
// extraspecial signs. Relations used (Chevalley basis, [x_a, x_-a] = h_a):
//   N_{a,b} = -N_{b,a},  N_{-a,-b} = -N_{a,b},
//   a+b+c = 0  =>  N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b),
//   a+b+c+d = 0 (no opposite pair)  =>
//     N_{a,b}N_{c,d}/(a+b,a+b) + N_{b,c}N_{a,d}/(b+c,b+c) + N_{c,a}N_{b,d}/(c+a,c+a) = 0.
class ConstantBuilder {
public:
  explicit ConstantBuilder(const RootSystem& rs)
      : rs_(rs), m_(rs.size()), p_(rs.num_positive()), table_(m_ * m_, 0), known_(m_ * m_, false) {}

  std::vector<int> build() {
    std::vector<std::size_t> order(p_);
    for (std::size_t k = 0; k < p_; ++k) order[k] = k;  // already by height

    for (std::size_t xi : order) {
      if (rs_.root(xi).height() == 1) continue;
      // Extraspecial pair: smallest a with xi - a a positive root.
      std::size_t gamma = p_, delta = p_;
      for (std::size_t a = 0; a < p_ && gamma == p_; ++a) {
        auto d = rs_.index_of(rs_.root(xi) - rs_.root(a));
        if (d && *d < p_) {
          gamma = a;
          delta = *d;
        }
      }
      set(gamma, delta, string_p(gamma, delta) + 1);

      for (std::size_t a = 0; a < p_; ++a) {
        auto b = rs_.index_of(rs_.root(xi) - rs_.root(a));
        if (!b || *b >= p_ || a >= *b || a == gamma) continue;
        set(a, *b, derived(a, *b, xi, gamma, delta));
      }
    }

    for (std::size_t a = 0; a < m_; ++a)
      for (std::size_t b = 0; b < m_; ++b)
        if (rs_.sum_index(a, b)) table_[a * m_ + b] = general(a, b);
    return table_;
  }

private:
  long len(std::size_t k) const { return rs_.inner_product(rs_.root(k), rs_.root(k)); }

  int string_p(std::size_t a, std::size_t b) const {
    int p = 0;
    for (Root r = rs_.root(b) - rs_.root(a); rs_.contains(r); r = r - rs_.root(a)) ++p;
    return p;
  }

  void set(std::size_t a, std::size_t b, int n) {
    table_[a * m_ + b] = n;
    table_[b * m_ + a] = -n;
    known_[a * m_ + b] = known_[b * m_ + a] = true;
  }

  int positive_pair(std::size_t a, std::size_t b) const {
    if (!known_[a * m_ + b]) throw std::logic_error("structure constant requested before it was derived");
    return table_[a * m_ + b];
  }

  // N_{a,b} for arbitrary roots a, b with a+b a root, from positive pairs.
  int general(std::size_t a, std::size_t b) const {
    const bool pa = a < p_, pb = b < p_;
    if (pa && pb) return positive_pair(a, b);
    if (!pa && !pb) return -positive_pair(rs_.negative_index(a), rs_.negative_index(b));
    if (!pa) return -general(b, a);
    // a positive, b negative, c = -(a+b).
    const std::size_t s = *rs_.sum_index(a, b);
    const std::size_t c = rs_.negative_index(s);
    if (c >= p_) {
      // b, c negative: N_{a,b} = (c,c)/(a,a) N_{b,c} = -(c,c)/(a,a) N_{-b,-c}.
      const Rational v = ratio(-len(c), len(a)) * general(rs_.negative_index(b), s);
      return exact_int(v);
    }
    // c, a positive: N_{a,b} = (c,c)/(b,b) N_{c,a}.
    const Rational v = ratio(len(c), len(b)) * general(c, a);
    return exact_int(v);
  }

  int term(std::size_t a, std::size_t b) const {
    return rs_.sum_index(a, b) ? general(a, b) : 0;
  }

  int derived(std::size_t a, std::size_t b, std::size_t xi, std::size_t gamma, std::size_t delta) const {
    const std::size_t ng = rs_.negative_index(gamma), nd = rs_.negative_index(delta);
    Rational sum(0);
    if (auto e = rs_.sum_index(b, ng))
      sum += ratio(term(b, ng) * term(a, nd), len(*e));
    if (auto e = rs_.sum_index(a, ng))
      sum += ratio(term(ng, a) * term(b, nd), len(*e));
    const Rational v = ratio(len(xi), positive_pair(gamma, delta)) * sum;
    return exact_int(v);
  }

  static int exact_int(Rational v) {
    v.canonicalize();
    if (v.get_den() != 1) throw std::logic_error("non-integral structure constant");
    return static_cast<int>(v.get_num().get_si());
  }

  const RootSystem& rs_;
  std::size_t m_, p_;
  std::vector<int> table_;
  std::vector<bool> known_;
};

}  // namespace

StructureTable::StructureTable(RootSystemPtr rs) : rs_(std::move(rs)) {
  constants_ = ConstantBuilder(*rs_).build();
}

StructureTable::StructureTable(RootSystemPtr rs, std::vector<int> constants)
    : rs_(std::move(rs)), constants_(std::move(constants)) {
  if (constants_.size() != rs_->size() * rs_->size())
    throw std::invalid_argument("StructureTable: constant table has wrong size");
}

int StructureTable::constant(const Root& alpha, const Root& beta) const {
  const auto a = rs_->index_of(alpha), b = rs_->index_of(beta);
  if (!a || !b) throw std::invalid_argument("StructureTable: arguments must be roots");
  return constant(*a, *b);
}

std::map<std::pair<Root, Root>, int> StructureTable::constants() const {
  std::map<std::pair<Root, Root>, int> out;
  for (std::size_t a = 0; a < rs_->size(); ++a)
    for (std::size_t b = 0; b < rs_->size(); ++b)
      if (rs_->sum_index(a, b)) out.emplace(std::pair{rs_->root(a), rs_->root(b)}, constant(a, b));
  return out;
}

LieElement StructureTable::basis_bracket(std::size_t a, std::size_t b) const {
  const RootSystem& rs = *rs_;
  const std::size_t m = rs.size();
  LieElement out = LieElement::zero(rs);
  const bool ra = a < m, rb = b < m;
  if (!ra && !rb) return out;
  if (!ra) {  // [h_i, x_beta] = <beta, sigma_i^vee> x_beta
    out.add(b, rs.pairing(rs.root(b), a - m));
    return out;
  }
  if (!rb) {
    out.add(a, -rs.pairing(rs.root(a), b - m));
    return out;
  }
  if (b == rs.negative_index(a)) {  // [x_a, x_-a] = h_a
    const RationalVector co = rs.coroot_coords(rs.root(a));
    for (std::size_t i = 0; i < rs.rank(); ++i) out.add(m + i, co[i]);
    return out;
  }
  if (auto s = rs.sum_index(a, b)) out.add(*s, constant(a, b));
  return out;
}

LieElement bracket(const StructureTable& table, const LieElement& x, const LieElement& y) {
  const RootSystem& rs = table.root_system();
  if (!(x.type() == rs.type()) || !(y.type() == rs.type()) || x.dim() != rs.dim_algebra() ||
      y.dim() != rs.dim_algebra())
    throw std::invalid_argument("bracket: elements belong to a different root system");
  LieElement out = LieElement::zero(rs);
  for (const auto& [i, ci] : x.coeffs())
    for (const auto& [j, cj] : y.coeffs()) {
      const LieElement e = table.basis_bracket(i, j);
      for (const auto& [k, ck] : e.coeffs()) out.add(k, ci * cj * ck);
    }
  return out;
}

Rational killing_form(const StructureTable& table, const LieElement& x, const LieElement& y) {
  const RootSystem& rs = table.root_system();
  Rational trace(0);
  for (std::size_t k = 0; k < rs.dim_algebra(); ++k) {
    const LieElement ek = LieElement::basis(rs, k);
    trace += bracket(table, x, bracket(table, y, ek)).coeff(k);
  }
  return trace;
}

RealFormConjugation::RealFormConjugation(RootSystemPtr rs, std::vector<int> simple_parity)
    : rs_(std::move(rs)) {
  if (simple_parity.size() != rs_->rank()) throw std::invalid_argument("parity vector has wrong length");
  parity_.resize(rs_->size());
  for (std::size_t k = 0; k < rs_->size(); ++k) {
    int s = 0;
    for (std::size_t i = 0; i < rs_->rank(); ++i) s += rs_->root(k)[i] * simple_parity[i];
    parity_[k] = ((s % 2) + 2) % 2;
  }
}

int RealFormConjugation::parity(const Root& alpha) const {
  const auto idx = rs_->index_of(alpha);
  if (!idx) throw std::invalid_argument("parity: not a root");
  return parity_[*idx];
}

LieElement conjugate(const RealFormConjugation& c, const LieElement& x) {
  const RootSystem& rs = c.root_system();
  if (!(x.type() == rs.type())) throw std::invalid_argument("conjugate: mismatched root system");
  LieElement out = LieElement::zero(rs);
  for (const auto& [k, v] : x.coeffs()) {
    if (k < rs.size()) {
      const int sign = c.parity(k) == 0 ? -1 : 1;
      out.add(rs.negative_index(k), v * sign);
    } else {
      out.add(k, -v);
    }
  }
  return out;
}

}  // namespace flagdomain
