#include "flagdomain/analysis.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace flagdomain {

RootSupportedSubspace::RootSupportedSubspace(const RootSystem& rs)
    : support_(rs.size(), false), cartan_(rs.rank()) {}

RootSupportedSubspace RootSupportedSubspace::from_roots(const RootSystem& rs, const RootSet& roots) {
  RootSupportedSubspace s(rs);
  for (std::size_t k : roots) s.add_root(k);
  return s;
}

bool RootSupportedSubspace::add_root(std::size_t index) {
  if (support_.at(index)) return false;
  support_[index] = true;
  return true;
}

RootSet RootSupportedSubspace::root_support() const {
  RootSet out;
  for (std::size_t k = 0; k < support_.size(); ++k)
    if (support_[k]) out.push_back(k);
  return out;
}

std::size_t RootSupportedSubspace::num_roots() const {
  return static_cast<std::size_t>(std::count(support_.begin(), support_.end(), true));
}

bool RootSupportedSubspace::contains_all(const RootSet& roots) const {
  return std::all_of(roots.begin(), roots.end(), [&](std::size_t k) { return support_[k]; });
}

RootSupportedSubspace lie_closure(const RootSystem& rs, const RootSupportedSubspace& seed) {
  RootSupportedSubspace out = seed;
  std::deque<std::size_t> pending;
  for (std::size_t k : seed.root_support()) pending.push_back(k);
  std::vector<std::size_t> processed;

  while (!pending.empty()) {
    const std::size_t a = pending.front();
    pending.pop_front();
    processed.push_back(a);
    for (std::size_t b : processed) {
      if (b == rs.negative_index(a)) out.add_cartan(rs.coroot_coords(rs.root(a)));
      if (auto s = rs.sum_index(a, b); s && out.add_root(*s)) pending.push_back(*s);
    }
  }
  return out;
}

bool is_bracket_generating(const DomainSpec& spec) {
  const RootSystem& rs = spec.root_system();
  const Splits s = split(spec);
  RootSet seed = s.k_minus;
  seed.insert(seed.end(), s.q_plus.begin(), s.q_plus.end());
  const auto closure = lie_closure(rs, RootSupportedSubspace::from_roots(rs, seed));
  return closure.contains_all(decompose(rs, grading_element(spec)).negative());
}

GenerationSanity generation_sanity(const DomainSpec& spec) {
  const RootSystem& rs = spec.root_system();
  GenerationSanity out;

  const GradedDecomposition g = decompose(rs, grading_element(spec));
  RootSet seed = g.level(-1);
  seed.insert(seed.end(), g.level(-2).begin(), g.level(-2).end());
  out.by_levels_one_two =
      lie_closure(rs, RootSupportedSubspace::from_roots(rs, seed)).contains_all(g.negative());

  const GradedDecomposition aux = decompose(rs, auxiliary_grading(spec));
  out.by_aux_level_one =
      lie_closure(rs, RootSupportedSubspace::from_roots(rs, aux.level(-1))).contains_all(aux.negative());
  return out;
}

RootSupportedSubspace FIdeal::as_subspace() const {
  RootSupportedSubspace s = f_zero;
  for (std::size_t k : f_plus) s.add_root(k);
  for (std::size_t k : f_minus) s.add_root(k);
  return s;
}

FIdeal compute_f(const DomainSpec& spec) {
  const RootSystem& rs = spec.root_system();
  const GradedDecomposition aux = decompose(rs, auxiliary_grading(spec));

  std::vector<bool> reachable(rs.size(), false);
  for (std::size_t a : aux.level(1))
    for (std::size_t b : aux.level(-2))
      if (auto s = rs.sum_index(a, b)) reachable[*s] = true;

  FIdeal f{{}, {}, {}, RootSupportedSubspace(rs)};
  for (std::size_t k : aux.level(-1)) {
    if (reachable[k]) continue;
    f.f_minus.push_back(k);
    f.f_plus.push_back(rs.negative_index(k));
  }
  std::sort(f.f_minus.begin(), f.f_minus.end());
  std::sort(f.f_plus.begin(), f.f_plus.end());
  f.gamma_set = f.f_plus;

  // f_0 = [f_1, f_-1], pairwise brackets only.
  for (std::size_t mu : f.f_plus) {
    for (std::size_t nu : f.f_minus) {
      if (nu == rs.negative_index(mu)) f.f_zero.add_cartan(rs.coroot_coords(rs.root(mu)));
      else if (auto s = rs.sum_index(mu, nu)) f.f_zero.add_root(*s);
    }
  }
  return f;
}

RootSet compact_roots(const DomainSpec& spec) {
  const RootSystem& rs = spec.root_system();
  const GradedDecomposition g = decompose(rs, grading_element(spec));
  RootSet out;
  for (std::size_t k = 0; k < rs.size(); ++k)
    if (g.level_of(k) % 2 == 0) out.push_back(k);
  return out;
}

std::vector<Coweight> compact_kernel(const DomainSpec& spec) {
  const RootSystem& rs = spec.root_system();
  std::vector<RationalVector> rows;
  for (std::size_t k : compact_roots(spec)) {
    if (k >= rs.num_positive()) continue;
    RationalVector row(rs.rank());
    for (std::size_t i = 0; i < rs.rank(); ++i) row[i] = rs.root(k)[i];
    rows.push_back(std::move(row));
  }
  std::vector<Coweight> out;
  for (auto& v : nullspace(rows, rs.rank())) out.emplace_back(std::move(v));
  return out;
}

namespace {

Coweight primitive(const Coweight& w) {
  mpz_class den_lcm = 1;
  for (const auto& c : w.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const auto& c : w.coeffs()) {
    ints.push_back(c.get_num() * (den_lcm / c.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  int sign = 1;
  for (const auto& v : ints)
    if (v != 0) {
      sign = v > 0 ? 1 : -1;
      break;
    }
  RationalVector out;
  for (const auto& v : ints) out.emplace_back(mpz_class(v / g * sign));
  return Coweight(std::move(out));
}

}  // namespace

std::optional<Coweight> hermitian_center(const DomainSpec& spec) {
  const auto kernel = compact_kernel(spec);
  if (kernel.empty()) return std::nullopt;
  return primitive(kernel.front());
}

std::string to_string(Fibration f) {
  switch (f) {
    case Fibration::Holomorphic: return "holomorphic";
    case Fibration::Antiholomorphic: return "antiholomorphic";
    case Fibration::None: return "none";
  }
  return "none";
}

Fibration parse_fibration(const std::string& s) {
  if (s == "holomorphic") return Fibration::Holomorphic;
  if (s == "antiholomorphic") return Fibration::Antiholomorphic;
  if (s == "none") return Fibration::None;
  throw std::invalid_argument("unknown fibration tag '" + s + "'");
}

ClassificationReport classify(const DomainSpec& spec) {
  const RootSystem& rs = spec.root_system();
  const GradedDecomposition g = decompose(rs, grading_element(spec));
  const Splits s = split(spec);

  ClassificationReport r;
  r.type = rs.type();
  r.labels = spec.labels();
  r.rank = rs.rank();
  r.dim_g = rs.dim_algebra();
  r.dim_q = s.q_plus.size() + s.q_minus.size();
  r.dim_k = r.dim_g - r.dim_q;
  r.depth = g.depth();
  r.dimC_D = g.negative().size();
  r.dimC_Z = s.k_minus.size();
  r.dimC_U = r.dim_q;
  for (int l = 1; l <= g.depth(); ++l) r.real_tangent_dims.push_back(2 * g.level(l).size());

  const auto center = hermitian_center(spec);
  r.hermitian_GK = center.has_value();
  if (center) {
    bool all_pos = true, all_neg = true;
    for (std::size_t k : s.q_plus) {
      const Rational v = center->evaluate(rs.root(k));
      all_pos = all_pos && v > 0;
      all_neg = all_neg && v < 0;
    }
    // H > 0 on q_+ means H < 0 on q_-.
    if (all_pos) r.fibration = Fibration::Holomorphic;
    else if (all_neg) r.fibration = Fibration::Antiholomorphic;
  }
  r.classical = r.fibration != Fibration::None;

  r.f_dims = compute_f(spec).dims();
  r.bracket_generating = is_bracket_generating(spec);
  return r;
}

}  // namespace flagdomain
