#include "flagdomain/selftest.hpp"

#include "flagdomain/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace flagdomain {

void SelftestReport::record(const std::string& suite, const std::string& invariant, bool ok,
                            const std::function<std::string()>& witness) {
  auto key = std::make_pair(suite, invariant);
  auto it = index_.find(key);
  if (it == index_.end()) {
    it = index_.emplace(key, checks_.size()).first;
    checks_.push_back({suite, invariant, 0, 0, {}});
  }
  InvariantCheck& c = checks_[it->second];
  ++c.cases;
  if (ok) return;
  ++c.failures;
  if (c.witnesses.size() < 3) c.witnesses.push_back(witness());
}

bool SelftestReport::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const InvariantCheck& c) { return c.passed(); });
}

const InvariantCheck* SelftestReport::find(const std::string& suite, const std::string& invariant) const {
  auto it = index_.find({suite, invariant});
  return it == index_.end() ? nullptr : &checks_[it->second];
}

namespace {

std::string spec_name(const DomainSpec& spec) {
  return spec.root_system().type().name() + " labels " + format_labels(spec.labels());
}

LieElement jacobiator(const StructureTable& t, std::size_t a, std::size_t b, std::size_t c) {
  const RootSystem& rs = t.root_system();
  const LieElement x = LieElement::basis(rs, a), y = LieElement::basis(rs, b), z = LieElement::basis(rs, c);
  return bracket(t, x, bracket(t, y, z)) + bracket(t, y, bracket(t, z, x)) + bracket(t, z, bracket(t, x, y));
}

// p = max{k >= 0 : beta - k alpha is a root}.
int string_start(const RootSystem& rs, const Root& alpha, const Root& beta) {
  int p = 0;
  Root r = beta - alpha;
  while (rs.contains(r)) {
    ++p;
    r = r - alpha;
  }
  return p;
}

bool is_nonnegative(const Root& r) {
  return std::all_of(r.coeffs().begin(), r.coeffs().end(), [](int n) { return n >= 0; });
}

}  // namespace

std::optional<std::array<std::size_t, 3>> find_jacobi_violation(const StructureTable& table,
                                                                std::size_t samples) {
  const std::size_t d = table.root_system().dim_algebra();
  if (samples == 0) {
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = a + 1; b < d; ++b)
        for (std::size_t c = b + 1; c < d; ++c)
          if (!jacobiator(table, a, b, c).is_zero()) return std::array<std::size_t, 3>{a, b, c};
    return std::nullopt;
  }
  std::mt19937_64 eng(0x6a61636f6269ULL + d);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t a = eng() % d, b = eng() % d, c = eng() % d;
    if (!jacobiator(table, a, b, c).is_zero()) return std::array<std::size_t, 3>{a, b, c};
  }
  return std::nullopt;
}

void check_root_system(const RootSystem& rs, SelftestReport& report) {
  const std::string name = rs.type().name();
  const std::string suite = "roots";

  report.record(suite, "root count matches closed form", rs.size() == expected_root_count(rs.type()),
                [&] { return name + ": " + std::to_string(rs.size()) + " roots"; });

  for (std::size_t k = 0; k < rs.size(); ++k) {
    const Root& a = rs.root(k);
    const bool pure = is_nonnegative(a) || is_nonnegative(-a);
    report.record(suite, "coefficients have one sign", pure && !a.is_zero(), [&] { return name + " " + a.str(); });
    report.record(suite, "closed under negation", rs.contains(-a), [&] { return name + " " + a.str(); });
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      report.record(suite, "closed under simple reflections", rs.contains(rs.reflect(a, i)),
                    [&] { return name + " s_" + std::to_string(i + 1) + a.str(); });
    }
  }

  const Root& top = rs.highest_root();
  for (const Root& a : rs.positive_roots()) {
    report.record(suite, "highest root dominates", is_nonnegative(top - a),
                  [&] { return name + " " + top.str() + " vs " + a.str(); });
    if (a.height() == 1) continue;
    bool descends = false;
    for (std::size_t i = 0; i < rs.rank(); ++i) descends = descends || rs.contains(a - simple_root(rs.rank(), i));
    report.record(suite, "height descent", descends, [&] { return name + " " + a.str(); });
  }

  // evaluate(c1 w1 + c2 w2, a + b) expands bilinearly.
  std::mt19937_64 eng(0x726f6f7473ULL + rs.rank());
  auto small = [&] { return ratio(static_cast<long>(eng() % 7) - 3, static_cast<long>(eng() % 3) + 1); };
  for (int trial = 0; trial < 20; ++trial) {
    RationalVector c1(rs.rank()), c2(rs.rank()), sum(rs.rank());
    const Rational s1 = small(), s2 = small();
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      c1[i] = small();
      c2[i] = small();
      sum[i] = s1 * c1[i] + s2 * c2[i];
    }
    const Coweight w1(c1), w2(c2), w(sum);
    const Root& a = rs.root(eng() % rs.size());
    const Root& b = rs.root(eng() % rs.size());
    const Rational lhs = w.evaluate(a) + w.evaluate(b);
    const Rational rhs = s1 * (w1.evaluate(a) + w1.evaluate(b)) + s2 * (w2.evaluate(a) + w2.evaluate(b));
    report.record(suite, "evaluate is bilinear", lhs == rhs, [&] { return name + " trial " + std::to_string(trial); });
  }
}

void check_structure_table(const StructureTable& table, SelftestReport& report, std::size_t jacobi_samples) {
  const RootSystem& rs = table.root_system();
  const std::string name = rs.type().name();
  const std::string suite = "chevalley";
  const std::size_t d = rs.dim_algebra();

  const auto bad = find_jacobi_violation(table, jacobi_samples);
  report.record(suite, "Jacobi identity", !bad, [&] {
    return name + " triple (" + oracle::basis_name(rs, (*bad)[0]) + ", " + oracle::basis_name(rs, (*bad)[1]) +
           ", " + oracle::basis_name(rs, (*bad)[2]) + ")";
  });

  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a; b < d; ++b) {
      const bool ok = table.basis_bracket(a, b) == table.basis_bracket(b, a) * Rational(-1);
      report.record(suite, "bracket is antisymmetric", ok, [&] {
        return name + " [" + oracle::basis_name(rs, a) + ", " + oracle::basis_name(rs, b) + "]";
      });
    }

  for (std::size_t i = 0; i < rs.size(); ++i)
    for (std::size_t j = 0; j < rs.size(); ++j) {
      if (!rs.sum_index(i, j)) continue;
      const int n = table.constant(i, j);
      const int p = string_start(rs, rs.root(i), rs.root(j));
      report.record(suite, "|N(a,b)| = p+1", std::abs(n) == p + 1, [&] {
        return name + " N" + rs.root(i).str() + rs.root(j).str() + " = " + std::to_string(n) + ", p = " +
               std::to_string(p);
      });
      report.record(suite, "N(a,b) = -N(b,a)", n == -table.constant(j, i),
                    [&] { return name + " " + rs.root(i).str() + ", " + rs.root(j).str(); });
    }
}

void check_real_forms(const StructureTable& table, const std::vector<std::vector<int>>& parities,
                      SelftestReport& report) {
  const RootSystem& rs = table.root_system();
  const std::string suite = "chevalley";
  const std::size_t d = rs.dim_algebra();

  // B(x_a, x_-a) and B(h_i, h_i) once; conjugates are multiples of these.
  std::vector<Rational> pair_form(d);
  for (std::size_t k = 0; k < rs.size(); ++k)
    pair_form[k] = killing_form(table, LieElement::basis(rs, k), LieElement::basis(rs, rs.negative_index(k)));
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    const LieElement h = LieElement::basis(rs, rs.size() + i);
    pair_form[rs.size() + i] = killing_form(table, h, h);
  }

  for (const auto& parity : parities) {
    const RealFormConjugation conj(table.root_system_ptr(), parity);
    std::string pname = rs.type().name() + " parity ";
    for (int p : parity) pname += std::to_string(p);

    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < rs.size(); ++j)
        if (auto s = rs.sum_index(i, j))
          report.record(suite, "parity is additive", conj.parity(*s) == (conj.parity(i) + conj.parity(j)) % 2,
                        [&] { return pname + " " + rs.root(i).str() + " + " + rs.root(j).str(); });

    std::vector<LieElement> image(d);
    for (std::size_t k = 0; k < d; ++k) {
      const LieElement e = LieElement::basis(rs, k);
      image[k] = conjugate(conj, e);
      report.record(suite, "conjugation is an involution", conjugate(conj, image[k]) == e,
                    [&] { return pname + " " + oracle::basis_name(rs, k); });

      // image[k] is c * x_-a (or c * h_i), so B(e, image) = c * pair_form.
      const auto& [idx, c] = *image[k].coeffs().begin();
      const Rational b = c * pair_form[k];
      const bool compact = k >= rs.size() || conj.parity(k) == 0;
      report.record(suite, "Killing sign law", compact ? b < 0 : b > 0, [&] {
        return pname + " " + oracle::basis_name(rs, k) + " B = " + to_string(b);
      });
      if (k < rs.size())
        report.record(suite, "conjugation maps x_a to the -a line",
                      image[k].coeffs().size() == 1 && idx == rs.negative_index(k),
                      [&] { return pname + " " + oracle::basis_name(rs, k); });
    }

    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = a + 1; b < d; ++b) {
        const bool ok = conjugate(conj, table.basis_bracket(a, b)) == bracket(table, image[a], image[b]);
        report.record(suite, "conjugation is an automorphism", ok, [&] {
          return pname + " [" + oracle::basis_name(rs, a) + ", " + oracle::basis_name(rs, b) + "]";
        });
      }
  }
}

void check_grading(const DomainSpec& spec, SelftestReport& report) {
  const RootSystem& rs = spec.root_system();
  const std::string suite = "grading";
  const std::string name = spec_name(spec);
  const GradedDecomposition g = decompose(rs, grading_element(spec));
  const GradedDecomposition aux = decompose(rs, auxiliary_grading(spec));
  const Splits s = split(spec);

  std::size_t listed = 0;
  for (const auto& [l, roots] : g.levels()) {
    listed += roots.size();
    RootSet mirrored;
    for (std::size_t k : roots) mirrored.push_back(rs.negative_index(k));
    std::sort(mirrored.begin(), mirrored.end());
    report.record(suite, "levels(-l) = -levels(l)", mirrored == g.level(-l),
                  [&] { return name + " level " + std::to_string(l); });
  }
  report.record(suite, "levels partition the roots", listed == rs.size(), [&] { return name; });
  report.record(suite, "level sizes plus rank give dim g", listed + rs.rank() == rs.dim_algebra(),
                [&] { return name; });

  for (std::size_t k = 0; k < rs.size(); ++k) {
    report.record(suite, "T-parity equals T'-parity", (g.level_of(k) - aux.level_of(k)) % 2 == 0,
                  [&] { return name + " root " + rs.root(k).str(); });
    for (std::size_t j = 0; j < rs.size(); ++j)
      if (auto sum = rs.sum_index(k, j))
        report.record(suite, "grading is additive", g.level_of(*sum) == g.level_of(k) + g.level_of(j),
                      [&] { return name + " " + rs.root(k).str() + " + " + rs.root(j).str(); });
  }

  auto negated = [&](const RootSet& r) {
    RootSet out;
    for (std::size_t k : r) out.push_back(rs.negative_index(k));
    std::sort(out.begin(), out.end());
    return out;
  };
  report.record(suite, "k_minus = -k_plus", negated(s.k_plus) == s.k_minus, [&] { return name; });
  report.record(suite, "q_minus = -q_plus", negated(s.q_plus) == s.q_minus, [&] { return name; });
  std::size_t even = 0, odd = 0;
  for (std::size_t k = 0; k < rs.size(); ++k) (g.level_of(k) % 2 == 0 ? even : odd)++;
  report.record(suite, "splits cover even and odd levels",
                s.k_plus.size() + s.k_minus.size() + s.v_roots.size() == even &&
                    s.q_plus.size() + s.q_minus.size() == odd,
                [&] { return name; });
}

void check_analysis(const DomainSpec& spec, const StructureTable& table, SelftestReport& report,
                    bool brute_force) {
  const RootSystem& rs = spec.root_system();
  const std::string suite = "analysis";
  const std::string name = spec_name(spec);
  const ClassificationReport r = classify(spec);
  const FIdeal f = compute_f(spec);
  const Splits s = split(spec);
  const GradedDecomposition g = decompose(rs, grading_element(spec));
  const GradedDecomposition aux = decompose(rs, auxiliary_grading(spec));

  const bool f_nonzero = !f.is_zero();
  report.record(suite, "classical <=> f != 0 <=> not bracket generating",
                r.classical == f_nonzero && f_nonzero == !r.bracket_generating, [&] {
                  return name + " classical=" + (r.classical ? "1" : "0") + " f_nonzero=" + (f_nonzero ? "1" : "0") +
                         " bracket_generating=" + (r.bracket_generating ? "1" : "0");
                });

  const GenerationSanity gs = generation_sanity(spec);
  report.record(suite, "g_- generated by g_-1 + g_-2", gs.by_levels_one_two, [&] { return name; });
  report.record(suite, "g'_- generated by g'_-1", gs.by_aux_level_one, [&] { return name; });

  report.record(suite, "dimC_D = dimC_Z + dim_q/2", r.dimC_D == r.dimC_Z + r.dim_q / 2, [&] { return name; });
  report.record(suite, "dimC_D = number of negative roots", r.dimC_D == g.negative().size(), [&] { return name; });
  report.record(suite, "dimC_Z = |k_minus|", r.dimC_Z == s.k_minus.size(), [&] { return name; });
  report.record(suite, "classical = (fibration != none)", r.classical == (r.fibration != Fibration::None),
                [&] { return name; });

  RootSet negated_plus;
  for (std::size_t k : f.f_plus) negated_plus.push_back(rs.negative_index(k));
  std::sort(negated_plus.begin(), negated_plus.end());
  report.record(suite, "f_minus = -f_plus", negated_plus == f.f_minus, [&] { return name; });

  // [f_1, g'_1] = 0.
  for (std::size_t mu : f.f_plus)
    for (std::size_t b : aux.level(1))
      report.record(suite, "[f_1, g'_1] = 0", !rs.sum_index(mu, b),
                    [&] { return name + " " + rs.root(mu).str() + " + " + rs.root(b).str(); });

  // [g'_0, f] in f on supports.
  const RootSupportedSubspace fs = f.as_subspace();
  for (std::size_t a : aux.level(0)) {
    for (std::size_t mu : fs.root_support()) {
      bool ok = true;
      if (mu == rs.negative_index(a)) {
        ok = fs.cartan_part().contains(rs.coroot_coords(rs.root(a)));
      } else if (auto sum = rs.sum_index(a, mu)) {
        ok = fs.has_root(*sum);
      }
      report.record(suite, "f is a g'_0-module", ok, [&] { return name + " " + rs.root(a).str() + " on " + rs.root(mu).str(); });
    }
    for (const auto& row : fs.cartan_part().rows()) {
      Rational value = 0;
      for (std::size_t i = 0; i < rs.rank(); ++i) value += row[i] * rs.pairing(rs.root(a), i);
      report.record(suite, "f is a g'_0-module", value == 0 || fs.has_root(a),
                    [&] { return name + " " + rs.root(a).str() + " on the Cartan part"; });
    }
  }

  auto in = [](const RootSet& set, std::size_t k) { return std::binary_search(set.begin(), set.end(), k); };
  for (std::size_t a : s.k_minus)
    for (std::size_t b : s.k_minus)
      if (auto sum = rs.sum_index(a, b))
        report.record(suite, "[k_-, k_-] in k_- + (k n p)", in(s.k_minus, *sum) || in(s.kcap_p, *sum),
                      [&] { return name + " " + rs.root(a).str() + " + " + rs.root(b).str(); });
  for (std::size_t a : s.q_plus)
    for (std::size_t b : s.q_plus)
      if (auto sum = rs.sum_index(a, b); sum && g.level_of(*sum) % 2 == 0)
        report.record(suite, "[q_+, q_+] in k n p", in(s.kcap_p, *sum),
                      [&] { return name + " " + rs.root(a).str() + " + " + rs.root(b).str(); });

  if (!compact_roots(spec).empty())
    report.record(suite, "center of k_C has dimension <= 1", compact_kernel(spec).size() <= 1, [&] { return name; });

  if (!brute_force) return;
  report.record(suite, "f is an ideal (bracket oracle)", oracle::is_ideal(table, fs), [&] { return name; });

  RootSet seed = s.k_minus;
  seed.insert(seed.end(), s.q_plus.begin(), s.q_plus.end());
  std::vector<LieElement> gens;
  for (std::size_t k : seed) gens.push_back(LieElement::basis(rs, k));
  const EchelonBasis closure = oracle::span_closure(table, gens);
  bool covers = true;
  for (std::size_t k : g.negative()) covers = covers && closure.contains(LieElement::basis(rs, k).dense());
  report.record(suite, "bracket generation agrees with span closure", covers == r.bracket_generating,
                [&] { return name; });
}

void check_closure_oracle(const StructureTable& table, int n_seeds, SelftestReport& report) {
  const RootSystem& rs = table.root_system();
  for (int n = 0; n < n_seeds; ++n) {
    std::mt19937_64 eng(0xc105e000ULL + static_cast<std::uint64_t>(n));
    const unsigned density = 1 + eng() % 4;  // keep each root with probability density/8
    RootSupportedSubspace seed(rs);
    for (std::size_t k = 0; k < rs.size(); ++k)
      if (eng() % 8 < density) seed.add_root(k);
    if (eng() % 4 == 0) {
      RationalVector h(rs.rank());
      for (auto& c : h) c = static_cast<long>(eng() % 5) - 2;
      seed.add_cartan(h);
    }
    const auto combinatorial = oracle::as_span(rs, lie_closure(rs, seed));
    const auto linear = oracle::span_closure(table, oracle::generators(rs, seed));
    report.record("analysis", "lie_closure equals span closure", combinatorial == linear,
                  [&] { return rs.type().name() + " seed #" + std::to_string(n); });
  }
}

std::vector<std::vector<Label>> suite_labelings(std::size_t rank, std::size_t cap) {
  std::vector<std::vector<Label>> valid;
  for (auto& l : all_labelings(rank))
    if (is_valid_labeling(l)) valid.push_back(std::move(l));
  if (rank <= 4 || valid.size() <= cap) return valid;
  std::vector<std::vector<Label>> out;
  for (std::size_t i = 0; i < cap; ++i) out.push_back(valid[i * valid.size() / cap]);
  return out;
}

SelftestReport run_selftest(int max_rank) {
  SelftestReport report;
  report.max_rank = max_rank;
  for (const auto& type : admissible_types(max_rank)) {
    report.types.push_back(type.name());
    const auto rs = RootSystem::build(type);
    const StructureTable table(rs);
    const bool small = rs->rank() <= 4;

    check_root_system(*rs, report);
    check_structure_table(table, report, small ? 0 : 20000);

    const auto labelings = suite_labelings(rs->rank(), small ? 0 : 12);
    std::set<std::vector<int>> parities;
    for (const auto& l : labelings) {
      const DomainSpec spec(rs, l);
      parities.insert(spec.simple_parity());
      check_grading(spec, report);
      check_analysis(spec, table, report, small);
    }
    if (small) check_real_forms(table, {parities.begin(), parities.end()}, report);
    else check_real_forms(table, {*parities.begin()}, report);
    check_closure_oracle(table, rs->rank() <= 3 ? 200 : (small ? 20 : 0), report);
  }
  return report;
}

}  // namespace flagdomain
