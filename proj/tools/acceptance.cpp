// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include "flagdomain/cli.hpp"
#include "flagdomain/oracle.hpp"
#include "flagdomain/report.hpp"
#include "flagdomain/selftest.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace flagdomain;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) detail = what;
    ok = false;
  }
};

int failures = 0;

void report(int id, const std::string& title, const Outcome& o, double secs) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", secs);
  std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " [" << buf << "]";
  if (!o.detail.empty()) std::cout << " -- " << o.detail;
  std::cout << std::endl;
  failures += !o.ok;
}

const ClassificationReport* row(const EnumerationSummary& s, const std::string& labels) {
  for (const auto& r : s.rows)
    if (format_labels(r.labels) == labels) return &r;
  return nullptr;
}

std::set<std::string> labels_where(const EnumerationSummary& s, bool classical) {
  std::set<std::string> out;
  for (const auto& r : s.rows)
    if (r.classical == classical) out.insert(format_labels(r.labels));
  return out;
}

// Bracket-level confirmation of one row: span closure for bracket
// generation and the brute-force ideal test for f.
bool oracle_agrees(const StructureTable& table, const ClassificationReport& r) {
  const DomainSpec spec(table.root_system_ptr(), r.labels);
  const RootSystem& rs = table.root_system();
  const Splits s = split(spec);
  std::vector<LieElement> gens;
  for (std::size_t k : s.k_minus) gens.push_back(LieElement::basis(rs, k));
  for (std::size_t k : s.q_plus) gens.push_back(LieElement::basis(rs, k));
  const EchelonBasis closure = oracle::span_closure(table, gens);
  bool generating = true;
  for (std::size_t k : s.q_minus) generating = generating && closure.contains(LieElement::basis(rs, k).dense());
  for (std::size_t k : s.k_minus) generating = generating && closure.contains(LieElement::basis(rs, k).dense());
  const FIdeal f = compute_f(spec);
  return generating == r.bracket_generating && oracle::is_ideal(table, f.as_subspace());
}

void criterion_a2() {
  const auto t0 = Clock::now();
  Outcome o;
  const EnumerationSummary s = enumerate({'A', 2});
  o.require(s.valid_labelings == 5, "valid labelings " + std::to_string(s.valid_labelings));
  o.require(labels_where(s, false) == std::set<std::string>{"Q,Q"}, "non-classical set differs from {Q,Q}");
  for (const char* l : {"K,Q", "Q,K"}) {
    const auto* r = row(s, l);
    o.require(r && r->classical && r->f_dims == std::array<std::size_t, 3>{2, 4, 2},
              std::string(l) + " not classical with f = (2,4,2)");
  }
  const auto* qq = row(s, "Q,Q");
  o.require(qq && qq->f_dims == std::array<std::size_t, 3>{0, 0, 0} && qq->bracket_generating && qq->depth == 2 &&
                qq->dimC_D == 3 && qq->dimC_Z == 1,
            "Q,Q row differs");
  const StructureTable table(RootSystem::build({'A', 2}));
  for (const auto& r : s.rows) o.require(oracle_agrees(table, r), "bracket oracle disagrees on " + format_labels(r.labels));
  const double secs = seconds_since(t0);
  o.require(secs < 1.0, "runtime over 1 s");
  report(1, "A2 exact classification", o, secs);
}

void criterion_c2() {
  const auto t0 = Clock::now();
  Outcome o;
  const EnumerationSummary s = enumerate({'C', 2});
  o.require(s.valid_labelings == 5, "valid labelings " + std::to_string(s.valid_labelings));
  o.require(labels_where(s, true) == std::set<std::string>{"K,Q", "V,Q"}, "classical set differs");
  o.require(labels_where(s, false) == std::set<std::string>{"Q,Q", "Q,K", "Q,V"}, "non-classical set differs");
  const auto* qk = row(s, "Q,K");
  o.require(qk && !qk->hermitian_GK, "Q,K reports a Hermitian G/K");
  const StructureTable table(RootSystem::build({'C', 2}));
  for (const auto& r : s.rows) o.require(oracle_agrees(table, r), "bracket oracle disagrees on " + format_labels(r.labels));
  report(2, "C2 exact classification", o, seconds_since(t0));
}

std::vector<RootSystemType> sweep_types() {
  return {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'B', 4},
          {'C', 2}, {'C', 3}, {'C', 4}, {'D', 4}, {'G', 2}, {'F', 4}};
}

void criterion_equivalence() {
  const auto t0 = Clock::now();
  Outcome o;
  std::size_t n = 0;
  for (const auto& type : sweep_types()) {
    const EnumerationSummary s = enumerate(type);
    for (const auto& r : s.rows) {
      ++n;
      const bool f_nonzero = r.f_dims[0] > 0;
      o.require(r.classical == f_nonzero && f_nonzero == !r.bracket_generating,
                "counterexample " + type.name() + " " + format_labels(r.labels));
    }
  }
  const double secs = seconds_since(t0);
  o.require(secs < 60.0, "runtime over 60 s");
  o.detail = o.ok ? std::to_string(n) + " labelings" : o.detail;
  report(3, "classical <=> f != 0 <=> not bracket generating", o, secs);
}

void criterion_chevalley() {
  const auto t0 = Clock::now();
  Outcome o;
  SelftestReport rep;
  for (const auto& type : admissible_types(4)) {
    const auto rs = RootSystem::build(type);
    const StructureTable table(rs);
    check_structure_table(table, rep, 0);
    if (rs->rank() > 3) continue;
    std::set<std::vector<int>> parities;
    for (const auto& l : suite_labelings(rs->rank())) parities.insert(DomainSpec(rs, l).simple_parity());
    check_real_forms(table, {parities.begin(), parities.end()}, rep);
  }
  for (const char* name : {"Jacobi identity", "|N(a,b)| = p+1", "Killing sign law"}) {
    const InvariantCheck* c = rep.find("chevalley", name);
    o.require(c && c->passed(), std::string(name) + (c && !c->witnesses.empty() ? ": " + c->witnesses[0] : ""));
  }
  const double secs = seconds_since(t0);
  o.require(secs < 120.0, "runtime over 120 s");
  report(4, "Chevalley suite (Jacobi, |N| = p+1, Killing sign law)", o, secs);
}

void criterion_oracle() {
  const auto t0 = Clock::now();
  Outcome o;
  SelftestReport rep;
  for (const auto& type : admissible_types(3)) check_closure_oracle(StructureTable(RootSystem::build(type)), 200, rep);
  const InvariantCheck* c = rep.find("analysis", "lie_closure equals span closure");
  o.require(c && c->passed(), c && !c->witnesses.empty() ? c->witnesses[0] : "no cases");
  if (o.ok) o.detail = std::to_string(c->cases) + " seeds";
  report(5, "lie_closure equals exact span closure", o, seconds_since(t0));
}

void criterion_generation() {
  const auto t0 = Clock::now();
  Outcome o;
  std::size_t n = 0;
  for (const auto& type : admissible_types(4)) {
    const auto rs = RootSystem::build(type);
    for (const auto& l : suite_labelings(rs->rank())) {
      const GenerationSanity g = generation_sanity(DomainSpec(rs, l));
      ++n;
      o.require(g.by_levels_one_two && g.by_aux_level_one, type.name() + " " + format_labels(l));
    }
  }
  if (o.ok) o.detail = std::to_string(n) + " labelings";
  report(6, "generation sanity", o, seconds_since(t0));
}

void criterion_chains() {
  const auto t0 = Clock::now();
  Outcome o;
  std::ostringstream detail;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto ts = Clock::now();
    chainball::SearchParams params;
    chainball::ChainBatch b = chainball::run_batch(seed, 100, params);
    bool escalated = false;
    if (!b.all_connected()) {
      params.n_samples *= 4;
      params.n_restarts *= 4;
      b = chainball::run_batch(seed, 100, params);
      escalated = true;
    }
    int max_k = 0;
    double worst = 0;
    bool verified = b.all_connected() && b.pairs() == 100;
    for (std::size_t i = 0; i < b.certificates.size(); ++i) {
      const auto v = chainball::verify(b.certificates[i], chainball::Tolerances{});
      verified = verified && v.ok;
      max_k = std::max(max_k, b.certificates[i].k());
      for (double r : v.residuals) worst = std::max(worst, r);
    }
    const double secs = seconds_since(ts);
    o.require(verified, "seed " + std::to_string(seed) + ": " + std::to_string(b.certificates.size()) +
                            "/100 connected" + (b.failures.empty() ? "" : ", first failure: " + b.failures[0].second.reason));
    o.require(max_k <= 20, "seed " + std::to_string(seed) + ": k = " + std::to_string(max_k));
    o.require(worst <= 1e-9, "seed " + std::to_string(seed) + ": residual above 1e-9");
    o.require(secs < 60.0, "seed " + std::to_string(seed) + ": over 60 s");
    char buf[96];
    std::snprintf(buf, sizeof buf, "%sseed %d: %zu/100 k<=%d res<=%.1e%s", seed > 1 ? "; " : "", static_cast<int>(seed),
                  b.certificates.size(), max_k, worst, escalated ? " (escalated)" : "");
    detail << buf;
  }
  if (o.ok) o.detail = detail.str();
  report(7, "SU(2,1) chain demonstrator", o, seconds_since(t0));
}

std::pair<int, std::string> invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str()};
}

void criterion_determinism() {
  const auto t0 = Clock::now();
  Outcome o;
  const std::vector<std::vector<std::string>> commands = {
      {"classify", "--type", "A", "--rank", "2", "--labels", "Q,Q"},
      {"enumerate", "--type", "C", "--rank", "3"},
      {"enumerate", "--type", "F", "--rank", "4", "--format", "csv"},
      {"chain", "--seed", "7", "--pairs", "20", "--kmax", "20"},
      {"selftest", "--rank", "2"},
  };
  for (const auto& cmd : commands) {
    const auto first = invoke(cmd), second = invoke(cmd);
    std::string line;
    for (const auto& a : cmd) line += a + " ";
    o.require(first.first == 0 && second.first == 0, line + "exited nonzero");
    o.require(first.second == second.second, line + "output differs between runs");
    if (cmd.back() != "csv")
      o.require(dump(Json::parse(first.second)) == first.second, line + "JSON does not round-trip");
  }
  report(8, "byte-identical CLI output across runs", o, seconds_since(t0));
}

}  // namespace

int main() {
  criterion_a2();
  criterion_c2();
  criterion_equivalence();
  criterion_chevalley();
  criterion_oracle();
  criterion_generation();
  criterion_chains();
  criterion_determinism();
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
