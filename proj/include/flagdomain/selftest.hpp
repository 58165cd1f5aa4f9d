#ifndef FLAGDOMAIN_SELFTEST_HPP
#define FLAGDOMAIN_SELFTEST_HPP

#include "flagdomain/analysis.hpp"
#include "flagdomain/chevalley.hpp"
#include "flagdomain/grading.hpp"
#include "flagdomain/roots.hpp"

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace flagdomain {

struct InvariantCheck {
  std::string suite;
  std::string invariant;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> witnesses;  // first few failing cases

  bool passed() const { return failures == 0; }
};

class SelftestReport {
public:
  /// Counts one case; on failure stores witness() (up to three per check).
  void record(const std::string& suite, const std::string& invariant, bool ok,
              const std::function<std::string()>& witness);

  const std::vector<InvariantCheck>& checks() const { return checks_; }
  bool passed() const;
  const InvariantCheck* find(const std::string& suite, const std::string& invariant) const;

  int max_rank = 0;
  std::vector<std::string> types;

private:
  std::vector<InvariantCheck> checks_;
  std::map<std::pair<std::string, std::string>, std::size_t> index_;
};

/// A basis triple violating the Jacobi identity. With samples == 0 every
/// triple a < b < c is tried, otherwise `samples` pseudo-random triples.
std::optional<std::array<std::size_t, 3>> find_jacobi_violation(const StructureTable& table,
                                                                std::size_t samples = 0);

void check_root_system(const RootSystem& rs, SelftestReport& report);
void check_structure_table(const StructureTable& table, SelftestReport& report, std::size_t jacobi_samples = 0);
/// Conjugation and Killing-form sign laws for the given simple parities.
void check_real_forms(const StructureTable& table, const std::vector<std::vector<int>>& parities,
                      SelftestReport& report);
void check_grading(const DomainSpec& spec, SelftestReport& report);
/// With brute_force, also runs the bracket-level oracles (ideal test and
/// span closure of the bracket-generation seed).
void check_analysis(const DomainSpec& spec, const StructureTable& table, SelftestReport& report,
                    bool brute_force);
/// Combinatorial closure against the span closure on `n_seeds` random
/// root-supported seeds (plus occasional Cartan vectors).
void check_closure_oracle(const StructureTable& table, int n_seeds, SelftestReport& report);

/// Labelings a suite visits: every valid one up to rank 4, an evenly
/// spaced sample of `cap` above.
std::vector<std::vector<Label>> suite_labelings(std::size_t rank, std::size_t cap = 48);

/// Every suite for every admissible type of rank <= max_rank.
SelftestReport run_selftest(int max_rank);

}  // namespace flagdomain

#endif
