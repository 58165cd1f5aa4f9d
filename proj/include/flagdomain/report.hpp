#ifndef FLAGDOMAIN_REPORT_HPP
#define FLAGDOMAIN_REPORT_HPP

#include "flagdomain/analysis.hpp"
#include "flagdomain/chainball.hpp"
#include "flagdomain/selftest.hpp"

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace flagdomain {

using Json = nlohmann::ordered_json;

/// Every valid labeling of one type, classified, in lexicographic label
/// order (K < Q < V).
struct EnumerationSummary {
  RootSystemType type;
  std::size_t total_labelings = 0;
  std::size_t valid_labelings = 0;
  std::size_t classical_count = 0;
  std::size_t nonclassical_count = 0;
  std::vector<ClassificationReport> rows;
};

EnumerationSummary enumerate(const RootSystemType& type);

/// Field names shared by the JSON object and the CSV header of a report.
const std::vector<std::string>& report_fields();

Json to_json(const ClassificationReport& r);
Json to_json(const EnumerationSummary& s);
Json to_json(const SelftestReport& s);
Json to_json(const chainball::Flag& f);
Json to_json(const chainball::CycleParam& u);
Json to_json(const chainball::ChainCertificate& c);
Json to_json(const chainball::ChainBatch& b);

/// Header line plus one line per report.
std::string to_csv(const std::vector<ClassificationReport>& rows);

std::string to_text(const ClassificationReport& r);
std::string to_text(const EnumerationSummary& s);
std::string to_text(const SelftestReport& s);
std::string to_text(const chainball::ChainBatch& b);

/// Two-space indented JSON with a trailing newline.
std::string dump(const Json& j);

}  // namespace flagdomain

#endif
