#include "flagdomain/report.hpp"

#include <iomanip>
#include <sstream>

namespace flagdomain {

EnumerationSummary enumerate(const RootSystemType& type) {
  const auto rs = RootSystem::build(type);
  EnumerationSummary s;
  s.type = type;
  for (const auto& labels : all_labelings(rs->rank())) {
    ++s.total_labelings;
    if (!is_valid_labeling(labels)) continue;
    ++s.valid_labelings;
    s.rows.push_back(classify(DomainSpec(rs, labels)));
    (s.rows.back().classical ? s.classical_count : s.nonclassical_count)++;
  }
  return s;
}

const std::vector<std::string>& report_fields() {
  static const std::vector<std::string> fields = {
      "type",   "rank",   "labels",       "dim_g",     "dim_k",    "depth",   "dimC_D",
      "dimC_Z", "dimC_U", "hermitian_GK", "fibration", "classical", "f_dims", "bracket_generating"};
  return fields;
}

Json to_json(const ClassificationReport& r) {
  Json j;
  j["type"] = std::string(1, r.type.family);
  j["rank"] = r.rank;
  j["labels"] = format_labels(r.labels);
  j["dim_g"] = r.dim_g;
  j["dim_k"] = r.dim_k;
  j["depth"] = r.depth;
  j["dimC_D"] = r.dimC_D;
  j["dimC_Z"] = r.dimC_Z;
  j["dimC_U"] = r.dimC_U;
  j["hermitian_GK"] = r.hermitian_GK;
  j["fibration"] = to_string(r.fibration);
  j["classical"] = r.classical;
  j["f_dims"] = r.f_dims;
  j["bracket_generating"] = r.bracket_generating;
  return j;
}

Json to_json(const EnumerationSummary& s) {
  Json j;
  j["type"] = std::string(1, s.type.family);
  j["rank"] = s.type.rank;
  j["total_labelings"] = s.total_labelings;
  j["valid_labelings"] = s.valid_labelings;
  j["classical_count"] = s.classical_count;
  j["nonclassical_count"] = s.nonclassical_count;
  j["rows"] = Json::array();
  for (const auto& r : s.rows) j["rows"].push_back(to_json(r));
  return j;
}

Json to_json(const SelftestReport& s) {
  Json j;
  j["max_rank"] = s.max_rank;
  j["types"] = s.types;
  j["passed"] = s.passed();
  j["checks"] = Json::array();
  for (const auto& c : s.checks()) {
    Json e;
    e["suite"] = c.suite;
    e["invariant"] = c.invariant;
    e["cases"] = c.cases;
    e["failures"] = c.failures;
    e["witnesses"] = c.witnesses;
    j["checks"].push_back(std::move(e));
  }
  return j;
}

namespace {

Json vec_json(const chainball::Vec3& v) {
  Json j = Json::array();
  for (int i = 0; i < 3; ++i) j.push_back({v(i).real(), v(i).imag()});
  return j;
}

std::string csv_cell(const Json& v) {
  std::string s;
  if (v.is_string()) s = v.get<std::string>();
  else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].dump();
  } else {
    s = v.dump();
  }
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
  return quoted + "\"";
}

}  // namespace

Json to_json(const chainball::Flag& f) {
  Json j;
  j["line"] = vec_json(f.line);
  j["plane"] = {vec_json(f.plane.col(0)), vec_json(f.plane.col(1))};
  return j;
}

Json to_json(const chainball::CycleParam& u) {
  Json j;
  j["W"] = {vec_json(u.W.col(0)), vec_json(u.W.col(1))};
  j["L"] = vec_json(u.L);
  return j;
}

Json to_json(const chainball::ChainCertificate& c) {
  Json j;
  j["x"] = to_json(c.x);
  j["y"] = to_json(c.y);
  j["cycles"] = Json::array();
  for (const auto& u : c.cycles) j["cycles"].push_back(to_json(u));
  j["waypoints"] = Json::array();
  for (const auto& w : c.waypoints) j["waypoints"].push_back(to_json(w));
  j["residuals"] = c.residuals;
  j["k"] = c.k();
  j["seed"] = c.seed;
  return j;
}

Json to_json(const chainball::ChainBatch& b) {
  Json j;
  j["seed"] = b.seed;
  j["pairs"] = b.pairs();
  j["kmax"] = b.params.kmax;
  j["tol"] = b.params.tol.mem;
  std::size_t verified = 0;
  for (const auto& v : b.verifications) verified += v.ok;
  j["connected"] = verified;
  j["success_rate"] = b.pairs() ? static_cast<double>(verified) / b.pairs() : 0.0;
  j["certificates"] = Json::array();
  for (std::size_t i = 0; i < b.certificates.size(); ++i) {
    Json c = to_json(b.certificates[i]);
    c["verified"] = b.verifications[i].ok;
    j["certificates"].push_back(std::move(c));
  }
  j["failures"] = Json::array();
  for (const auto& [pair, f] : b.failures) {
    Json e;
    e["pair"] = pair;
    e["seed"] = f.seed;
    e["best_margin"] = f.best_margin;
    e["cycles_reached"] = f.cycles_reached;
    e["reason"] = f.reason;
    j["failures"].push_back(std::move(e));
  }
  return j;
}

std::string to_csv(const std::vector<ClassificationReport>& rows) {
  std::ostringstream out;
  const auto& fields = report_fields();
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i];
  out << '\n';
  for (const auto& r : rows) {
    const Json j = to_json(r);
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_cell(j[fields[i]]);
    out << '\n';
  }
  return out.str();
}

std::string to_text(const ClassificationReport& r) {
  std::ostringstream out;
  const Json j = to_json(r);
  for (const auto& field : report_fields()) {
    const Json& v = j[field];
    out << std::left << std::setw(20) << field << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
  return out.str();
}

std::string to_text(const EnumerationSummary& s) {
  std::ostringstream out;
  out << s.type.name() << ": " << s.total_labelings << " labelings, " << s.valid_labelings << " valid, "
      << s.classical_count << " classical, " << s.nonclassical_count << " non-classical\n";
  for (const auto& r : s.rows) {
    out << "  " << std::left << std::setw(2 * r.rank + 2) << format_labels(r.labels)
        << (r.classical ? "classical     " : "non-classical ") << std::setw(16) << to_string(r.fibration)
        << "f=(" << r.f_dims[0] << "," << r.f_dims[1] << "," << r.f_dims[2] << ")"
        << " bracket_generating=" << (r.bracket_generating ? "yes" : "no") << " depth=" << r.depth
        << " dimC_D=" << r.dimC_D << " dimC_Z=" << r.dimC_Z << '\n';
  }
  return out.str();
}

std::string to_text(const SelftestReport& s) {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const auto& c : s.checks()) {
    out << (c.passed() ? "PASS " : "FAIL ") << c.suite << ": " << c.invariant << " (" << c.cases << " cases)\n";
    for (const auto& w : c.witnesses) out << "       witness: " << w << '\n';
    failed += !c.passed();
  }
  out << "selftest up to rank " << s.max_rank << ": " << s.checks().size() - failed << "/" << s.checks().size()
      << " invariants hold\n";
  return out.str();
}

std::string to_text(const chainball::ChainBatch& b) {
  std::ostringstream out;
  std::size_t verified = 0;
  for (const auto& v : b.verifications) verified += v.ok;
  out << "seed " << b.seed << ": " << verified << "/" << b.pairs() << " pairs connected and re-verified\n";
  for (std::size_t i = 0; i < b.certificates.size(); ++i) {
    double worst = 0;
    for (double r : b.certificates[i].residuals) worst = std::max(worst, r);
    out << "  chain k=" << b.certificates[i].k() << " max residual " << worst
        << (b.verifications[i].ok ? "" : " REJECTED: " + b.verifications[i].message) << '\n';
  }
  for (const auto& [pair, f] : b.failures)
    out << "  pair " << pair << " failed (seed " << f.seed << ", best margin " << f.best_margin << "): " << f.reason
        << '\n';
  return out.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace flagdomain
