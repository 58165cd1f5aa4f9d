#include "flagdomain/grading.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace flagdomain {

char to_char(Label l) { return static_cast<char>(l); }

Label parse_label(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'V': return Label::V;
    case 'K': return Label::K;
    case 'Q': return Label::Q;
    default: throw std::invalid_argument(std::string("invalid label '") + c + "' (expected V, K or Q)");
  }
}

std::vector<Label> parse_labels(const std::string& text) {
  std::vector<Label> out;
  if (text.find(',') == std::string::npos) {
    for (char c : text) out.push_back(parse_label(c));
  } else {
    std::size_t begin = 0;
    while (begin <= text.size()) {
      const std::size_t comma = std::min(text.find(',', begin), text.size());
      const std::string token = text.substr(begin, comma - begin);
      if (token.size() != 1) throw std::invalid_argument("cannot parse labels '" + text + "'");
      out.push_back(parse_label(token[0]));
      begin = comma + 1;
    }
  }
  if (out.empty()) throw std::invalid_argument("empty label list");
  return out;
}

std::string format_labels(const std::vector<Label>& labels) {
  std::string s;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) s += ',';
    s += to_char(labels[i]);
  }
  return s;
}

DomainSpec::DomainSpec(RootSystemPtr rs, std::vector<Label> labels)
    : rs_(std::move(rs)), labels_(std::move(labels)) {
  if (!rs_) throw std::invalid_argument("DomainSpec: missing root system");
  if (labels_.size() != rs_->rank())
    throw std::invalid_argument("expected " + std::to_string(rs_->rank()) + " labels for " +
                                rs_->type().name() + ", got " + std::to_string(labels_.size()));
  if (!is_valid_labeling(labels_)) throw std::invalid_argument("no noncompact simple root");
}

std::vector<int> DomainSpec::simple_parity() const {
  std::vector<int> p(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) p[i] = labels_[i] == Label::Q ? 1 : 0;
  return p;
}

Coweight grading_element(const DomainSpec& spec) {
  RationalVector c(spec.labels().size(), Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (spec.labels()[i] == Label::Q) c[i] = 1;
    if (spec.labels()[i] == Label::K) c[i] = 2;
  }
  return Coweight(std::move(c));
}

Coweight auxiliary_grading(const DomainSpec& spec) {
  RationalVector c(spec.labels().size(), Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i)
    if (spec.labels()[i] == Label::Q) c[i] = 1;
  return Coweight(std::move(c));
}

const RootSet& GradedDecomposition::level(int l) const {
  static const RootSet empty;
  auto it = levels_.find(l);
  return it == levels_.end() ? empty : it->second;
}

RootSet GradedDecomposition::negative() const {
  RootSet out;
  for (const auto& [l, roots] : levels_)
    if (l < 0) out.insert(out.end(), roots.begin(), roots.end());
  std::sort(out.begin(), out.end());
  return out;
}

RootSet GradedDecomposition::positive() const {
  RootSet out;
  for (const auto& [l, roots] : levels_)
    if (l > 0) out.insert(out.end(), roots.begin(), roots.end());
  std::sort(out.begin(), out.end());
  return out;
}

GradedDecomposition decompose(const RootSystem& rs, const Coweight& w) {
  if (w.size() != rs.rank()) throw std::invalid_argument("decompose: coweight has wrong rank");
  GradedDecomposition g;
  g.level_of_.resize(rs.size());
  for (std::size_t k = 0; k < rs.size(); ++k) {
    Rational v = w.evaluate(rs.root(k));
    v.canonicalize();
    if (v.get_den() != 1)
      throw std::invalid_argument("decompose: coweight is not integral on root " + rs.root(k).str());
    const int l = static_cast<int>(v.get_num().get_si());
    g.level_of_[k] = l;
    g.levels_[l].push_back(k);
    g.depth_ = std::max(g.depth_, std::abs(l));
  }
  return g;
}

Splits split(const DomainSpec& spec) {
  const RootSystem& rs = spec.root_system();
  const GradedDecomposition g = decompose(rs, grading_element(spec));
  Splits s;
  for (std::size_t k = 0; k < rs.size(); ++k) {
    const int l = g.level_of(k);
    const bool even = l % 2 == 0;
    if (l == 0) s.v_roots.push_back(k);
    if (even && l > 0) s.k_plus.push_back(k);
    if (even && l < 0) s.k_minus.push_back(k);
    if (!even && l > 0) s.q_plus.push_back(k);
    if (!even && l < 0) s.q_minus.push_back(k);
    if (l >= 0) s.p_roots.push_back(k);
    if (l >= 0 && even) s.kcap_p.push_back(k);
  }
  return s;
}

std::vector<std::vector<Label>> all_labelings(std::size_t rank) {
  static constexpr Label alphabet[] = {Label::K, Label::Q, Label::V};
  std::vector<std::vector<Label>> out;
  std::vector<std::size_t> digits(rank, 0);
  while (true) {
    std::vector<Label> l(rank);
    for (std::size_t i = 0; i < rank; ++i) l[i] = alphabet[digits[i]];
    out.push_back(std::move(l));
    std::size_t pos = rank;
    while (pos > 0 && digits[pos - 1] == 2) digits[--pos] = 0;
    if (pos == 0) break;
    ++digits[pos - 1];
  }
  return out;
}

bool is_valid_labeling(const std::vector<Label>& labels) {
  return std::find(labels.begin(), labels.end(), Label::Q) != labels.end();
}

}  // namespace flagdomain
