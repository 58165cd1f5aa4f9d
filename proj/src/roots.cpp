#include "flagdomain/roots.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace flagdomain {

namespace {

using IntMatrix = std::vector<std::vector<int>>;

IntMatrix zeros(std::size_t n) { return IntMatrix(n, std::vector<int>(n, 0)); }

void link(IntMatrix& g, std::size_t i, std::size_t j, int value) {
  g[i][j] = value;
  g[j][i] = value;
}

// Symmetric form on simple roots, Bourbaki numbering, scaled to integers.
IntMatrix gram_matrix(const RootSystemType& t) {
  const auto n = static_cast<std::size_t>(t.rank);
  IntMatrix g = zeros(n);
  switch (t.family) {
    case 'A':
      for (std::size_t i = 0; i < n; ++i) g[i][i] = 2;
      for (std::size_t i = 0; i + 1 < n; ++i) link(g, i, i + 1, -1);
      break;
    case 'B':
      for (std::size_t i = 0; i < n; ++i) g[i][i] = 2;
      g[n - 1][n - 1] = 1;
      for (std::size_t i = 0; i + 1 < n; ++i) link(g, i, i + 1, -1);
      break;
    case 'C':
      for (std::size_t i = 0; i < n; ++i) g[i][i] = 2;
      g[n - 1][n - 1] = 4;
      for (std::size_t i = 0; i + 2 < n; ++i) link(g, i, i + 1, -1);
      link(g, n - 2, n - 1, -2);
      break;
    case 'D':
      for (std::size_t i = 0; i < n; ++i) g[i][i] = 2;
      for (std::size_t i = 0; i + 2 < n; ++i) link(g, i, i + 1, -1);
      link(g, n - 3, n - 1, -1);
      break;
    case 'E':
      for (std::size_t i = 0; i < n; ++i) g[i][i] = 2;
      link(g, 0, 2, -1);
      link(g, 1, 3, -1);
      for (std::size_t i = 2; i + 1 < n; ++i) link(g, i, i + 1, -1);
      break;
    case 'F':
      g[0][0] = g[1][1] = 4;
      g[2][2] = g[3][3] = 2;
      link(g, 0, 1, -2);
      link(g, 1, 2, -2);
      link(g, 2, 3, -1);
      break;
    case 'G':
      g[0][0] = 2;
      g[1][1] = 6;
      link(g, 0, 1, -3);
      break;
    default:
      throw std::invalid_argument("unknown family");
  }
  return g;
}

// Height first, then descending lexicographic coefficients.
bool positive_order(const Root& a, const Root& b) {
  if (a.height() != b.height()) return a.height() < b.height();
  return a > b;
}

}  // namespace

bool RootSystemType::admissible() const {
  switch (family) {
    case 'A': return rank >= 1;
    case 'B':
    case 'C': return rank >= 2;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

void RootSystemType::validate() const {
  if (!admissible()) {
    throw std::invalid_argument("inadmissible root system type " + name() +
                                " (allowed: A n>=1, B/C n>=2, D n>=4, E6-8, F4, G2)");
  }
}

std::string RootSystemType::name() const { return std::string(1, family) + std::to_string(rank); }

RootSystemType parse_type(const std::string& text) {
  if (text.size() < 2 || !std::isalpha(static_cast<unsigned char>(text[0])))
    throw std::invalid_argument("cannot parse root system type '" + text + "'");
  RootSystemType t;
  t.family = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  std::size_t used = 0;
  try {
    t.rank = std::stoi(text.substr(1), &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse root system type '" + text + "'");
  }
  if (used != text.size() - 1) throw std::invalid_argument("cannot parse root system type '" + text + "'");
  t.validate();
  return t;
}

int Root::height() const { return std::accumulate(coeffs_.begin(), coeffs_.end(), 0); }

bool Root::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c == 0; });
}

bool Root::is_positive() const {
  return !is_zero() && std::all_of(coeffs_.begin(), coeffs_.end(), [](int c) { return c >= 0; });
}

Root Root::operator-() const {
  std::vector<int> out(coeffs_.size());
  std::transform(coeffs_.begin(), coeffs_.end(), out.begin(), [](int c) { return -c; });
  return Root(std::move(out));
}

Root Root::operator+(const Root& other) const {
  std::vector<int> out(coeffs_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += other.coeffs_[i];
  return Root(std::move(out));
}

Root Root::operator-(const Root& other) const { return *this + (-other); }

std::string Root::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i];
  os << ')';
  return os.str();
}

Root simple_root(std::size_t rank, std::size_t i) {
  std::vector<int> c(rank, 0);
  c.at(i) = 1;
  return Root(std::move(c));
}

bool Coweight::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; });
}

Rational Coweight::evaluate(const Root& alpha) const {
  if (alpha.size() != coeffs_.size()) throw std::invalid_argument("coweight/root rank mismatch");
  Rational sum(0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) sum += coeffs_[i] * alpha[i];
  return sum;
}

std::shared_ptr<const RootSystem> RootSystem::build(const RootSystemType& type) {
  type.validate();
  auto rs = std::shared_ptr<RootSystem>(new RootSystem());
  rs->type_ = type;
  rs->gram_ = gram_matrix(type);
  const std::size_t n = rs->rank();

  rs->cartan_ = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rs->cartan_[i][j] = 2 * rs->gram_[i][j] / rs->gram_[j][j];

  // Positive roots by root strings: beta + sigma_i is a root iff q > 0,
  // where p - q = <beta, sigma_i^vee> and p counts beta - k sigma_i in the set.
  std::set<Root> found;
  std::vector<Root> layer;
  for (std::size_t i = 0; i < n; ++i) layer.push_back(simple_root(n, i));
  found.insert(layer.begin(), layer.end());
  while (!layer.empty()) {
    std::set<Root> next;
    for (const Root& beta : layer) {
      for (std::size_t i = 0; i < n; ++i) {
        const Root si = simple_root(n, i);
        int p = 0;
        for (Root down = beta - si; found.count(down); down = down - si) ++p;
        const int q = p - rs->pairing(beta, i);
        if (q > 0) next.insert(beta + si);
      }
    }
    for (const Root& r : next) found.insert(r);
    layer.assign(next.begin(), next.end());
  }

  std::vector<Root> pos(found.begin(), found.end());
  std::sort(pos.begin(), pos.end(), positive_order);
  rs->roots_ = pos;
  for (const Root& r : pos) rs->roots_.push_back(-r);
  for (std::size_t k = 0; k < rs->roots_.size(); ++k) rs->index_.emplace(rs->roots_[k], k);

  const std::size_t m = rs->roots_.size();
  rs->sum_table_.assign(m * m, -1);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (auto it = rs->index_.find(rs->roots_[a] + rs->roots_[b]); it != rs->index_.end())
        rs->sum_table_[a * m + b] = static_cast<int>(it->second);
  return rs;
}

std::vector<Root> RootSystem::positive_roots() const {
  return {roots_.begin(), roots_.begin() + static_cast<std::ptrdiff_t>(num_positive())};
}

std::optional<std::size_t> RootSystem::index_of(const Root& alpha) const {
  if (alpha.size() != rank()) return std::nullopt;
  auto it = index_.find(alpha);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t RootSystem::negative_index(std::size_t index) const {
  const std::size_t p = num_positive();
  return index < p ? index + p : index - p;
}

std::optional<std::size_t> RootSystem::sum_index(std::size_t i, std::size_t j) const {
  const int s = sum_table_[i * roots_.size() + j];
  if (s < 0) return std::nullopt;
  return static_cast<std::size_t>(s);
}

long RootSystem::inner_product(const Root& alpha, const Root& beta) const {
  long sum = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) sum += static_cast<long>(alpha[i]) * gram_[i][j] * beta[j];
  return sum;
}

int RootSystem::pairing(const Root& alpha, std::size_t i) const {
  int sum = 0;
  for (std::size_t j = 0; j < rank(); ++j) sum += alpha[j] * cartan_[j][i];
  return sum;
}

Root RootSystem::reflect(const Root& alpha, std::size_t i) const {
  std::vector<int> c = alpha.coeffs();
  c[i] -= pairing(alpha, i);
  return Root(std::move(c));
}

LengthClass RootSystem::length_class(const Root& alpha) const {
  const long len = inner_product(alpha, alpha);
  const long longest = inner_product(highest_root(), highest_root());
  return len == longest ? LengthClass::Long : LengthClass::Short;
}

std::optional<Root> RootSystem::root_sum(const Root& alpha, const Root& beta) const {
  const auto a = index_of(alpha);
  const auto b = index_of(beta);
  if (!a || !b) throw std::invalid_argument("root_sum: arguments must be roots of " + type_.name());
  if (auto s = sum_index(*a, *b)) return roots_[*s];
  return std::nullopt;
}

RationalVector RootSystem::coroot_coords(const Root& alpha) const {
  const long len = inner_product(alpha, alpha);
  RationalVector m(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    m[i] = ratio(static_cast<long>(alpha[i]) * gram_[i][i], len);
  }
  return m;
}

std::size_t expected_root_count(const RootSystemType& t) {
  const auto n = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case 'A': return n * (n + 1);
    case 'B':
    case 'C': return 2 * n * n;
    case 'D': return 2 * n * (n - 1);
    case 'E': return n == 6 ? 72 : n == 7 ? 126 : 240;
    case 'F': return 48;
    case 'G': return 12;
    default: return 0;
  }
}

std::vector<RootSystemType> admissible_types(int max_rank) {
  std::vector<RootSystemType> out;
  for (char f : std::string("ABCDEFG"))
    for (int r = 1; r <= max_rank; ++r)
      if (RootSystemType t{f, r}; t.admissible()) out.push_back(t);
  return out;
}

}  // namespace flagdomain
