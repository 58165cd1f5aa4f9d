#include "flagdomain/chainball.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace flagdomain::chainball {

namespace {

// Orthonormal basis of span(M) for a 3x2 matrix of full rank.
Mat32 orthonormal(const Mat32& m) {
  Eigen::HouseholderQR<Mat32> qr(m);
  return qr.householderQ() * Mat32::Identity();
}

// Orthonormal basis of the Euclidean orthogonal complement of n.
Mat32 complement(const Vec3& n) {
  Eigen::HouseholderQR<Vec3> qr(n);
  const Mat3 q = qr.householderQ();
  return q.rightCols<2>();
}

// {w : h(v, w) = 0}.
Mat32 h_complement(const Vec3& v) { return complement(h_matrix() * v); }

// Vector spanning the intersection of two planes in C^3.
Vec3 intersect(const Mat32& p, const Mat32& q) {
  const Vec3 np = p.col(0).cross(p.col(1)).conjugate();
  const Vec3 nq = q.col(0).cross(q.col(1)).conjugate();
  return np.cross(nq).conjugate();
}

Eigen::Matrix2cd gram(const Mat32& plane) { return plane.adjoint() * h_matrix() * plane; }

// h-orthonormal pair (e+, e-) of a plane where h has signature (1,1).
struct SplitPair {
  Vec3 plus, minus;
};

SplitPair split_pair(const Mat32& plane) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(gram(plane));
  const auto& ev = es.eigenvalues();
  const Vec3 minus = plane * es.eigenvectors().col(0) / std::sqrt(std::abs(ev(0)));
  const Vec3 plus = plane * es.eigenvectors().col(1) / std::sqrt(std::abs(ev(1)));
  return {plus, minus};
}

double distance_to_span(const Vec3& unit, const Mat32& orthonormal_plane) {
  return (unit - orthonormal_plane * (orthonormal_plane.adjoint() * unit)).norm();
}

double distance_to_line(const Vec3& unit, const Vec3& unit_line) {
  return (unit - unit_line * unit_line.dot(unit)).norm();
}

Mat32 pd_plane_through(const Vec3& line) {
  const SplitPair pair = split_pair(h_complement(line));
  return h_complement(pair.minus);
}

}  // namespace

const Mat3& h_matrix() {
  static const Mat3 h = Eigen::Vector3cd(1, 1, -1).asDiagonal();
  return h;
}

Complex hform(const Vec3& a, const Vec3& b) { return a.dot(h_matrix() * b); }

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex Rng::complex_normal() {
  const double re = normal();
  return {re, normal()};
}

Vec3 Rng::vec3() {
  Vec3 v;
  for (int i = 0; i < 3; ++i) v(i) = complex_normal();
  return v;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over the combined words.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Flag Flag::from_vectors(const Vec3& line, const Vec3& other) {
  Flag f;
  f.line = line.normalized();
  Vec3 w = other - f.line * f.line.dot(other);
  f.plane.col(0) = f.line;
  f.plane.col(1) = w.normalized();
  return f;
}

Flag Flag::make(const Vec3& line, const Mat32& plane, double tol) {
  Flag f;
  f.line = line.normalized();
  f.plane = orthonormal(plane);
  if (distance_to_span(f.line, f.plane) > tol) throw std::invalid_argument("Flag: line is not contained in the plane");
  return f;
}

Location locate(const Flag& f, const Tolerances& tol) {
  const double norm = f.line.norm();
  if (!(norm > 0) || !std::isfinite(norm)) return Location::Degenerate;
  if ((f.plane.adjoint() * f.plane - Eigen::Matrix2cd::Identity()).norm() > 1e-6) return Location::Degenerate;
  const Vec3 v = f.line / norm;
  if (distance_to_span(v, f.plane) > tol.mem) return Location::Degenerate;

  const double hv = hform(v, v).real();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(gram(f.plane));
  const double lo = es.eigenvalues()(0), hi = es.eigenvalues()(1);
  if (std::abs(hv) < tol.psd || std::abs(lo) < tol.psd || std::abs(hi) < tol.psd) return Location::Degenerate;
  return (hv > 0 && lo < 0 && hi > 0) ? Location::Inside : Location::Outside;
}

bool in_domain(const Flag& f, const Tolerances& tol) { return locate(f, tol) == Location::Inside; }

DomainPoint::DomainPoint(Flag f, const Tolerances& tol) : flag_(std::move(f)) {
  if (locate(flag_, tol) != Location::Inside) throw std::invalid_argument("flag is not a point of the domain");
}

CycleParam CycleParam::make(const Vec3& w0, const Vec3& w1, const Vec3& l) {
  Mat32 m;
  m.col(0) = w0;
  m.col(1) = w1;
  return {orthonormal(m), l.normalized()};
}

double cycle_margin(const CycleParam& u) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(gram(u.W));
  const double w_min = es.eigenvalues()(0);
  const double l_neg = -hform(u.L, u.L).real();
  Mat3 basis;
  basis << u.W, u.L;
  const double det = std::abs(basis.determinant());
  return std::min({w_min, l_neg, det});
}

bool cycle_valid(const CycleParam& u, const Tolerances& tol) { return cycle_margin(u) >= tol.psd; }

CycleParam base_cycle() {
  return CycleParam::make(Vec3::Unit(0), Vec3::Unit(1), Vec3::Unit(2));
}

double membership_residual(const Flag& x, const CycleParam& u) {
  const Vec3 v = x.line.normalized();
  return std::max(distance_to_span(v, u.W), distance_to_span(u.L.normalized(), x.plane));
}

bool member(const Flag& x, const CycleParam& u, const Tolerances& tol) {
  return membership_residual(x, u) <= tol.mem;
}

Flag project_to_cycle(const Flag& y, const CycleParam& u, const Tolerances& tol) {
  Vec3 p = u.W * (u.W.adjoint() * y.line.normalized());
  if (p.norm() < tol.mem) {
    Eigen::JacobiSVD<Mat32> svd(u.W, Eigen::ComputeThinU);
    p = svd.matrixU().col(0);
  }
  return Flag::from_vectors(p, u.L);
}

double flag_distance(const Flag& a, const Flag& b) {
  const Vec3 va = a.line.normalized(), vb = b.line.normalized();
  const Mat3 d1 = va * va.adjoint() - vb * vb.adjoint();
  const Mat3 d2 = a.plane * a.plane.adjoint() - b.plane * b.plane.adjoint();
  return std::sqrt(d1.squaredNorm() + d2.squaredNorm());
}

std::optional<CycleParam> common_cycle(const Flag& a, const Flag& b, const Tolerances& tol) {
  const Vec3 va = a.line.normalized(), vb = b.line.normalized();
  Mat32 w;
  if (distance_to_line(vb, va) <= 0.25 * tol.mem) {
    w = pd_plane_through(va);
  } else {
    w.col(0) = va;
    w.col(1) = vb;
    w = orthonormal(w);
  }

  Vec3 l;
  const bool same_plane = distance_to_span(b.plane.col(0), a.plane) <= 0.25 * tol.mem &&
                          distance_to_span(b.plane.col(1), a.plane) <= 0.25 * tol.mem;
  if (same_plane) {
    l = split_pair(a.plane).minus;
  } else {
    l = intersect(a.plane, b.plane);
    if (l.norm() < tol.mem) return std::nullopt;
  }

  const CycleParam u{w, l.normalized()};
  if (!cycle_valid(u, tol) || !member(a, u, tol) || !member(b, u, tol)) return std::nullopt;
  return u;
}

Verification verify(const ChainCertificate& c, const Tolerances& tol) {
  Verification v;
  auto fail = [&](std::string msg) {
    v.ok = false;
    v.message = std::move(msg);
    return v;
  };
  const int k = c.k();
  if (k < 1) return fail("certificate has no cycles");
  if (c.waypoints.size() != static_cast<std::size_t>(k - 1)) return fail("waypoint count must be k-1");
  if (!in_domain(c.x, tol) || !in_domain(c.y, tol)) return fail("endpoint outside the domain");
  for (int i = 0; i < k; ++i)
    if (!cycle_valid(c.cycles[i], tol)) return fail("cycle " + std::to_string(i + 1) + " is not valid");
  for (std::size_t i = 0; i < c.waypoints.size(); ++i)
    if (!in_domain(c.waypoints[i], tol)) return fail("waypoint " + std::to_string(i + 1) + " outside the domain");

  v.residuals.push_back(membership_residual(c.x, c.cycles.front()));
  for (int i = 0; i + 1 < k; ++i) {
    v.residuals.push_back(membership_residual(c.waypoints[i], c.cycles[i]));
    v.residuals.push_back(membership_residual(c.waypoints[i], c.cycles[i + 1]));
  }
  v.residuals.push_back(membership_residual(c.y, c.cycles.back()));
  for (std::size_t i = 0; i < v.residuals.size(); ++i)
    if (!(v.residuals[i] <= tol.mem)) return fail("incidence residual " + std::to_string(i) + " exceeds tolerance");
  v.ok = true;
  return v;
}

namespace {

constexpr double kDiskRadius = 0.97;

// Signed slack of the domain conditions; positive iff the flag is inside.
double domain_margin(const Flag& f) {
  const Vec3 v = f.line.normalized();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(gram(f.plane));
  return std::min({hform(v, v).real(), -es.eigenvalues()(0), es.eigenvalues()(1)});
}

struct Plan {
  std::vector<CycleParam> cycles;
  std::vector<Flag> waypoints;
  double score = -std::numeric_limits<double>::infinity();

  void extend(const Plan& other) {
    cycles.insert(cycles.end(), other.cycles.begin(), other.cycles.end());
    waypoints.insert(waypoints.end(), other.waypoints.begin(), other.waypoints.end());
    score = std::min(score, other.score);
  }
};

CycleParam through(const Vec3& a, const Vec3& b, const Vec3& l) {
  if (distance_to_line(b.normalized(), a.normalized()) < 1e-12) {
    const Mat32 w = pd_plane_through(a.normalized());
    return {w, l.normalized()};
  }
  return CycleParam::make(a, b, l);
}

// Moves the positive line from a to b with the negative line l fixed: one
// cycle if span(a, b) is positive definite with room to spare, otherwise two
// cycles through the best of a few intermediate lines.
Plan slide(const Vec3& a, const Vec3& b, const Vec3& l, Rng& rng) {
  constexpr double kDirect = 0.05;
  Plan direct;
  direct.cycles.push_back(through(a, b, l));
  direct.score = cycle_margin(direct.cycles.front());
  if (direct.score >= kDirect) return direct;

  std::vector<Vec3> candidates;
  const Vec3 b_perp = b - (hform(a, b) / hform(a, a)) * a;
  candidates.push_back(b_perp);
  candidates.push_back(intersect(h_complement(a), h_complement(b)));
  const SplitPair ap = split_pair(h_complement(a));
  candidates.push_back(intersect(h_complement(a), h_complement(b_perp)));
  for (int i = 0; i < 8; ++i) candidates.push_back(ap.plus + kDiskRadius * rng.uniform() * std::polar(1.0, 2 * std::numbers::pi * rng.uniform()) * ap.minus);

  Plan best = direct;
  for (const Vec3& g : candidates) {
    if (!(g.norm() > 1e-12) || hform(g, g).real() <= 0) continue;
    Plan p;
    p.cycles = {through(a, g, l), through(g, b, l)};
    p.waypoints = {Flag::from_vectors(g, l)};
    p.score = std::min({cycle_margin(p.cycles[0]), cycle_margin(p.cycles[1]), domain_margin(p.waypoints[0])});
    if (p.score > best.score) best = std::move(p);
  }
  return best;
}

Vec3 negative_in(const SplitPair& pair, Complex s) { return pair.minus + s * pair.plus; }

// Chain x -> y: slide along l1 in F2^x to a line f on M = l1 + l2, switch
// the negative line to l2 in F2^y at (f, M), slide along l2 to y.
Plan bridge(const Flag& x, const Flag& y, Complex s1, Complex s2, Complex t, Rng& rng) {
  const Vec3 l1 = negative_in(split_pair(x.plane), s1);
  const Vec3 l2 = negative_in(split_pair(y.plane), s2);
  Plan out;
  Mat32 m;
  m << l1, l2;
  if (std::abs(m.col(0).normalized().dot(m.col(1).normalized())) > 1 - 1e-6) return out;
  const SplitPair mp = split_pair(orthonormal(m));
  const Vec3 f = mp.plus + t * mp.minus;

  out = slide(x.line, f, l1, rng);
  Plan pivot_plan;
  pivot_plan.waypoints = {Flag::make(f, orthonormal(m))};
  pivot_plan.score = domain_margin(pivot_plan.waypoints.front());
  out.extend(pivot_plan);
  out.extend(slide(f, y.line, l2, rng));
  return out;
}

// Chain x -> y keeping the common negative line F2^x n F2^y, if there is one.
std::optional<Plan> shared_line(const Flag& x, const Flag& y, Rng& rng) {
  const Vec3 l = intersect(x.plane, y.plane);
  if (!(l.norm() > 1e-12) || hform(l, l).real() >= 0) return std::nullopt;
  return slide(x.line, y.line, l, rng);
}

Complex disk_sample(Rng& rng) {
  const double r = kDiskRadius * std::sqrt(rng.uniform());
  return std::polar(r, 2.0 * std::numbers::pi * rng.uniform());
}

Complex clamp_disk(Complex z) {
  const double r = std::abs(z);
  return r > kDiskRadius ? z * (kDiskRadius / r) : z;
}

}  // namespace

ChainResult connect(const DomainPoint& x, const DomainPoint& y, const SearchParams& params,
                    std::uint64_t seed) {
  const int limit = std::max(params.kmax, 1);
  const Tolerances& tol = params.tol;
  ChainFailure failure{-std::numeric_limits<double>::infinity(), 0, seed, "no chain within the cycle bound"};

  auto finish = [&](Plan plan) -> std::optional<ChainCertificate> {
    ChainCertificate cert{x.flag(), y.flag(), std::move(plan.cycles), std::move(plan.waypoints), {}, seed};
    const Verification v = verify(cert, tol);
    if (!v.ok) {
      failure.reason = "verification failed: " + v.message;
      return std::nullopt;
    }
    cert.residuals = v.residuals;
    return cert;
  };

  if (auto u = common_cycle(x.flag(), y.flag(), tol)) {
    Plan p;
    p.cycles = {*u};
    if (auto c = finish(std::move(p))) return {std::move(c), std::nullopt};
  }

  auto admissible = [&](const Plan& p) {
    return !p.cycles.empty() && static_cast<int>(p.cycles.size()) <= limit && p.score >= tol.psd;
  };

  for (int restart = 0; restart < std::max(params.n_restarts, 1); ++restart) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(restart)));
    std::optional<Plan> best;
    auto consider = [&](Plan p) {
      failure.cycles_reached = std::max(failure.cycles_reached, static_cast<int>(p.cycles.size()));
      failure.best_margin = std::max(failure.best_margin, p.score);
      if (static_cast<int>(p.cycles.size()) > limit) return false;
      if (!best || p.score > best->score) {
        best = std::move(p);
        return true;
      }
      return false;
    };

    if (auto p = shared_line(x.flag(), y.flag(), rng)) consider(std::move(*p));

    Complex s1, s2, t;
    for (int i = 0; i < params.n_samples; ++i) {
      const Complex a = disk_sample(rng), b = disk_sample(rng), c = disk_sample(rng);
      if (consider(bridge(x.flag(), y.flag(), a, b, c, rng))) s1 = a, s2 = b, t = c;
    }
    double step = 0.2;
    for (int i = 0; i < params.refine_steps; ++i) {
      const Complex a = clamp_disk(s1 + step * rng.complex_normal());
      const Complex b = clamp_disk(s2 + step * rng.complex_normal());
      const Complex c = clamp_disk(t + step * rng.complex_normal());
      if (consider(bridge(x.flag(), y.flag(), a, b, c, rng))) s1 = a, s2 = b, t = c;
      else step *= 0.8;
    }

    if (best && admissible(*best))
      if (auto c = finish(std::move(*best))) return {std::move(c), std::nullopt};
  }
  return {std::nullopt, failure};
}

bool ChainBatch::all_connected() const {
  if (!failures.empty()) return false;
  return std::all_of(verifications.begin(), verifications.end(), [](const Verification& v) { return v.ok; });
}

ChainBatch run_batch(std::uint64_t seed, int pairs, const SearchParams& params) {
  ChainBatch batch;
  batch.seed = seed;
  batch.params = params;
  Rng sampler(seed);
  for (int i = 0; i < pairs; ++i) {
    const DomainPoint x = random_domain_point(sampler);
    const DomainPoint y = random_domain_point(sampler);
    ChainResult r = connect(x, y, params, mix_seed(seed, static_cast<std::uint64_t>(i)));
    if (r.ok()) {
      batch.verifications.push_back(verify(*r.certificate, params.tol));
      batch.certificates.push_back(std::move(*r.certificate));
    } else {
      batch.failures.emplace_back(i, std::move(*r.failure));
    }
  }
  return batch;
}

DomainPoint random_domain_point(Rng& rng, double margin) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const Vec3 v = rng.vec3().normalized();
    if (hform(v, v).real() <= margin) continue;
    const Flag f = Flag::from_vectors(v, rng.vec3());
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(gram(f.plane));
    if (es.eigenvalues()(0) < -margin && es.eigenvalues()(1) > margin) return DomainPoint(f);
  }
  throw std::runtime_error("random_domain_point: sampler exhausted its attempts");
}

Mat3 random_su21(Rng& rng, double scale) {
  Mat3 a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = scale * rng.complex_normal();
  const Mat3 herm = 0.5 * (a + a.adjoint());
  Mat3 x = Complex(0, 1) * h_matrix() * herm;
  x -= (x.trace() / 3.0) * Mat3::Identity();
  return x.exp();
}

Flag act(const Mat3& g, const Flag& x) {
  const Mat32 plane = g * x.plane;
  return Flag::make(g * x.line, plane, 1e-6);
}

CycleParam act(const Mat3& g, const CycleParam& u) {
  const Mat32 w = g * u.W;
  return CycleParam::make(w.col(0), w.col(1), g * u.L);
}

}  // namespace flagdomain::chainball
