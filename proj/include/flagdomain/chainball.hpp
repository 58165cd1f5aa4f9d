#ifndef FLAGDOMAIN_CHAINBALL_HPP
#define FLAGDOMAIN_CHAINBALL_HPP

// Numeric model of the non-classical SU(2,1)/T flag domain.
//
// Points are full flags F1 c F2 in C^3 with h = diag(1,1,-1) positive on
// F1 and of signature (1,1) on F2. A cycle is a pair (W, L) with h
// positive definite on the plane W and negative on the line L; its
// points are the flags (F1, F1 + L) with F1 c W, a projective line
// contained in the domain. The base cycle is (span{e1,e2}, span{e3}).

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace flagdomain::chainball {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3cd;
using Mat3 = Eigen::Matrix3cd;
using Mat32 = Eigen::Matrix<Complex, 3, 2>;

struct Tolerances {
  double mem = 1e-9;  // membership / containment residuals
  double psd = 1e-8;  // definiteness margins
};

/// Hermitian form h(a, b) = a^* diag(1,1,-1) b.
Complex hform(const Vec3& a, const Vec3& b);
const Mat3& h_matrix();

/// Seeded generator. std::mt19937_64 output is fixed by the standard; the
/// distributions are written out here so streams do not depend on the
/// standard library vendor.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform();  // [0, 1)
  double normal();
  Complex complex_normal();
  Vec3 vec3();  // complex Gaussian vector

private:
  std::mt19937_64 engine_;
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// A full flag: unit vector spanning F1 and an orthonormal basis of F2.
struct Flag {
  Vec3 line;
  Mat32 plane;

  /// Normalizes `line`, orthonormalizes {line, other} into the plane.
  static Flag from_vectors(const Vec3& line, const Vec3& other);
  /// Throws std::invalid_argument if line is not in span(plane) within tol.
  static Flag make(const Vec3& line, const Mat32& plane, double tol = 1e-9);
};

enum class Location { Inside, Outside, Degenerate };

/// Signature test. Degenerate covers non-flags and margins below tol.psd.
Location locate(const Flag& f, const Tolerances& tol = {});
bool in_domain(const Flag& f, const Tolerances& tol = {});

/// A flag known to lie in the domain.
class DomainPoint {
public:
  /// Throws std::invalid_argument unless locate(f) == Inside.
  explicit DomainPoint(Flag f, const Tolerances& tol = {});
  const Flag& flag() const { return flag_; }

private:
  Flag flag_;
};

/// Cycle parameter u = (W, L); W stored orthonormal, L unit.
struct CycleParam {
  Mat32 W;
  Vec3 L;

  static CycleParam make(const Vec3& w0, const Vec3& w1, const Vec3& l);
};

/// Smallest definiteness slack of the cycle (negative when invalid).
double cycle_margin(const CycleParam& u);
bool cycle_valid(const CycleParam& u, const Tolerances& tol = {});

CycleParam base_cycle();

/// max(dist(F1, W), dist(L, F2)) with distances to orthogonal projections.
double membership_residual(const Flag& x, const CycleParam& u);
bool member(const Flag& x, const CycleParam& u, const Tolerances& tol = {});

/// Point of Z_u closest to y's line: F1' = normalized projection of y's
/// line onto W (the dominant singular direction of W if that projection
/// vanishes), F2' = F1' + L.
Flag project_to_cycle(const Flag& y, const CycleParam& u, const Tolerances& tol = {});

/// sqrt(|P_F1 - P_F1'|_F^2 + |P_F2 - P_F2'|_F^2).
double flag_distance(const Flag& a, const Flag& b);

/// A valid cycle containing both a and b, if the data determine one.
std::optional<CycleParam> common_cycle(const Flag& a, const Flag& b, const Tolerances& tol = {});

struct SearchParams {
  int kmax = 20;
  int n_samples = 64;
  int n_restarts = 8;
  int refine_steps = 24;
  Tolerances tol;
};

struct ChainCertificate {
  Flag x, y;
  std::vector<CycleParam> cycles;
  std::vector<Flag> waypoints;
  std::vector<double> residuals;
  std::uint64_t seed = 0;

  int k() const { return static_cast<int>(cycles.size()); }
};

struct ChainFailure {
  double best_margin = 0;  // best definiteness slack over the plans tried
  int cycles_reached = 0;
  std::uint64_t seed = 0;
  std::string reason;
};

struct ChainResult {
  std::optional<ChainCertificate> certificate;
  std::optional<ChainFailure> failure;
  bool ok() const { return certificate.has_value(); }
};

struct Verification {
  bool ok = false;
  std::vector<double> residuals;
  std::string message;
};

/// Re-checks a certificate from scratch with locate/member/cycle_valid.
Verification verify(const ChainCertificate& c, const Tolerances& tol = {});

/// Searches for a chain x in Z_{u_1}, z_i in Z_{u_i} and Z_{u_{i+1}},
/// y in Z_{u_k}, with k <= max(kmax, 1). A single common cycle is tried
/// first. Otherwise candidate chains pick negative lines l1 in F2^x and
/// l2 in F2^y and a positive line f on l1 + l2; the positive line slides
/// from F1^x to f inside cycles with L = l1, the cycle switches to L = l2
/// at the flag (f, l1 + l2), and slides on to F1^y. Parameters are sampled
/// (n_samples), refined (refine_steps) and restarted with fresh streams
/// (n_restarts); the plan with the largest definiteness slack is verified.
ChainResult connect(const DomainPoint& x, const DomainPoint& y, const SearchParams& params,
                    std::uint64_t seed);

/// Outcome of `pairs` independent connect() calls on sampled endpoints.
struct ChainBatch {
  std::uint64_t seed = 0;
  SearchParams params;
  std::vector<ChainCertificate> certificates;
  std::vector<Verification> verifications;  // fresh verify() of each certificate
  std::vector<std::pair<int, ChainFailure>> failures;  // pair index, failure

  int pairs() const { return static_cast<int>(certificates.size() + failures.size()); }
  bool all_connected() const;
};

/// Pair i takes the next two points from Rng(seed) and searches with seed
/// mix_seed(seed, i).
ChainBatch run_batch(std::uint64_t seed, int pairs, const SearchParams& params);

/// Rejection sampler with h(F1) > margin and Gram eigenvalues of h on F2
/// beyond +-margin.
DomainPoint random_domain_point(Rng& rng, double margin = 0.05);

/// exp of a random element of su(2,1) with entries of size ~scale.
Mat3 random_su21(Rng& rng, double scale = 0.5);
Flag act(const Mat3& g, const Flag& x);
CycleParam act(const Mat3& g, const CycleParam& u);

}  // namespace flagdomain::chainball

#endif
