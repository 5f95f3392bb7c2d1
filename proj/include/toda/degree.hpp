#pragma once

// Mapping-degree verification for the two families of sphere maps the
// calculus relies on: the reflection-family map phi(x,y) = y - 2<x,y>x and
// the unit-algebra multiplications (complex, quaternion, octonion via
// Cayley-Dickson doubling). Exact determinant signs for linear slices, a
// winding number on the circle, and a seeded Monte Carlo Jacobian integral
// for the higher-dimensional nonlinear slice.

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace toda::degree {

// --- counter-based RNG --------------------------------------------------------

/// SplitMix64-style counter generator: the value at counter i is a pure
/// function of (seed, stream, i), so streams can be split across workers and
/// results are reproducible across platforms.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) {
    key_ = mix(seed + 0x9e3779b97f4a7c15ULL * (stream + 1));
  }

  std::uint64_t next_u64() { return mix(key_ + 0x9e3779b97f4a7c15ULL * (++counter_)); }

  /// Uniform in the open interval (0,1).
  double uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
  }

  /// Standard normal via Box-Muller; values are produced in pairs.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    double u2 = uniform01();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// --- small vector helpers -----------------------------------------------------

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

inline Vec normalized(Vec a) {
  double n = norm(a);
  if (n < 1e-12) throw std::domain_error("normalized: vector too close to zero");
  for (double& x : a) x /= n;
  return a;
}

inline Vec uniform_sphere_point(CounterRng& rng, int dim) {
  while (true) {
    Vec v(static_cast<std::size_t>(dim));
    for (double& x : v) x = rng.normal();
    if (norm(v) > 1e-6) return normalized(std::move(v));
  }
}

/// Determinant by Gaussian elimination with partial pivoting; fine for the
/// tiny matrices used here (at most 8x8).
inline double det(std::vector<Vec> m) {
  std::size_t n = m.size();
  double d = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(m[r][c]) > std::abs(m[pivot][c])) pivot = r;
    if (std::abs(m[pivot][c]) < 1e-14) return 0.0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      double f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

// --- Cayley-Dickson algebras ---------------------------------------------------

namespace detail {

inline Vec cd_conj(const Vec& a) {
  Vec out = a;
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = -out[i];
  return out;
}

/// Cayley-Dickson product on R^{2^level}: (a,b)(c,d) = (ac - conj(d) b, da + b conj(c)).
inline Vec cd_mul(const Vec& x, const Vec& y) {
  std::size_t n = x.size();
  if (n == 1) return {x[0] * y[0]};
  std::size_t h = n / 2;
  Vec a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
  Vec c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
  auto conj_half = [](Vec v) {
    for (std::size_t i = 1; i < v.size(); ++i) v[i] = -v[i];
    return v;
  };
  Vec left = cd_mul(a, c);
  Vec t = cd_mul(conj_half(d), b);
  for (std::size_t i = 0; i < h; ++i) left[i] -= t[i];
  Vec right = cd_mul(d, a);
  Vec u = cd_mul(b, conj_half(c));
  for (std::size_t i = 0; i < h; ++i) right[i] += u[i];
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

}  // namespace detail

/// Unit-algebra product (level 1 complex, 2 quaternion, 3 octonion) with
/// norm guards: inputs must be unit within 1e-12, the output is checked to
/// stay unit within 1e-10.
inline Vec cayley_mult(int level, const Vec& x, const Vec& y) {
  if (level < 1 || level > 3) throw std::invalid_argument("cayley_mult: level must be 1, 2 or 3");
  std::size_t n = std::size_t{1} << level;
  if (x.size() != n || y.size() != n)
    throw std::invalid_argument("cayley_mult: operand size must be 2^level");
  if (std::abs(norm(x) - 1.0) > 1e-12 || std::abs(norm(y) - 1.0) > 1e-12)
    throw std::domain_error("cayley_mult: operands must be unit vectors");
  Vec out = detail::cd_mul(x, y);
  if (std::abs(norm(out) - 1.0) > 1e-10)
    throw std::domain_error("cayley_mult: product drifted off the unit sphere");
  return out;
}

// --- map descriptors ------------------------------------------------------------

enum class MapFamily { Phi, CayleyMult };

/// A two-variable unit-sphere map f : S^{n-1} x S^{n-1} -> S^{n-1}.
struct MapDescriptor {
  MapFamily family = MapFamily::Phi;
  int level = 0;  // CayleyMult only
  int n = 2;      // ambient dimension (sphere is S^{n-1})
};

inline MapDescriptor phi_map(int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("phi map: requires even n >= 2");
  return MapDescriptor{MapFamily::Phi, 0, n};
}

inline MapDescriptor cayley_map(int level) {
  if (level < 1 || level > 3) throw std::invalid_argument("cayley map: level must be 1, 2 or 3");
  return MapDescriptor{MapFamily::CayleyMult, level, 1 << level};
}

inline Vec eval_map(const MapDescriptor& m, const Vec& x, const Vec& y) {
  if (x.size() != static_cast<std::size_t>(m.n) || y.size() != static_cast<std::size_t>(m.n))
    throw std::invalid_argument("eval_map: operand dimension mismatch");
  if (m.family == MapFamily::CayleyMult) return cayley_mult(m.level, x, y);
  double c = dot(x, y);
  Vec out(y);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= 2.0 * c * x[i];
  return out;
}

/// Slice selector. The first component of the bidegree is the degree of the
/// slice with the SECOND argument fixed (x varies); the second component
/// fixes the first argument.
enum class Slice { SecondFixed, FirstFixed };

inline Vec eval_slice(const MapDescriptor& m, Slice which, const Vec& fixed, const Vec& v) {
  return which == Slice::SecondFixed ? eval_map(m, v, fixed) : eval_map(m, fixed, v);
}

// --- exact path: linear slices ----------------------------------------------------

/// Sign of the determinant of a linear slice, or nullopt when the slice is
/// not linear (phi with its first argument varying). The slice matrices are
/// isometries, so the determinant is +-1; anything else is an error.
inline std::optional<int> linear_slice_degree(const MapDescriptor& m, Slice which,
                                              const Vec& fixed) {
  if (std::abs(norm(fixed) - 1.0) > 1e-10)
    throw std::invalid_argument("linear_slice_degree: base point must be a unit vector");
  if (m.family == MapFamily::Phi && which == Slice::SecondFixed)
    return std::nullopt;  // quadratic in x
  std::size_t n = static_cast<std::size_t>(m.n);
  std::vector<Vec> cols;
  if (m.family == MapFamily::Phi) {
    // y -> y - 2<p,y>p, the reflection through the hyperplane orthogonal to p
    for (std::size_t j = 0; j < n; ++j) {
      Vec e(n, 0.0);
      e[j] = 1.0;
      for (std::size_t i = 0; i < n; ++i) e[i] -= 2.0 * fixed[j] * fixed[i];
      cols.push_back(std::move(e));
    }
  } else {
    for (std::size_t j = 0; j < n; ++j) {
      Vec e(n, 0.0);
      e[j] = 1.0;
      cols.push_back(which == Slice::SecondFixed ? detail::cd_mul(e, fixed)
                                                 : detail::cd_mul(fixed, e));
    }
  }
  // det expects rows; the sign is unaffected by transposing
  double d = det(cols);
  if (std::abs(std::abs(d) - 1.0) > 1e-8)
    throw std::domain_error("linear_slice_degree: slice matrix is not an isometry");
  return d > 0 ? 1 : -1;
}

// --- winding number on the circle ---------------------------------------------------

/// Degree of a circle self-map by accumulating angle increments over a
/// uniform parameter grid. The pre-rounding residual must be below 1e-6.
inline long long winding_degree(const MapDescriptor& m, Slice which, const Vec& fixed,
                                long long samples = 4096) {
  if (m.n != 2) throw std::invalid_argument("winding_degree: only defined on the circle");
  if (samples < 1000) throw std::invalid_argument("winding_degree: needs at least 1000 samples");
  double total = 0.0;
  double prev = 0.0;
  bool first = true;
  for (long long i = 0; i <= samples; ++i) {
    double theta = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(samples);
    Vec p{std::cos(theta), std::sin(theta)};
    Vec q = eval_slice(m, which, fixed, p);
    double angle = std::atan2(q[1], q[0]);
    if (!first) {
      double delta = angle - prev;
      while (delta > M_PI) delta -= 2.0 * M_PI;
      while (delta < -M_PI) delta += 2.0 * M_PI;
      total += delta;
    }
    prev = angle;
    first = false;
  }
  double winding = total / (2.0 * M_PI);
  double nearest = std::round(winding);
  if (std::abs(winding - nearest) > 1e-6)
    throw std::domain_error("winding_degree: non-integer winding, residual " +
                            std::to_string(std::abs(winding - nearest)));
  return static_cast<long long>(nearest);
}

// --- Monte Carlo Jacobian integration ------------------------------------------------

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  long long samples = 0;
};

namespace detail {

/// Orthonormal tangent frame t_1..t_{d-1} at unit p such that the ambient
/// matrix [p, t_1, ..., t_{d-1}] has determinant +1. Built from the
/// Householder reflection exchanging e_1 and p (orthonormal by construction,
/// never degenerate); the reflection flips orientation, so the last frame
/// vector is negated unless p is numerically e_1.
inline std::vector<Vec> oriented_tangent_frame(const Vec& p) {
  std::size_t n = p.size();
  Vec v = p;
  v[0] -= 1.0;
  double vv = dot(v, v);
  std::vector<Vec> frame;
  if (vv < 1e-18) {
    for (std::size_t j = 1; j < n; ++j) {
      Vec e(n, 0.0);
      e[j] = 1.0;
      frame.push_back(std::move(e));
    }
    return frame;
  }
  for (std::size_t j = 1; j < n; ++j) {
    Vec col(n, 0.0);
    col[j] = 1.0;
    double f = 2.0 * v[j] / vv;
    for (std::size_t i = 0; i < n; ++i) col[i] -= f * v[i];
    frame.push_back(std::move(col));
  }
  for (double& x : frame.back()) x = -x;
  return frame;
}

struct WorkerAccum {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::string error;
};

}  // namespace detail

/// Degree as the average over uniform sphere points of the Jacobian
/// determinant of the slice, expressed in positively-oriented orthonormal
/// frames at source and image, with central finite differences of step 1e-5.
/// Deterministic for fixed (seed, workers); workers defaults to 1.
inline McEstimate mc_degree(const MapDescriptor& m, Slice which, const Vec& fixed,
                            long long samples, std::uint64_t seed, int workers = 1) {
  if (samples < 100000) throw std::invalid_argument("mc_degree: needs at least 1e5 samples");
  if (workers < 1) throw std::invalid_argument("mc_degree: needs at least one worker");
  const int dim = m.n;
  const double h = 1e-5;

  auto run_chunk = [&](std::uint64_t stream, long long count, detail::WorkerAccum& acc) {
    try {
      CounterRng rng(seed, stream);
      std::size_t d = static_cast<std::size_t>(dim);
      for (long long s = 0; s < count; ++s) {
        Vec p = uniform_sphere_point(rng, dim);
        Vec q = eval_slice(m, which, fixed, p);
        if (std::abs(norm(q) - 1.0) > 1e-8)
          throw std::domain_error("mc_degree: image off the unit sphere");
        std::vector<Vec> src = detail::oriented_tangent_frame(p);
        std::vector<Vec> img = detail::oriented_tangent_frame(q);
        std::vector<Vec> jac(d - 1, Vec(d - 1, 0.0));
        for (std::size_t j = 0; j + 1 < d; ++j) {
          Vec plus = p, minus = p;
          for (std::size_t i = 0; i < d; ++i) {
            plus[i] += h * src[j][i];
            minus[i] -= h * src[j][i];
          }
          Vec fp = eval_slice(m, which, fixed, normalized(std::move(plus)));
          Vec fm = eval_slice(m, which, fixed, normalized(std::move(minus)));
          for (std::size_t i = 0; i + 1 < d; ++i) {
            double deriv = 0.0;
            for (std::size_t k = 0; k < d; ++k) deriv += img[i][k] * (fp[k] - fm[k]);
            jac[i][j] = deriv / (2.0 * h);
          }
        }
        double dj = det(jac);
        acc.sum += dj;
        acc.sum_sq += dj * dj;
      }
    } catch (const std::exception& ex) {
      acc.error = ex.what();
    }
  };

  std::vector<detail::WorkerAccum> accs(static_cast<std::size_t>(workers));
  long long base = samples / workers;
  long long extra = samples % workers;
  if (workers == 1) {
    run_chunk(0, samples, accs[0]);
  } else {
    std::vector<std::thread> threads;
    long long assigned = 0;
    for (int w = 0; w < workers; ++w) {
      long long count = base + (w < extra ? 1 : 0);
      threads.emplace_back(run_chunk, static_cast<std::uint64_t>(w), count,
                           std::ref(accs[static_cast<std::size_t>(w)]));
      assigned += count;
    }
    for (auto& t : threads) t.join();
    if (assigned != samples) throw std::logic_error("mc_degree: bad partition");
  }

  double sum = 0.0, sum_sq = 0.0;
  for (const auto& acc : accs) {
    if (!acc.error.empty()) throw std::domain_error(acc.error);
    sum += acc.sum;
    sum_sq += acc.sum_sq;
  }
  McEstimate est;
  est.samples = samples;
  est.estimate = sum / static_cast<double>(samples);
  double var = sum_sq / static_cast<double>(samples) - est.estimate * est.estimate;
  if (var < 0.0) var = 0.0;
  est.std_error = std::sqrt(var / static_cast<double>(samples));
  return est;
}

// --- bidegree --------------------------------------------------------------------

struct Bidegree {
  long long alpha = 0;  // degree with the second argument fixed
  long long beta = 0;   // degree with the first argument fixed
};

struct BidegreeOptions {
  std::uint64_t seed = 0;
  long long mc_samples = 2000000;
  int workers = 1;
  int base_pairs = 3;  // independence re-check count
};

struct SliceEvidence {
  std::string method;  // "linear", "winding" or "monte-carlo"
  double estimate = 0.0;
  double std_error = 0.0;
};

struct BidegreeResult {
  Bidegree degrees;
  SliceEvidence alpha_evidence;
  SliceEvidence beta_evidence;
};

namespace detail {

inline long long slice_degree(const MapDescriptor& m, Slice which, const Vec& fixed,
                              const BidegreeOptions& opt, SliceEvidence& ev) {
  if (auto exact = linear_slice_degree(m, which, fixed)) {
    ev = {"linear", static_cast<double>(*exact), 0.0};
    return *exact;
  }
  if (m.n == 2) {
    long long w = winding_degree(m, which, fixed);
    ev = {"winding", static_cast<double>(w), 0.0};
    return w;
  }
  McEstimate est = mc_degree(m, which, fixed, opt.mc_samples, opt.seed, opt.workers);
  double nearest = std::round(est.estimate);
  if (std::abs(est.estimate - nearest) > 0.3)
    throw std::domain_error("bidegree: Monte Carlo estimate " + std::to_string(est.estimate) +
                            " is not within 0.3 of an integer; increase samples");
  ev = {"monte-carlo", est.estimate, est.std_error};
  return static_cast<long long>(nearest);
}

}  // namespace detail

/// Bidegree of the map, with each slice routed to the exact linear path when
/// available, the winding number on the circle, and the Monte Carlo
/// integrator otherwise. The computation is repeated at `base_pairs` random
/// base points and must agree exactly after rounding.
inline BidegreeResult bidegree(const MapDescriptor& m, BidegreeOptions opt = {}) {
  if (opt.base_pairs < 1) throw std::invalid_argument("bidegree: needs at least one base pair");
  BidegreeResult out;
  bool have = false;
  for (int trial = 0; trial < opt.base_pairs; ++trial) {
    CounterRng rng(opt.seed, 0xb1de6000u + static_cast<std::uint64_t>(trial));
    Vec p1 = uniform_sphere_point(rng, m.n);
    Vec p2 = uniform_sphere_point(rng, m.n);
    SliceEvidence ea, eb;
    long long alpha = detail::slice_degree(m, Slice::SecondFixed, p2, opt, ea);
    long long beta = detail::slice_degree(m, Slice::FirstFixed, p1, opt, eb);
    if (!have) {
      out.degrees = {alpha, beta};
      out.alpha_evidence = ea;
      out.beta_evidence = eb;
      have = true;
    } else if (out.degrees.alpha != alpha || out.degrees.beta != beta) {
      throw std::domain_error("bidegree: disagreement across base pairs");
    }
  }
  return out;
}

// --- Hopf invariant --------------------------------------------------------------

/// The cone of the induced map on joins has x^2 = h y with |h| = |alpha beta|;
/// only the magnitude is orientation-independent, so it is primary and the
/// signed product is carried as an annotation.
struct HopfInvariant {
  long long magnitude = 0;
  long long signed_product = 0;
  std::string note;
};

inline HopfInvariant hopf_from_bidegree(const Bidegree& b) {
  HopfInvariant h;
  h.signed_product = b.alpha * b.beta;
  h.magnitude = h.signed_product < 0 ? -h.signed_product : h.signed_product;
  h.note =
      "sign depends on orientation conventions; only the magnitude is "
      "convention-free";
  return h;
}

}  // namespace toda::degree
