#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "bundle.hpp"
#include "errors.hpp"
#include "polynomial.hpp"

namespace ulrichlab {

enum class SplitState { Unknown, Split, NotSplit };

/// Either P^n or a degree-d hypersurface X = V(f) in P^n, over F_p.
class AmbientSpace {
 public:
  enum class Kind { ProjectiveSpace, Hypersurface };

  static constexpr int kMaxAmbientDim = 4;

  /// P^n is Frobenius split, so B^1 is always available on it.
  static AmbientSpace projective_space(int n, std::uint32_t p) {
    check_n(n);
    return AmbientSpace(Kind::ProjectiveSpace, n, 0, PrimeField(p), std::nullopt, SplitState::Split);
  }

  /// A hypersurface known only by (n, d) when f is absent. Smoothness is never checked.
  static AmbientSpace hypersurface(int n, int d, std::uint32_t p, std::optional<Polynomial> f = std::nullopt) {
    check_n(n);
    if (d < 1) throw std::invalid_argument("hypersurface degree must be >= 1, got " + std::to_string(d));
    const PrimeField field(p);
    if (f) {
      if (!(f->field() == field)) throw InconsistentDegrees("defining polynomial is over a different field");
      if (f->n_vars() != static_cast<std::size_t>(n + 1))
        throw InconsistentDegrees("defining polynomial must have " + std::to_string(n + 1) + " variables");
      if (f->is_zero()) throw InconsistentDegrees("defining polynomial is zero");
      if (!f->is_homogeneous() || f->degree() != d)
        throw InconsistentDegrees("defining polynomial is not homogeneous of degree " + std::to_string(d));
    }
    return AmbientSpace(Kind::Hypersurface, n, d, field, std::move(f), SplitState::Unknown);
  }

  Kind kind() const { return kind_; }
  bool is_hypersurface() const { return kind_ == Kind::Hypersurface; }
  int n() const { return n_; }
  /// Degree of the hypersurface; 0 for P^n.
  int d() const { return d_; }
  /// dim X.
  int q() const { return is_hypersurface() ? n_ - 1 : n_; }
  std::uint32_t p() const { return field_.characteristic(); }
  const PrimeField& field() const { return field_; }
  const std::optional<Polynomial>& f() const { return f_; }
  SplitState split_state() const { return split_; }

  /// omega_X = O_X(canonical_degree()).
  int canonical_degree() const { return is_hypersurface() ? d_ - n_ - 1 : -n_ - 1; }

  AmbientSpace with_split_state(SplitState s) const {
    AmbientSpace out(*this);
    if (kind_ == Kind::Hypersurface) out.split_ = s;
    return out;
  }

 private:
  AmbientSpace(Kind kind, int n, int d, PrimeField field, std::optional<Polynomial> f, SplitState split)
      : kind_(kind), n_(n), d_(d), field_(field), f_(std::move(f)), split_(split) {}

  static void check_n(int n) {
    if (n < 1 || n > kMaxAmbientDim)
      throw UnsupportedSpace("ambient dimension n must be in [1, 4], got " + std::to_string(n));
  }

  Kind kind_;
  int n_;
  int d_;
  PrimeField field_;
  std::optional<Polynomial> f_;
  SplitState split_;
};

/// The affine twist argument t(m) = a + b*m.
struct TwistFamily {
  std::int64_t a = 0;
  std::int64_t b = 0;

  std::int64_t operator()(std::int64_t m) const {
    std::int64_t bm = 0, t = 0;
    if (__builtin_mul_overflow(b, m, &bm) || __builtin_add_overflow(a, bm, &t))
      throw std::overflow_error("twist argument overflows 64 bits");
    return t;
  }

  /// The family m -> t(-m).
  TwistFamily reflected() const { return {a, -b}; }

  friend bool operator==(const TwistFamily&, const TwistFamily&) = default;
};

/// A half-line of integers {m <= bound} or {m >= bound}, or all of Z.
class Ray {
 public:
  enum class Direction { AtMost, AtLeast, All };

  static Ray at_most(std::int64_t bound) { return Ray(Direction::AtMost, bound); }
  static Ray at_least(std::int64_t bound) { return Ray(Direction::AtLeast, bound); }
  static Ray everywhere() { return Ray(Direction::All, 0); }

  Direction direction() const { return dir_; }
  std::int64_t bound() const { return bound_; }

  bool contains(std::int64_t m) const {
    switch (dir_) {
      case Direction::AtMost: return m <= bound_;
      case Direction::AtLeast: return m >= bound_;
      case Direction::All: return true;
    }
    return false;
  }

  std::string to_string() const {
    switch (dir_) {
      case Direction::AtMost: return "m<=" + std::to_string(bound_);
      case Direction::AtLeast: return "m>=" + std::to_string(bound_);
      case Direction::All: return "all";
    }
    return {};
  }

  friend bool operator==(const Ray&, const Ray&) = default;

 private:
  Ray(Direction d, std::int64_t b) : dir_(d), bound_(b) {}
  Direction dir_;
  std::int64_t bound_;
};

/// h^i(P^n, O(t)).
inline BigInt pn_cohom(int n, int i, std::int64_t t) {
  if (n < 1) throw std::invalid_argument("pn_cohom: n must be >= 1");
  if (i < 0 || i > n) throw std::out_of_range("pn_cohom: cohomological degree " + std::to_string(i) + " out of range");
  if (i == 0) return t >= 0 ? binom(n + t, n) : BigInt(0);
  if (i == n) return t <= -n - 1 ? binom(-t - 1, n) : BigInt(0);
  return 0;
}

/// h^i(X, O_X(t)) for a degree-d hypersurface X in P^n, read off the long exact
/// sequence of 0 -> O(t-d) -> O(t) -> O_X(t) -> 0. Depends only on (n, d).
inline BigInt hyp_cohom(int n, int d, int i, std::int64_t t) {
  const int q = n - 1;
  if (i < 0 || i > q) throw std::out_of_range("hyp_cohom: cohomological degree " + std::to_string(i) + " out of range");
  BigInt h = 0;
  if (i == 0) h += pn_cohom(n, 0, t) - pn_cohom(n, 0, t - d);
  if (i == q) h += pn_cohom(n, n, t - d) - pn_cohom(n, n, t);
  return h;
}

inline BigInt hyp_cohom(const AmbientSpace& space, int i, std::int64_t t) {
  if (!space.is_hypersurface()) throw std::invalid_argument("hyp_cohom: space is not a hypersurface");
  return hyp_cohom(space.n(), space.d(), i, t);
}

/// h^i of the line bundle O(t) on the space, whichever kind it is.
inline BigInt line_cohom(const AmbientSpace& space, int i, std::int64_t t) {
  return space.is_hypersurface() ? hyp_cohom(space.n(), space.d(), i, t) : pn_cohom(space.n(), i, t);
}

/// Twist values t at which h^i(O(t)) switches to a new polynomial formula.
/// Between consecutive values (and beyond the extremes) it is a single
/// polynomial in t of degree <= n.
inline std::vector<std::int64_t> regime_starts(const AmbientSpace& space, int i) {
  const int n = space.n();
  std::vector<std::int64_t> starts;
  if (!space.is_hypersurface()) {
    if (i == 0) starts.push_back(0);
    if (i == n) starts.push_back(-n);
    return starts;
  }
  const int d = space.d();
  if (i == 0) starts.insert(starts.end(), {0, d});
  if (i == space.q()) starts.insert(starts.end(), {-n, d - n});
  std::sort(starts.begin(), starts.end());
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
  return starts;
}

/// Serre duality on X: h^q(O_X(t)) == h^0(O_X(K - t)) with K = d - n - 1.
inline bool serre_dual_check(const AmbientSpace& space, std::int64_t t) {
  if (!space.is_hypersurface()) throw std::invalid_argument("serre_dual_check: space is not a hypersurface");
  return hyp_cohom(space, space.q(), t) == hyp_cohom(space, 0, space.canonical_degree() - t);
}

/// One signed line-bundle contribution sign * h^i(O(t(m))).
struct SignedTwist {
  int sign = 1;
  TwistFamily twist;
};

/// Rewrites h^i(E(m)) as a signed sum of line-bundle cohomologies via the
/// projection formula and, for B^1, the splitting of O_X -> F_* O_X.
inline std::vector<SignedTwist> line_bundle_terms(const AmbientSpace& space, const BundleSpec& spec) {
  const std::int64_t p = space.p();
  if (const auto* fp = std::get_if<FrobPush>(&spec)) return {{+1, {fp->k + p * fp->c, p}}};

  const auto& b1 = std::get<B1Sheaf>(spec);
  if (space.split_state() != SplitState::Split)
    throw NotSplit(space.split_state() == SplitState::NotSplit
                       ? "B1 requested on a hypersurface that is not Frobenius split; the direct-sum formula is invalid"
                       : "B1 requested on a hypersurface whose Frobenius splitting is unverified");
  return {{+1, {p * b1.c, p}}, {-1, {b1.c, 1}}};
}

/// h^i(E(m)) for the bundle E described by `spec`.
inline BigInt bundle_cohom_dim(const AmbientSpace& space, const BundleSpec& spec, int i, std::int64_t m) {
  if (i < 0 || i > space.q()) throw std::out_of_range("bundle_cohom_dim: degree " + std::to_string(i) + " out of range");
  BigInt h = 0;
  for (const auto& term : line_bundle_terms(space, spec)) h += term.sign * line_cohom(space, i, term.twist(m));
  if (h < 0) throw std::logic_error("negative cohomology dimension for " + to_string(spec));
  return h;
}

struct Counterexample {
  std::int64_t m = 0;
  BigInt dim;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

/// Result of deciding h^i(E(-m)) = 0 over a ray: either proven vanishing or a
/// witness m (smallest |m|, ties going to the larger m) with its dimension.
struct RayVerdict {
  std::optional<Counterexample> counterexample;
  bool proven_vanishing() const { return !counterexample.has_value(); }
};

namespace detail {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

struct Piece {
  std::optional<std::int64_t> lo;  // nullopt = unbounded below
  std::optional<std::int64_t> hi;  // nullopt = unbounded above
};

inline std::int64_t piece_length_capped(const Piece& pc, std::int64_t cap) {
  if (!pc.lo || !pc.hi) return cap;
  const std::int64_t len = *pc.hi - *pc.lo + 1;
  return std::min(len, cap);
}

}  // namespace detail

/// Piecewise pieces of the ray on which every term stays within one polynomial regime.
inline std::vector<detail::Piece> ray_pieces(const AmbientSpace& space, const std::vector<SignedTwist>& terms, int i,
                                             const Ray& ray) {
  std::vector<std::int64_t> cuts;
  const auto starts = regime_starts(space, i);
  for (const auto& term : terms) {
    if (term.twist.b == 0) continue;
    for (std::int64_t r : starts) {
      cuts.push_back(detail::floor_div(r - term.twist.a, term.twist.b));
      cuts.push_back(detail::ceil_div(r - term.twist.a, term.twist.b));
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<detail::Piece> all;
  std::optional<std::int64_t> prev;
  for (std::int64_t k : cuts) {
    const std::optional<std::int64_t> lo = prev ? std::optional<std::int64_t>(*prev + 1) : std::nullopt;
    if (!lo || *lo <= k - 1) all.push_back({lo, k - 1});
    all.push_back({k, k});
    prev = k;
  }
  all.push_back({prev ? std::optional<std::int64_t>(*prev + 1) : std::nullopt, std::nullopt});

  std::vector<detail::Piece> out;
  for (auto pc : all) {
    if (ray.direction() == Ray::Direction::AtLeast) {
      if (!pc.lo || *pc.lo < ray.bound()) pc.lo = ray.bound();
    } else if (ray.direction() == Ray::Direction::AtMost) {
      if (!pc.hi || *pc.hi > ray.bound()) pc.hi = ray.bound();
    }
    if (pc.lo && pc.hi && *pc.lo > *pc.hi) continue;
    out.push_back(pc);
  }
  return out;
}

/// Exact decision of "h^i(E(-m)) = 0 for every m in the ray".
///
/// The ray is cut where any twist argument crosses a regime boundary. On each
/// piece the dimension is a polynomial in m of degree <= n, so it vanishes
/// identically iff it vanishes at n + 1 points of the piece.
inline RayVerdict vanishes_on_ray(const AmbientSpace& space, const BundleSpec& spec, int i, const Ray& ray) {
  if (i < 0 || i > space.q()) throw std::out_of_range("vanishes_on_ray: degree " + std::to_string(i) + " out of range");
  std::vector<SignedTwist> terms = line_bundle_terms(space, spec);
  for (auto& term : terms) term.twist = term.twist.reflected();

  auto dim_at = [&](std::int64_t m) {
    BigInt h = 0;
    for (const auto& term : terms) h += term.sign * line_cohom(space, i, term.twist(m));
    return h;
  };

  const std::int64_t samples = space.n() + 1;
  std::optional<Counterexample> best;
  auto better = [](std::int64_t m, const std::optional<Counterexample>& cur) {
    if (!cur) return true;
    const auto am = m < 0 ? -m : m;
    const auto ac = cur->m < 0 ? -cur->m : cur->m;
    return am < ac || (am == ac && m > cur->m);
  };

  for (const auto& pc : ray_pieces(space, terms, i, ray)) {
    // Probe n+1 points (or the whole piece when shorter).
    const std::int64_t count = detail::piece_length_capped(pc, samples);
    std::int64_t start = 0;
    if (pc.lo)
      start = *pc.lo;
    else if (pc.hi)
      start = *pc.hi - (count - 1);
    bool nonzero = false;
    for (std::int64_t s = 0; s < count && !nonzero; ++s) nonzero = dim_at(start + s) != 0;
    if (!nonzero) continue;

    // Walk outward from the point of the piece closest to zero; a nonzero
    // polynomial of degree <= n has a nonzero value among any n + 1 points.
    std::int64_t z = 0;
    if (pc.lo && z < *pc.lo) z = *pc.lo;
    if (pc.hi && z > *pc.hi) z = *pc.hi;
    auto inside = [&](std::int64_t m) { return (!pc.lo || m >= *pc.lo) && (!pc.hi || m <= *pc.hi); };
    for (std::int64_t step = 0;; ++step) {
      bool found = false;
      for (std::int64_t m : {z + step, z - step}) {
        if (!inside(m)) continue;
        BigInt h = dim_at(m);
        if (h != 0) {
          if (better(m, best)) best = Counterexample{m, std::move(h)};
          found = true;
        }
      }
      if (found) break;
      if (step > 4 * samples + 4) throw std::logic_error("vanishes_on_ray: witness search did not terminate");
    }
  }
  return RayVerdict{best};
}

}  // namespace ulrichlab
