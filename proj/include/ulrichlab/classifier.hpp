#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "bundle.hpp"
#include "cohomology.hpp"
#include "errors.hpp"
#include "fsplit.hpp"

namespace ulrichlab {

/// One vanishing requirement h^j(E(-m)) = 0 for all m in `ray`, and its outcome.
struct ConditionRecord {
  std::string id;
  int j = 0;
  Ray ray = Ray::everywhere();
  RayVerdict result;

  bool holds() const { return result.proven_vanishing(); }
};

/// Classification of a bundle against the Ulrich-type checklists.
///
/// Condition ids:
///   acm          h^j(E(m)) = 0 for all m, 1 <= j <= q-1
///   weak_low     h^j(E(-m)) = 0 for m <= j-1, 1 <= j <= q
///   weak_high    h^j(E(-m)) = 0 for m >= j+2, 0 <= j <= q-1
///   ulrich_top   h^q(E(-m)) = 0 for m <= q
///   ulrich_h0    h^0(E(-m)) = 0 for m >= 1
///   almost_top   h^q(E(-m)) = 0 for m <= q-1
///   almost_h0    h^0(E(-m)) = 0 for m >= 2
/// Witnesses always refer to the twist E(-m).
struct Verdict {
  bool acm = false;
  bool weakly_ulrich = false;
  bool almost_ulrich = false;
  bool ulrich = false;
  std::vector<ConditionRecord> conditions;
  BigInt h_q_E_minus_q;
  BigInt h_0_E_minus_1;

  bool all_hold(const std::string& id) const {
    return std::all_of(conditions.begin(), conditions.end(),
                       [&](const ConditionRecord& c) { return c.id != id || c.holds(); });
  }

  const ConditionRecord* find(const std::string& id, int j) const {
    for (const auto& c : conditions)
      if (c.id == id && c.j == j) return &c;
    return nullptr;
  }
};

/// Decides a hypersurface's splitting from f when it has not been decided yet.
inline AmbientSpace with_known_splitting(const AmbientSpace& space) {
  if (space.is_hypersurface() && space.f() && space.split_state() == SplitState::Unknown)
    return verify_splitting(space);
  return space;
}

inline Verdict classify(const AmbientSpace& input_space, const BundleSpec& spec) {
  const AmbientSpace space = with_known_splitting(input_space);
  const int q = space.q();
  if (q < 1) throw UnsupportedSpace("classify: the space must have positive dimension");
  // Surfaces NotSplit before any condition is evaluated.
  (void)line_bundle_terms(space, spec);

  Verdict v;
  auto check = [&](const std::string& id, int j, Ray ray) {
    v.conditions.push_back({id, j, ray, vanishes_on_ray(space, spec, j, ray)});
  };
  for (int j = 1; j <= q - 1; ++j) check("acm", j, Ray::everywhere());
  for (int j = 1; j <= q; ++j) check("weak_low", j, Ray::at_most(j - 1));
  for (int j = 0; j <= q - 1; ++j) check("weak_high", j, Ray::at_least(j + 2));
  check("ulrich_top", q, Ray::at_most(q));
  check("ulrich_h0", 0, Ray::at_least(1));
  check("almost_top", q, Ray::at_most(q - 1));
  check("almost_h0", 0, Ray::at_least(2));

  v.acm = v.all_hold("acm");
  v.weakly_ulrich = v.all_hold("weak_low") && v.all_hold("weak_high");
  v.ulrich = v.all_hold("ulrich_top") && v.acm && v.all_hold("ulrich_h0");
  v.almost_ulrich = v.all_hold("almost_top") && v.acm && v.all_hold("almost_h0");
  v.h_q_E_minus_q = bundle_cohom_dim(space, spec, q, -q);
  v.h_0_E_minus_1 = bundle_cohom_dim(space, spec, 0, -1);

  if ((v.ulrich && !v.almost_ulrich) || (v.almost_ulrich && !v.weakly_ulrich) || (v.almost_ulrich && !v.acm))
    throw std::logic_error("classify: implication chain ulrich => almost ulrich => weakly ulrich broken");
  return v;
}

enum class TheoremId { Main, GenType, CalabiYau };

inline std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::Main: return "main";
    case TheoremId::GenType: return "gen-type";
    case TheoremId::CalabiYau: return "calabi-yau";
  }
  return {};
}

inline TheoremId parse_theorem_id(const std::string& s) {
  if (s == "main") return TheoremId::Main;
  if (s == "gen-type") return TheoremId::GenType;
  if (s == "calabi-yau") return TheoremId::CalabiYau;
  throw ParseError("unknown theorem '" + s + "' (expected main, gen-type or calabi-yau)");
}

struct Hypothesis {
  std::string name;
  bool met = false;
};

/// A vanishing the theorem asserts, against what was computed.
/// `m_lo`/`m_hi` bound the twist range of E(-m); absent means unbounded.
struct ClaimCheck {
  std::string id;
  int j = 0;
  std::optional<std::int64_t> m_lo;
  std::optional<std::int64_t> m_hi;
  std::string asserted;
  std::optional<Counterexample> witness;

  bool agree() const { return !witness.has_value(); }

  std::string range() const {
    if (m_lo && m_hi && *m_lo == *m_hi) return "m=" + std::to_string(*m_lo);
    if (m_lo && m_hi) return std::to_string(*m_lo) + "<=m<=" + std::to_string(*m_hi);
    if (m_lo) return "m>=" + std::to_string(*m_lo);
    if (m_hi) return "m<=" + std::to_string(*m_hi);
    return "all";
  }
};

struct AuditReport {
  TheoremId theorem = TheoremId::Main;
  AmbientSpace space;
  BundleSpec bundle;
  std::vector<Hypothesis> hypotheses;
  /// The theorem's conclusion restated as vanishing claims.
  std::vector<ClaimCheck> claims;
  /// Side assertions from the accompanying remark; reported, never counted toward agreement.
  std::vector<ClaimCheck> remarks;
  std::optional<Verdict> verdict;
  /// Set when classification could not run (e.g. "NotSplit").
  std::optional<std::string> error;

  bool hypotheses_met() const {
    return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Hypothesis& h) { return h.met; });
  }
  bool agree() const {
    return !error && std::all_of(claims.begin(), claims.end(), [](const ClaimCheck& c) { return c.agree(); });
  }
  std::size_t disagreements() const {
    return static_cast<std::size_t>(std::count_if(claims.begin(), claims.end(), [](const ClaimCheck& c) { return !c.agree(); }));
  }
};

namespace detail {

inline ClaimCheck claim_on_ray(const AmbientSpace& space, const BundleSpec& spec, std::string id, int j, Ray ray,
                               std::string asserted) {
  ClaimCheck c{std::move(id), j, std::nullopt, std::nullopt, std::move(asserted), std::nullopt};
  if (ray.direction() == Ray::Direction::AtLeast) c.m_lo = ray.bound();
  if (ray.direction() == Ray::Direction::AtMost) c.m_hi = ray.bound();
  c.witness = vanishes_on_ray(space, spec, j, ray).counterexample;
  return c;
}

inline ClaimCheck claim_at(const AmbientSpace& space, const BundleSpec& spec, std::string id, int j, std::int64_t m,
                           std::string asserted) {
  ClaimCheck c{std::move(id), j, m, m, std::move(asserted), std::nullopt};
  BigInt h = bundle_cohom_dim(space, spec, j, -m);
  if (h != 0) c.witness = Counterexample{m, std::move(h)};
  return c;
}

/// The almost-Ulrich vanishing list, with the top-degree range split at its
/// boundary m = q-1 the way the hand proofs treat it.
inline std::vector<ClaimCheck> almost_ulrich_claims(const AmbientSpace& space, const BundleSpec& spec,
                                                    const std::string& boundary_assertion) {
  const int q = space.q();
  std::vector<ClaimCheck> out;
  out.push_back(claim_at(space, spec, "top_boundary", q, q - 1, boundary_assertion));
  out.push_back(claim_on_ray(space, spec, "top_ray", q, Ray::at_most(q - 2), "h^q(E(-m)) = 0"));
  for (int j = 1; j <= q - 1; ++j)
    out.push_back(claim_on_ray(space, spec, "acm", j, Ray::everywhere(), "h^j(E(m)) = 0 (ACM)"));
  out.push_back(claim_on_ray(space, spec, "h0_ray", 0, Ray::at_least(2), "h^0(E(-m)) = 0"));
  return out;
}

}  // namespace detail

/// Instantiates a theorem's bundle on the given space, classifies it and lists,
/// claim by claim, whether the computation agrees with what the theorem asserts.
/// Unmet hypotheses are recorded but do not stop the classification.
inline AuditReport audit_theorem(TheoremId theorem, const AmbientSpace& input_space) {
  const AmbientSpace space = with_known_splitting(input_space);
  const int n = space.n(), d = space.d(), q = space.q();
  const auto p = static_cast<int>(space.p());

  AuditReport report{theorem, space, FrobPush{}, {}, {}, {}, std::nullopt, std::nullopt};
  switch (theorem) {
    case TheoremId::Main: {
      if (!space.is_hypersurface()) throw UnsupportedSpace("theorem main concerns hypersurfaces");
      report.bundle = FrobPush{d - 3, 1};
      report.hypotheses = {{"surface_in_P3", n == 3}, {"d_minus_3_lt_p", d - 3 < p}};
      report.claims = detail::almost_ulrich_claims(space, report.bundle, "h^2(E(-1)) = h^0(O_X(-1)) = 0");
      break;
    }
    case TheoremId::GenType: {
      if (!space.is_hypersurface() || d < n + 2)
        throw UnsupportedSpace("theorem gen-type is exposed only for hypersurfaces with d >= n + 2");
      report.bundle = FrobPush{space.canonical_degree(), 1};
      report.hypotheses = {{"surface", q == 2},
                           {"omega_is_O(1)", space.canonical_degree() == 1},
                           {"H1_O_X_vanishes", q < 2 || hyp_cohom(space, 1, 0) == 0},
                           {"p_gt_2", p > 2}};
      report.claims = detail::almost_ulrich_claims(space, report.bundle, "h^2(E(-1)) = h^2(omega^p) = 0");
      break;
    }
    case TheoremId::CalabiYau: {
      report.bundle = B1Sheaf{q - 1};
      const bool split = space.split_state() == SplitState::Split;
      report.hypotheses = {{"frobenius_split", split}, {"dim_ge_2", q >= 2}, {"dim_le_3", q <= 3}};
      if (!split) {
        report.error = "NotSplit";
        return report;
      }
      report.claims = detail::almost_ulrich_claims(space, report.bundle, "h^q(E(-(q-1))) = h^q(B^1) = 0");
      if (q >= 4) {
        // Part (1): almost Ulrich iff h^0(B^1(q-1-m)) = 0 for 2 <= m <= q-2.
        std::optional<Counterexample> criterion_failure;
        for (int m = 2; m <= q - 2 && !criterion_failure; ++m) {
          BigInt h = bundle_cohom_dim(space, B1Sheaf{0}, 0, q - 1 - m);
          if (h != 0) criterion_failure = Counterexample{m, std::move(h)};
        }
        const Verdict v = classify(space, report.bundle);
        ClaimCheck c{"criterion_equivalence", 0, 2, q - 2, "almost Ulrich iff h^0(B^1(q-1-m)) = 0 for 2<=m<=q-2",
                     std::nullopt};
        if (v.almost_ulrich == criterion_failure.has_value()) {
          // Report whichever side produced a nonzero dimension.
          if (criterion_failure) {
            c.witness = criterion_failure;
          } else {
            for (const auto& rec : v.conditions)
              if (!rec.holds() && (rec.id == "acm" || rec.id == "almost_top" || rec.id == "almost_h0")) {
                c.witness = rec.result.counterexample;
                break;
              }
          }
        }
        report.claims = {c};
      }
      report.remarks.push_back(
          detail::claim_at(space, report.bundle, "remark_h0_E_minus_1", 0, 1, "h^0(E(-1)) = 0"));
      break;
    }
  }
  report.verdict = classify(space, report.bundle);
  return report;
}

}  // namespace ulrichlab
