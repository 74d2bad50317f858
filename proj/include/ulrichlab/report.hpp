#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "bundle.hpp"
#include "classifier.hpp"
#include "cohomology.hpp"

namespace ulrichlab {

inline constexpr const char* kVersion = "1.0.0";

/// Everything `classify` prints, in a form that survives a JSON round trip.
struct ClassifyReport {
  AmbientSpace space;
  BundleSpec bundle;
  std::optional<Verdict> verdict;
  std::optional<std::string> error;
  std::vector<std::string> assumptions;
};

inline std::vector<std::string> default_assumptions(const AmbientSpace& space) {
  if (!space.is_hypersurface()) return {};
  return {"irreducible_f", "smoothness_unchecked"};
}

inline ClassifyReport make_classify_report(const AmbientSpace& space, const BundleSpec& spec) {
  ClassifyReport r{space, spec, std::nullopt, std::nullopt, default_assumptions(space)};
  try {
    r.verdict = classify(space, spec);
  } catch (const NotSplit&) {
    r.error = "NotSplit";
  }
  return r;
}

namespace json_detail {

using nlohmann::json;

inline json space_json(const AmbientSpace& s) {
  return {{"kind", s.is_hypersurface() ? "hypersurface" : "projective_space"},
          {"p", s.p()},
          {"n", s.n()},
          {"d", s.is_hypersurface() ? json(s.d()) : json(nullptr)},
          {"f", s.f() ? json(s.f()->to_string()) : json(nullptr)}};
}

inline AmbientSpace space_from_json(const json& j) {
  const auto p = j.at("p").get<std::uint32_t>();
  const int n = j.at("n").get<int>();
  if (j.at("kind") == "projective_space") return AmbientSpace::projective_space(n, p);
  std::optional<Polynomial> f;
  if (!j.at("f").is_null())
    f = parse_polynomial(j.at("f").get<std::string>(), PrimeField(p), static_cast<std::size_t>(n + 1));
  return AmbientSpace::hypersurface(n, j.at("d").get<int>(), p, std::move(f));
}

inline json bundle_json(const BundleSpec& b) {
  const auto* fp = std::get_if<FrobPush>(&b);
  return {{"kind", bundle_kind(b)}, {"k", fp ? json(fp->k) : json(nullptr)}, {"c", bundle_twist(b)}};
}

inline BundleSpec bundle_from_json(const json& j) {
  if (j.at("kind") == "frobpush") return FrobPush{j.at("k").get<int>(), j.at("c").get<int>()};
  return B1Sheaf{j.at("c").get<int>()};
}

inline Ray ray_from_string(const std::string& s) {
  if (s == "all") return Ray::everywhere();
  if (s.rfind("m<=", 0) == 0) return Ray::at_most(std::stoll(s.substr(3)));
  if (s.rfind("m>=", 0) == 0) return Ray::at_least(std::stoll(s.substr(3)));
  throw ParseError("bad ray '" + s + "'");
}

inline void put_witness(json& out, const std::optional<Counterexample>& w) {
  out["witness_m"] = w ? json(w->m) : json(nullptr);
  out["witness_dim"] = w ? json(to_decimal(w->dim)) : json(nullptr);
}

inline std::optional<Counterexample> get_witness(const json& j) {
  if (j.at("witness_m").is_null()) return std::nullopt;
  return Counterexample{j.at("witness_m").get<std::int64_t>(), BigInt(j.at("witness_dim").get<std::string>())};
}

}  // namespace json_detail

inline nlohmann::json to_json(const ClassifyReport& r) {
  using nlohmann::json;
  using namespace json_detail;
  json out;
  out["space"] = space_json(r.space);
  out["bundle"] = bundle_json(r.bundle);
  json conditions = json::array();
  if (r.verdict) {
    const Verdict& v = *r.verdict;
    out["verdict"] = {{"acm", v.acm},
                      {"weakly_ulrich", v.weakly_ulrich},
                      {"almost_ulrich", v.almost_ulrich},
                      {"ulrich", v.ulrich}};
    for (const auto& c : v.conditions) {
      json row = {{"id", c.id}, {"j", c.j}, {"ray", c.ray.to_string()}, {"result", c.holds() ? "vanishes" : "fails"}};
      put_witness(row, c.result.counterexample);
      conditions.push_back(std::move(row));
    }
    out["obstructions"] = {{"h_q_E_minus_q", to_decimal(v.h_q_E_minus_q)},
                           {"h_0_E_minus_1", to_decimal(v.h_0_E_minus_1)}};
  } else {
    out["verdict"] = {{"error", r.error.value_or("unknown")}};
    out["obstructions"] = nullptr;
  }
  out["conditions"] = std::move(conditions);
  out["assumptions"] = r.assumptions;
  out["version"] = kVersion;
  return out;
}

inline ClassifyReport classify_report_from_json(const nlohmann::json& j) {
  using namespace json_detail;
  ClassifyReport r{space_from_json(j.at("space")), bundle_from_json(j.at("bundle")), std::nullopt, std::nullopt,
                   j.at("assumptions").get<std::vector<std::string>>()};
  const auto& v = j.at("verdict");
  if (v.contains("error")) {
    r.error = v.at("error").get<std::string>();
    return r;
  }
  Verdict out;
  out.acm = v.at("acm");
  out.weakly_ulrich = v.at("weakly_ulrich");
  out.almost_ulrich = v.at("almost_ulrich");
  out.ulrich = v.at("ulrich");
  for (const auto& c : j.at("conditions"))
    out.conditions.push_back({c.at("id").get<std::string>(), c.at("j").get<int>(),
                              ray_from_string(c.at("ray").get<std::string>()), RayVerdict{get_witness(c)}});
  out.h_q_E_minus_q = BigInt(j.at("obstructions").at("h_q_E_minus_q").get<std::string>());
  out.h_0_E_minus_1 = BigInt(j.at("obstructions").at("h_0_E_minus_1").get<std::string>());
  r.verdict = std::move(out);
  return r;
}

inline bool operator==(const ConditionRecord& a, const ConditionRecord& b) {
  return a.id == b.id && a.j == b.j && a.ray == b.ray && a.result.counterexample == b.result.counterexample;
}

inline bool operator==(const Verdict& a, const Verdict& b) {
  return a.acm == b.acm && a.weakly_ulrich == b.weakly_ulrich && a.almost_ulrich == b.almost_ulrich &&
         a.ulrich == b.ulrich && a.conditions == b.conditions && a.h_q_E_minus_q == b.h_q_E_minus_q &&
         a.h_0_E_minus_1 == b.h_0_E_minus_1;
}

/// Field-wise equality of everything the JSON form carries (the splitting
/// state is recomputed on demand and is not part of it).
inline bool operator==(const ClassifyReport& a, const ClassifyReport& b) {
  return a.space.kind() == b.space.kind() && a.space.n() == b.space.n() && a.space.d() == b.space.d() &&
         a.space.p() == b.space.p() && a.space.f() == b.space.f() && a.bundle == b.bundle &&
         a.verdict == b.verdict && a.error == b.error && a.assumptions == b.assumptions;
}

inline nlohmann::json to_json(const AuditReport& r) {
  using nlohmann::json;
  using namespace json_detail;
  auto claims_json = [](const std::vector<ClaimCheck>& claims) {
    json arr = json::array();
    for (const auto& c : claims) {
      json row = {{"id", c.id},
                  {"j", c.j},
                  {"range", c.range()},
                  {"asserted", c.asserted},
                  {"result", c.agree() ? "AGREE" : "DISAGREE"}};
      put_witness(row, c.witness);
      arr.push_back(std::move(row));
    }
    return arr;
  };
  json hyps = json::array();
  for (const auto& h : r.hypotheses) hyps.push_back({{"name", h.name}, {"met", h.met}});

  json out;
  out["theorem"] = to_string(r.theorem);
  out["space"] = space_json(r.space);
  out["bundle"] = bundle_json(r.bundle);
  out["hypotheses"] = std::move(hyps);
  out["hypotheses_met"] = r.hypotheses_met();
  out["claims"] = claims_json(r.claims);
  out["remarks"] = claims_json(r.remarks);
  if (r.verdict) {
    ClassifyReport cr{r.space, r.bundle, r.verdict, std::nullopt, default_assumptions(r.space)};
    out["classification"] = to_json(cr);
  } else {
    out["classification"] = nullptr;
  }
  out["error"] = r.error ? json(*r.error) : json(nullptr);
  out["agree"] = r.agree();
  out["version"] = kVersion;
  return out;
}

}  // namespace ulrichlab
