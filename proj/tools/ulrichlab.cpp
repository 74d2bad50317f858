// Command-line front end: classify bundles, print cohomology tables, run
// Fedder checks, decompose pushforwards on P^n, cross-check Hilbert functions
// and audit the almost-Ulrich theorems on concrete hypersurfaces.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ulrichlab/ulrichlab.hpp"

namespace {

using namespace ulrichlab;
using nlohmann::json;

constexpr int kExitUsage = 2;
constexpr int kExitInconsistent = 3;

/// Bad flag value; reported with exit code 2.
struct UsageError : std::runtime_error {
  UsageError(const std::string& flag, const std::string& what) : std::runtime_error(flag + ": " + what) {}
};

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

IntRange parse_range(const std::string& flag, const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      std::size_t used = 0;
      const auto v = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    std::size_t used_lo = 0, used_hi = 0;
    const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
    IntRange r{std::stoll(lo, &used_lo), std::stoll(hi, &used_hi)};
    if (used_lo != lo.size() || used_hi != hi.size()) throw std::invalid_argument(text);
    if (r.lo > r.hi) throw UsageError(flag, "empty range '" + text + "'");
    return r;
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError(flag, "expected a..b, got '" + text + "'");
  }
}

std::vector<int> parse_int_list(const std::string& flag, const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(flag, "expected a comma-separated integer list, got '" + text + "'");
    }
  }
  return out;
}

/// Flags shared by every command that works on a space.
struct SpaceFlags {
  std::uint32_t p = 0;
  int n = 0;
  std::optional<int> d;
  std::optional<std::string> f;

  void attach(CLI::App* cmd) {
    cmd->add_option("--p", p, "characteristic (prime)")->required();
    cmd->add_option("--n", n, "ambient projective dimension (1..4)")->required();
    cmd->add_option("--d", d, "hypersurface degree; omit for P^n itself");
    cmd->add_option("--f", f, "defining polynomial, e.g. \"x0^4+x1^4+x2^4+x3^4\"");
  }

  PrimeField field() const {
    try {
      return PrimeField(p);
    } catch (const std::exception& e) {
      throw UsageError("--p", e.what());
    }
  }

  std::optional<Polynomial> polynomial() const {
    if (!f) return std::nullopt;
    if (n < 1 || n > AmbientSpace::kMaxAmbientDim) throw UsageError("--n", "must be in [1, 4]");
    try {
      return parse_polynomial(*f, field(), static_cast<std::size_t>(n + 1));
    } catch (const std::exception& e) {
      throw UsageError("--f", e.what());
    }
  }

  AmbientSpace space() const {
    (void)field();
    if (n < 1 || n > AmbientSpace::kMaxAmbientDim) throw UsageError("--n", "must be in [1, 4]");
    if (!d) {
      if (f) throw UsageError("--f", "a defining polynomial needs --d");
      return AmbientSpace::projective_space(n, p);
    }
    if (*d < 1) throw UsageError("--d", "must be >= 1");
    try {
      return AmbientSpace::hypersurface(n, *d, p, polynomial());
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& e) {
      throw UsageError("--f", e.what());
    }
  }
};

BundleSpec bundle_flag(const std::string& text) {
  try {
    return parse_bundle(text);
  } catch (const std::exception& e) {
    throw UsageError("--bundle", e.what());
  }
}

std::string describe(const AmbientSpace& s) {
  std::ostringstream out;
  if (s.is_hypersurface()) {
    out << "hypersurface n=" << s.n() << " d=" << s.d() << " p=" << s.p();
    if (s.f()) out << " f=" << s.f()->to_string();
  } else {
    out << "P^" << s.n() << " p=" << s.p();
  }
  return out.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string witness_text(const std::optional<Counterexample>& w) {
  if (!w) return "";
  return "m=" + std::to_string(w->m) + " dim=" + to_decimal(w->dim);
}

void print_classify_text(const ClassifyReport& r) {
  std::cout << "space:   " << describe(r.space) << "\n";
  std::cout << "bundle:  " << to_string(r.bundle) << "\n";
  if (!r.verdict) {
    std::cout << "verdict: error " << r.error.value_or("unknown")
              << " (B1 cohomology needs a Frobenius split hypersurface)\n";
    return;
  }
  const Verdict& v = *r.verdict;
  std::cout << "verdict: acm=" << yes_no(v.acm) << " weakly_ulrich=" << yes_no(v.weakly_ulrich)
            << " almost_ulrich=" << yes_no(v.almost_ulrich) << " ulrich=" << yes_no(v.ulrich) << "\n";
  std::cout << "conditions (witnesses are m in E(-m)):\n";
  for (const auto& c : v.conditions)
    std::cout << "  " << std::left << std::setw(11) << c.id << " j=" << c.j << "  " << std::setw(7) << c.ray.to_string()
              << " " << std::setw(9) << (c.holds() ? "vanishes" : "fails") << witness_text(c.result.counterexample)
              << "\n";
  std::cout << "obstructions: h^q(E(-q))=" << to_decimal(v.h_q_E_minus_q)
            << " h^0(E(-1))=" << to_decimal(v.h_0_E_minus_1) << "\n";
  if (!r.assumptions.empty()) {
    std::cout << "assumptions:";
    for (const auto& a : r.assumptions) std::cout << " " << a;
    std::cout << "\n";
  }
}

int cmd_classify(const SpaceFlags& sf, const std::string& bundle, bool as_json) {
  const ClassifyReport r = make_classify_report(sf.space(), bundle_flag(bundle));
  if (as_json)
    std::cout << to_json(r).dump(2) << "\n";
  else
    print_classify_text(r);
  return 0;
}

int cmd_table(const SpaceFlags& sf, const std::string& bundle, const std::string& degrees, const std::string& range,
              bool as_json) {
  const AmbientSpace space = with_known_splitting(sf.space());
  const BundleSpec spec = bundle_flag(bundle);
  std::vector<int> is;
  if (degrees.empty()) {
    for (int i = 0; i <= space.q(); ++i) is.push_back(i);
  } else {
    is = parse_int_list("--i", degrees);
    for (int i : is)
      if (i < 0 || i > space.q()) throw UsageError("--i", "degree " + std::to_string(i) + " outside [0, dim X]");
  }
  const IntRange ms = parse_range("--m", range);

  json rows = json::array();
  try {
    for (std::int64_t m = ms.lo; m <= ms.hi; ++m) {
      json row = {{"m", m}};
      for (int i : is) row["h" + std::to_string(i)] = to_decimal(bundle_cohom_dim(space, spec, i, m));
      rows.push_back(std::move(row));
    }
  } catch (const NotSplit& e) {
    if (as_json)
      std::cout << json{{"space", json_detail::space_json(space)}, {"bundle", json_detail::bundle_json(spec)},
                        {"error", "NotSplit"}, {"version", kVersion}}
                       .dump(2)
                << "\n";
    else
      std::cout << "error NotSplit: " << e.what() << "\n";
    return 0;
  }

  if (as_json) {
    std::cout << json{{"space", json_detail::space_json(space)},
                      {"bundle", json_detail::bundle_json(spec)},
                      {"twist", "E(m)"},
                      {"rows", rows},
                      {"version", kVersion}}
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << "h^i(E(m)) for E = " << to_string(spec) << " on " << describe(space) << "\n";
  std::cout << std::right << std::setw(6) << "m";
  for (int i : is) std::cout << std::setw(14) << ("h" + std::to_string(i));
  std::cout << "\n";
  for (const auto& row : rows) {
    std::cout << std::setw(6) << row["m"].get<std::int64_t>();
    for (int i : is) std::cout << std::setw(14) << row["h" + std::to_string(i)].get<std::string>();
    std::cout << "\n";
  }
  return 0;
}

Polynomial random_form(const PrimeField& field, int n, int d, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> coeff(0, field.characteristic() - 1);
  for (;;) {
    Polynomial f(field, static_cast<std::size_t>(n + 1));
    for (const auto& m : graded_piece_basis(static_cast<std::size_t>(n + 1), d)) f.add_term(m, coeff(rng));
    if (!f.is_zero()) return f;
  }
}

json fedder_instance(const PrimeField& field, int n, int d, const Polynomial& f) {
  const auto verdict = fedder_check(field.characteristic(), f, d, n);
  json out = {{"f", f.to_string()},
              {"split", verdict.split},
              {"witness", verdict.witness ? json(verdict.witness->to_string()) : json(nullptr)}};
  const auto action = frobenius_action(field.characteristic(), f, d, n);
  json m = json::array();
  for (std::size_t r = 0; r < action.matrix.rows(); ++r) {
    json row = json::array();
    for (auto v : action.matrix.row(r)) row.push_back(v);
    m.push_back(std::move(row));
  }
  out["frobenius_action"] = std::move(m);
  if (d == n + 1) out["routes_agree"] = verdict.split == !action.matrix.is_zero();
  if (d <= n) out["fano_corollary"] = verdict.split ? "split" : "instance not split; corollary is instance-dependent";
  return out;
}

int cmd_fedder(const SpaceFlags& sf, std::optional<int> sample, std::uint64_t seed, bool as_json) {
  if (!sf.d) throw UsageError("--d", "fedder needs a hypersurface degree");
  const PrimeField field = sf.field();
  if (sf.n < 1 || sf.n > AmbientSpace::kMaxAmbientDim) throw UsageError("--n", "must be in [1, 4]");
  if (*sf.d < 1) throw UsageError("--d", "must be >= 1");

  std::vector<Polynomial> instances;
  if (sample) {
    if (*sample < 1) throw UsageError("--sample", "must be positive");
    std::mt19937_64 rng(seed);
    for (int s = 0; s < *sample; ++s) instances.push_back(random_form(field, sf.n, *sf.d, rng));
  } else {
    auto f = sf.polynomial();
    if (!f) throw UsageError("--f", "give a polynomial or --sample N");
    instances.push_back(std::move(*f));
  }
  for (const auto& f : instances)
    if (!f.is_homogeneous() || f.degree() != *sf.d)
      throw UsageError("--f", "polynomial is not homogeneous of degree " + std::to_string(*sf.d));

  const auto results =
      parallel_map(instances.size(), [&](std::size_t i) { return fedder_instance(field, sf.n, *sf.d, instances[i]); });

  bool consistent = true;
  for (const auto& r : results)
    if (r.contains("routes_agree") && !r["routes_agree"].get<bool>()) consistent = false;

  if (as_json) {
    json out = {{"p", sf.p}, {"n", sf.n}, {"d", *sf.d}, {"instances", results}, {"version", kVersion}};
    if (sample) out["seed"] = seed;
    std::cout << out.dump(2) << "\n";
  } else {
    if (sample) std::cout << "seed " << seed << ", " << *sample << " random forms\n";
    for (const auto& r : results) {
      std::cout << (r["split"].get<bool>() ? "split     " : "not split ") << r["f"].get<std::string>();
      if (!r["witness"].is_null()) std::cout << "  witness " << r["witness"].get<std::string>();
      if (r.contains("routes_agree"))
        std::cout << "  hasse-witt " << (r["frobenius_action"][0][0].get<std::uint32_t>() != 0 ? "nonzero" : "zero");
      if (r.contains("fano_corollary") && !r["split"].get<bool>()) std::cout << "  [fano corollary fails here]";
      std::cout << "\n";
    }
  }
  if (!consistent) {
    std::cerr << "internal inconsistency: Fedder and Hasse-Witt routes disagree\n";
    return kExitInconsistent;
  }
  return 0;
}

int cmd_decompose(std::uint32_t p, int n, int k, bool as_json) {
  try {
    (void)PrimeField(p);
  } catch (const std::exception& e) {
    throw UsageError("--p", e.what());
  }
  if (n < 1 || n > AmbientSpace::kMaxAmbientDim) throw UsageError("--n", "must be in [1, 4]");
  const TwistMultiset ms = decompose_pn(p, n, k);
  // Cross-check: sum_j m_j h^0(O(t + j)) = h^0(O(k + p t)).
  for (int t = -2; t <= 6; ++t) {
    BigInt lhs = 0;
    for (const auto& [j, mult] : ms) lhs += mult * pn_cohom(n, 0, t + j);
    if (lhs != pn_cohom(n, 0, k + static_cast<std::int64_t>(p) * t)) {
      std::cerr << "internal inconsistency: decomposition fails the Hilbert-function check at t=" << t << "\n";
      return kExitInconsistent;
    }
  }
  if (as_json) {
    json summands = json::array();
    for (const auto& [j, mult] : ms) summands.push_back({{"twist", j}, {"multiplicity", mult}});
    std::cout << json{{"p", p}, {"n", n}, {"k", k}, {"summands", summands}, {"text", format_decomposition(ms)},
                      {"version", kVersion}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << format_decomposition(ms) << "\n";
  }
  return 0;
}

int cmd_hilbert(const SpaceFlags& sf, const std::string& bundle, const std::string& range, bool as_json) {
  const AmbientSpace space = sf.space();
  if (!space.is_hypersurface()) throw UsageError("--d", "hilbert needs a hypersurface");
  if (!space.f()) throw UsageError("--f", "hilbert needs the defining polynomial");
  const BundleSpec spec = bundle_flag(bundle);
  const IntRange ts = parse_range("--t", range);
  const auto p = static_cast<std::int64_t>(space.p());
  const int c = bundle_twist(spec);

  const PresentationMatrix pm = std::holds_alternative<FrobPush>(spec)
                                    ? build_frobpush_presentation(space.p(), *space.f(), space.d(), std::get<FrobPush>(spec).k)
                                    : build_b1_presentation(space.p(), *space.f(), space.d());

  const std::size_t count = static_cast<std::size_t>(ts.hi - ts.lo + 1);
  const auto module_dims = parallel_map(count, [&](std::size_t idx) {
    return hilbert_function(pm, static_cast<int>(ts.lo + static_cast<std::int64_t>(idx) + c));
  });

  json rows = json::array();
  bool all_match = true;
  for (std::size_t idx = 0; idx < count; ++idx) {
    const std::int64_t t = ts.lo + static_cast<std::int64_t>(idx);
    const std::int64_t s = t + c;
    BigInt closed = std::holds_alternative<FrobPush>(spec)
                        ? hyp_cohom(space, 0, std::get<FrobPush>(spec).k + p * s)
                        : hyp_cohom(space, 0, p * s) - hyp_cohom(space, 0, s);
    const bool match = closed == module_dims[idx];
    all_match = all_match && match;
    rows.push_back({{"t", t}, {"module", to_decimal(module_dims[idx])}, {"closed_form", to_decimal(closed)}, {"match", match}});
  }

  if (as_json) {
    std::cout << json{{"space", json_detail::space_json(space)},
                      {"bundle", json_detail::bundle_json(spec)},
                      {"presentation", {{"rows", pm.rows()}, {"cols", pm.cols()}}},
                      {"rows", rows},
                      {"assumptions", default_assumptions(space)},
                      {"version", kVersion}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "Hilbert function of " << to_string(spec) << " on " << describe(space) << " (presentation "
              << pm.rows() << "x" << pm.cols() << ")\n";
    std::cout << std::setw(6) << "t" << std::setw(14) << "module" << std::setw(14) << "closed form" << "\n";
    for (const auto& r : rows)
      std::cout << std::setw(6) << r["t"].get<std::int64_t>() << std::setw(14) << r["module"].get<std::string>()
                << std::setw(14) << r["closed_form"].get<std::string>() << (r["match"].get<bool>() ? "" : "  MISMATCH")
                << "\n";
  }
  if (!all_match) {
    std::cerr << "internal inconsistency: module route and closed form disagree\n";
    return kExitInconsistent;
  }
  return 0;
}

int cmd_audit(const SpaceFlags& sf, const std::string& theorem, bool as_json) {
  TheoremId id;
  try {
    id = parse_theorem_id(theorem);
  } catch (const std::exception& e) {
    throw UsageError("--theorem", e.what());
  }
  AuditReport report = [&] {
    try {
      return audit_theorem(id, sf.space());
    } catch (const UnsupportedSpace& e) {
      throw UsageError("--d", e.what());
    }
  }();

  if (as_json) {
    std::cout << to_json(report).dump(2) << "\n";
    return 0;
  }
  std::cout << "theorem " << to_string(report.theorem) << " on " << describe(report.space) << ", E = "
            << to_string(report.bundle) << "\n";
  std::cout << "hypotheses:";
  for (const auto& h : report.hypotheses) std::cout << " " << h.name << (h.met ? "=met" : "=UNMET");
  std::cout << "\n";
  if (report.error) {
    std::cout << "error " << *report.error << ": classification not possible\n";
    return 0;
  }
  auto print_claims = [](const std::vector<ClaimCheck>& claims) {
    for (const auto& c : claims)
      std::cout << "  " << std::left << std::setw(22) << c.id << " j=" << c.j << "  " << std::setw(10) << c.range()
                << " " << std::setw(9) << (c.agree() ? "AGREE" : "DISAGREE") << witness_text(c.witness)
                << "   [asserted: " << c.asserted << "]\n";
  };
  std::cout << "claims:\n";
  print_claims(report.claims);
  if (!report.remarks.empty()) {
    std::cout << "remarks (not counted):\n";
    print_claims(report.remarks);
  }
  const Verdict& v = *report.verdict;
  std::cout << "verdict: acm=" << yes_no(v.acm) << " weakly_ulrich=" << yes_no(v.weakly_ulrich)
            << " almost_ulrich=" << yes_no(v.almost_ulrich) << " ulrich=" << yes_no(v.ulrich) << "\n";
  std::cout << "obstructions: h^q(E(-q))=" << to_decimal(v.h_q_E_minus_q)
            << " h^0(E(-1))=" << to_decimal(v.h_0_E_minus_1) << "\n";
  std::cout << "overall: " << (report.agree() ? "AGREE" : "DISAGREE") << " (" << report.disagreements()
            << " disagreement(s))\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ulrichlab: Frobenius pushforwards, B^1 sheaves and Ulrich-type vanishing on hypersurfaces"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  SpaceFlags classify_flags, table_flags, fedder_flags, hilbert_flags, audit_flags;
  std::string bundle, table_bundle, hilbert_bundle = "b1", degrees, m_range = "-3..3", t_range = "0..4", theorem;
  std::optional<int> sample;
  std::uint64_t seed = 1;
  std::uint32_t dec_p = 0;
  int dec_n = 0, dec_k = 0;

  auto* classify = app.add_subcommand("classify", "classify a bundle as ACM / weakly / almost / Ulrich");
  classify_flags.attach(classify);
  classify->add_option("--bundle", bundle, "frobpush:k=<int>,c=<int> or b1:c=<int>")->required();

  auto* table = app.add_subcommand("table", "table of h^i(E(m)) over a twist range");
  table_flags.attach(table);
  table->add_option("--bundle", table_bundle, "bundle descriptor")->required();
  table->add_option("--i", degrees, "cohomological degrees, e.g. 0,1,2 (default: all)");
  table->add_option("--m", m_range, "twist range a..b (inclusive)");

  auto* fedder = app.add_subcommand("fedder", "Fedder splitting check and Frobenius action on H^q(O_X)");
  fedder_flags.attach(fedder);
  fedder->add_option("--sample", sample, "check N seeded random forms instead of --f");
  fedder->add_option("--seed", seed, "seed for --sample");

  auto* decompose = app.add_subcommand("decompose", "line-bundle decomposition of F_* O_{P^n}(k)");
  decompose->add_option("--p", dec_p, "characteristic (prime)")->required();
  decompose->add_option("--n", dec_n, "dimension of P^n")->required();
  decompose->add_option("--k", dec_k, "twist k");

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function from a presentation matrix vs closed form");
  hilbert_flags.attach(hilbert);
  hilbert->add_option("--bundle", hilbert_bundle, "frobpush:k=..,c=.. or b1[:c=..]");
  hilbert->add_option("--t", t_range, "degree range a..b (inclusive)");

  auto* audit = app.add_subcommand("audit", "audit a theorem instance (main, gen-type, calabi-yau)");
  audit_flags.attach(audit);
  audit->add_option("--theorem", theorem, "main | gen-type | calabi-yau")->required();

  // Options may follow the subcommand name as well.
  for (auto* sub : {classify, table, fedder, decompose, hilbert, audit})
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const bool as_json = format == "json";
  try {
    if (*classify) return cmd_classify(classify_flags, bundle, as_json);
    if (*table) return cmd_table(table_flags, table_bundle, degrees, m_range, as_json);
    if (*fedder) return cmd_fedder(fedder_flags, sample, seed, as_json);
    if (*decompose) return cmd_decompose(dec_p, dec_n, dec_k, as_json);
    if (*hilbert) return cmd_hilbert(hilbert_flags, hilbert_bundle, t_range, as_json);
    if (*audit) return cmd_audit(audit_flags, theorem, as_json);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
