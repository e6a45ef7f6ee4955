#include "knotchar/hp/hp.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

#include "knotchar/charvar/excluded.hpp"
#include "knotchar/error.hpp"
#include "knotchar/hp/prime_knot.hpp"

namespace knotchar {

namespace {

constexpr const char* kAuditKeys[] = {"a1_dim1", "a2_reduced",  "b1",         "b2",          "b3",
                                      "b4",      "c1_smooth",   "c2_zerodim", "c3_alexander"};

// Ordering for merging factor audits: the weakest status wins.
int weakness(AuditStatus s) {
  switch (s) {
    case AuditStatus::kNotApplicable: return 0;
    case AuditStatus::kVerified: return 1;
    case AuditStatus::kAsserted: return 2;
    case AuditStatus::kUnchecked: return 3;
    case AuditStatus::kViolated: return 4;
  }
  return 4;
}

AuditStatus weakest(AuditStatus a, AuditStatus b) { return weakness(a) >= weakness(b) ? a : b; }

AuditStatus check(bool ok) { return ok ? AuditStatus::kVerified : AuditStatus::kViolated; }

std::string provenance_of(const CurveModel& curve) {
  switch (curve.index()) {
    case 0: return "slice";
    case 1: return "component-count";
    default: return "external";
  }
}

// Factor data for the sum formulas: the prime result, or the reason it
// cannot enter them.
struct FactorCheck {
  std::optional<HPResult> result;
  AuditStatus c1 = AuditStatus::kVerified;
  AuditStatus c3 = AuditStatus::kVerified;
  std::string failure;
};

FactorCheck check_factor(const KnotSpec& k, const QuadNum& tau) {
  FactorCheck fc;
  try {
    fc.result = hp_prime(k, tau);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kExcludedTauUnsupported) throw;
    fc.c3 = AuditStatus::kViolated;
    fc.c1 = AuditStatus::kUnchecked;
    fc.failure = k.to_string() + ": C.3 violated (tau is excluded)";
    return fc;
  }
  const HPResult& r = *fc.result;
  fc.c3 = r.audit.get("b3");
  if (fc.c3 == AuditStatus::kViolated) {
    fc.failure = k.to_string() + ": C.3 violated (tau is excluded)";
  } else if (fc.c3 != AuditStatus::kVerified) {
    fc.failure = k.to_string() + ": C.3 not verified (no Alexander polynomial)";
  }
  const bool ones = std::all_of(r.multiplicities.begin(), r.multiplicities.end(), [](unsigned m) { return m == 1; });
  fc.c1 = !r.multiplicities_known ? AuditStatus::kUnchecked : check(ones);
  if (fc.failure.empty() && fc.c1 == AuditStatus::kViolated) {
    fc.failure = k.to_string() + ": C.1 violated (slice point of multiplicity > 1)";
  } else if (fc.failure.empty() && fc.c1 != AuditStatus::kVerified) {
    fc.failure = k.to_string() + ": C.1 not verified (multiplicities unknown)";
  }
  if (fc.failure.empty() && r.regime != Regime::kTheorem) {
    fc.failure = k.to_string() + ": factor outside the theorem regime (" + r.note + ")";
  }
  return fc;
}

unsigned slice_total(const HPResult& r) { return static_cast<unsigned>(r.graded->ranks.count(0) ? r.graded->ranks.at(0) : 0); }

AssumptionReport merge_audits(const std::vector<FactorCheck>& factors) {
  AssumptionReport out;
  for (const char* key : {"a1_dim1", "a2_reduced", "b1", "b2", "b3", "b4"}) {
    AuditStatus s = AuditStatus::kNotApplicable;
    for (const auto& f : factors) s = weakest(s, f.result ? f.result->audit.get(key) : AuditStatus::kUnchecked);
    out.set(key, s);
  }
  AuditStatus c1 = AuditStatus::kNotApplicable;
  AuditStatus c3 = AuditStatus::kNotApplicable;
  for (const auto& f : factors) {
    c1 = weakest(c1, f.c1);
    c3 = weakest(c3, f.c3);
    if (f.result && f.result->audit.excluded_tau) out.excluded_tau = true;
    if (f.c3 == AuditStatus::kViolated) out.excluded_tau = true;
  }
  out.set("c1_smooth", c1);
  out.set("c2_zerodim", c1);
  out.set("c3_alexander", c3);
  return out;
}

std::string merged_provenance(const std::vector<FactorCheck>& factors, const std::vector<KnotSpec>& knots) {
  std::vector<std::string> kinds;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::string p;
    if (factors[i].result) {
      p = factors[i].result->d_provenance;
    } else {
      p = knots[i].kind() == KnotSpec::Kind::kTorus ? "component-count" : "external";
    }
    if (std::find(kinds.begin(), kinds.end(), p) == kinds.end()) kinds.push_back(p);
  }
  std::string out;
  for (const auto& k : kinds) out += (out.empty() ? "" : "+") + k;
  return out;
}

}  // namespace

long GradedGroup::euler() const {
  long chi = 0;
  for (const auto& [deg, rank] : ranks) chi += (deg % 2 == 0 ? 1 : -1) * static_cast<long>(rank);
  return chi;
}

void GradedGroup::set(int degree, unsigned long rank) {
  if (rank == 0) {
    ranks.erase(degree);
  } else {
    ranks[degree] = rank;
  }
}

std::string audit_status_name(AuditStatus s) {
  switch (s) {
    case AuditStatus::kVerified: return "verified";
    case AuditStatus::kViolated: return "violated";
    case AuditStatus::kAsserted: return "asserted";
    case AuditStatus::kNotApplicable: return "n/a";
    case AuditStatus::kUnchecked: return "unchecked";
  }
  return "unchecked";
}

AssumptionReport::AssumptionReport() {
  for (const char* key : kAuditKeys) entries.emplace_back(key, AuditStatus::kNotApplicable);
}

void AssumptionReport::set(const std::string& key, AuditStatus s) {
  for (auto& [k, v] : entries) {
    if (k == key) {
      v = s;
      return;
    }
  }
  raise(ErrorCode::kInvalidArgument, "unknown audit key '" + key + "'");
}

AuditStatus AssumptionReport::get(const std::string& key) const {
  for (const auto& [k, v] : entries) {
    if (k == key) return v;
  }
  raise(ErrorCode::kInvalidArgument, "unknown audit key '" + key + "'");
}

bool AssumptionReport::any_violated() const {
  return std::any_of(entries.begin(), entries.end(), [](const auto& e) { return e.second == AuditStatus::kViolated; });
}

bool AssumptionReport::all_established() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) {
    return e.second == AuditStatus::kVerified || e.second == AuditStatus::kAsserted ||
           e.second == AuditStatus::kNotApplicable;
  });
}

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::kTheorem: return "theorem";
    case Regime::kBestEffort: return "best-effort";
    case Regime::kRefused: return "refused";
  }
  return "refused";
}

HPResult hp_prime(const KnotSpec& knot, const QuadNum& tau) {
  check_tau_range(tau);
  const PrimeKnot pk = resolve_prime(knot);
  const SliceResult sr = slice_count(pk.curve, tau, pk.alexander);
  const NongenericReport report = nongeneric_tau_report(pk.curve);

  HPResult res;
  res.knot = knot.to_string();
  res.tau = tau;
  res.d_provenance = provenance_of(pk.curve);
  res.factor_degrees = {sr.total_degree};
  GradedGroup g;
  g.set(0, sr.total_degree);
  res.graded = g;
  res.casson_lin = g.euler();

  AssumptionReport& a = res.audit;
  a.excluded_tau = sr.flags.excluded_tau;
  a.set("a1_dim1", AuditStatus::kAsserted);
  a.set("a2_reduced", AuditStatus::kAsserted);
  // A component inside the hyperplane raises ZERO_SLICE before this point.
  a.set("b1", check(!report.hits_content(tau)));
  switch (knot.kind()) {
    case KnotSpec::Kind::kTwoBridge:
      a.set("b2", check(!sr.flags.curve_singular_at_slice));
      a.set("b3", check(!sr.flags.excluded_tau));
      a.set("b4", check(!report.hits_leading(tau)));
      break;
    case KnotSpec::Kind::kTorus:
      // Each component is affine in the third trace coordinate and meets
      // the slice once, transversally, away from excluded tau.
      a.set("b2", AuditStatus::kVerified);
      a.set("b3", AuditStatus::kVerified);
      a.set("b4", AuditStatus::kVerified);
      break;
    default:
      a.set("b2", AuditStatus::kAsserted);
      a.set("b3", pk.alexander ? AuditStatus::kVerified : AuditStatus::kUnchecked);
      a.set("b4", check(!report.hits_leading(tau)));
      break;
  }
  res.multiplicities = sr.multiplicities;
  res.multiplicities_known = sr.multiplicities_known;

  if (sr.flags.excluded_tau) {
    res.regime = Regime::kBestEffort;
    res.note = "tau is excluded; count taken after discarding reducible characters";
  } else if (!a.all_established()) {
    res.regime = Regime::kBestEffort;
    for (const auto& [k, v] : a.entries) {
      if (v == AuditStatus::kViolated || v == AuditStatus::kUnchecked) {
        res.note += (res.note.empty() ? "" : ", ") + k + " " + audit_status_name(v);
      }
    }
  }
  return res;
}

HPResult hp_connected_sum_pair(const KnotSpec& k1, const KnotSpec& k2, const QuadNum& tau) {
  if (!k1.is_prime() || !k2.is_prime()) raise(ErrorCode::kInvalidArgument, "connected-sum factors must be prime-class");
  check_tau_range(tau);
  const std::vector<KnotSpec> knots{k1, k2};
  const std::vector<FactorCheck> factors{check_factor(k1, tau), check_factor(k2, tau)};
  HPResult res;
  res.knot = KnotSpec::sum(knots).to_string();
  res.tau = tau;
  res.audit = merge_audits(factors);
  res.d_provenance = merged_provenance(factors, knots);
  for (const auto& f : factors) {
    if (!f.failure.empty()) {
      res.regime = Regime::kRefused;
      res.note += (res.note.empty() ? "" : "; ") + f.failure;
    }
  }
  if (res.regime == Regime::kRefused) return res;
  const unsigned long m1 = slice_total(*factors[0].result);
  const unsigned long m2 = slice_total(*factors[1].result);
  res.factor_degrees = {static_cast<unsigned>(m1), static_cast<unsigned>(m2)};
  GradedGroup g;
  g.set(-1, m1 * m2);
  g.set(0, m1 + m2 + m1 * m2);
  res.graded = g;
  res.casson_lin = g.euler();
  return res;
}

CassonLinResult casson_lin(const std::vector<KnotSpec>& knots, const QuadNum& tau) {
  if (knots.empty()) raise(ErrorCode::kInvalidArgument, "casson_lin needs at least one knot");
  check_tau_range(tau);
  CassonLinResult out;
  for (const auto& k : knots) {
    if (!k.is_prime()) raise(ErrorCode::kInvalidArgument, "casson_lin factors must be prime-class");
    FactorCheck fc = check_factor(k, tau);
    if (!fc.failure.empty()) raise(ErrorCode::kCAssumptionViolated, fc.failure);
    out.value += static_cast<long>(slice_total(*fc.result));
    out.factors.push_back(std::move(*fc.result));
  }
  if (knots.size() == 1 && out.value != *out.factors[0].casson_lin) {
    raise(ErrorCode::kInternalInconsistency, "casson_lin disagrees with hp_prime");
  }
  if (knots.size() == 2) {
    const HPResult pair = hp_connected_sum_pair(knots[0], knots[1], tau);
    if (!pair.casson_lin || *pair.casson_lin != out.value) {
      raise(ErrorCode::kInternalInconsistency, "casson_lin disagrees with the two-factor formula");
    }
  }
  return out;
}

HPResult hp(const KnotSpec& knot, const QuadNum& tau) {
  if (knot.is_prime()) {
    try {
      return hp_prime(knot, tau);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kExcludedTauUnsupported) throw;
      HPResult res;
      res.knot = knot.to_string();
      res.tau = tau;
      res.regime = Regime::kRefused;
      res.d_provenance = knot.kind() == KnotSpec::Kind::kTorus ? "component-count" : "external";
      res.audit.set("a1_dim1", AuditStatus::kAsserted);
      res.audit.set("a2_reduced", AuditStatus::kAsserted);
      res.audit.set("b3", AuditStatus::kViolated);
      res.audit.excluded_tau = true;
      res.note = "tau is excluded and no count is available for this curve model";
      return res;
    }
  }
  const auto& parts = knot.summands();
  if (parts.size() == 2) return hp_connected_sum_pair(parts[0], parts[1], tau);
  check_tau_range(tau);
  std::vector<FactorCheck> factors;
  for (const auto& k : parts) factors.push_back(check_factor(k, tau));
  HPResult res;
  res.knot = knot.to_string();
  res.tau = tau;
  res.regime = Regime::kRefused;
  res.audit = merge_audits(factors);
  res.d_provenance = merged_provenance(factors, parts);
  for (const auto& f : factors) {
    if (!f.failure.empty()) res.note += (res.note.empty() ? "" : "; ") + f.failure;
  }
  if (res.note.empty()) {
    long chi = 0;
    for (const auto& f : factors) {
      chi += static_cast<long>(slice_total(*f.result));
      res.factor_degrees.push_back(slice_total(*f.result));
    }
    res.casson_lin = chi;
    res.note = "graded ranks are derived for two summands only; chi is the sum over factors";
  }
  return res;
}

std::string format_group(const GradedGroup& g) {
  std::string out = "HP* = ";
  if (g.is_zero()) {
    out += "0";
  } else {
    bool first = true;
    for (const auto& [deg, rank] : g.ranks) {
      if (!first) out += " ⊕ ";
      first = false;
      out += "Z^" + std::to_string(rank) + " @ deg " + std::to_string(deg);
    }
  }
  return out + "; χ = " + std::to_string(g.euler());
}

std::string format_result(const HPResult& res, OutputMode mode) {
  if (mode == OutputMode::kJson) {
    nlohmann::ordered_json j;
    j["knot"] = res.knot;
    j["tau"] = res.tau.to_tau_string();
    if (res.graded) {
      nlohmann::ordered_json ranks = nlohmann::ordered_json::object();
      for (const auto& [deg, rank] : res.graded->ranks) ranks[std::to_string(deg)] = rank;
      j["ranks"] = ranks;
    } else {
      j["ranks"] = nullptr;
    }
    if (res.casson_lin) {
      j["euler"] = *res.casson_lin;
    } else {
      j["euler"] = nullptr;
    }
    j["regime"] = regime_name(res.regime);
    nlohmann::ordered_json audit = nlohmann::ordered_json::object();
    for (const auto& [k, v] : res.audit.entries) audit[k] = audit_status_name(v);
    audit["excluded_tau"] = res.audit.excluded_tau;
    j["audit"] = audit;
    j["d_provenance"] = res.d_provenance;
    return j.dump(2) + "\n";
  }
  std::string out;
  if (res.graded) {
    out = format_group(*res.graded);
  } else {
    out = "HP* refused; χ = " + (res.casson_lin ? std::to_string(*res.casson_lin) : std::string("unknown"));
  }
  out += "; regime: " + regime_name(res.regime) + "\n";
  out += "knot: " + res.knot + "  tau: " + res.tau.to_tau_string() + "  d: " + res.d_provenance + "\n";
  out += "audit:";
  for (const auto& [k, v] : res.audit.entries) out += " " + k + "=" + audit_status_name(v);
  out += std::string(" excluded_tau=") + (res.audit.excluded_tau ? "true" : "false") + "\n";
  if (!res.note.empty()) out += "note: " + res.note + "\n";
  return out;
}

}  // namespace knotchar
