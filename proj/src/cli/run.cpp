#include "knotchar/cli/run.hpp"

#include <CLI11.hpp>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>

#include "knotchar/apoly/ahat.hpp"
#include "knotchar/apoly/elimination.hpp"
#include "knotchar/charvar/excluded.hpp"
#include "knotchar/cli/knot_spec.hpp"
#include "knotchar/error.hpp"
#include "knotchar/hp/hp.hpp"
#include "knotchar/hp/prime_knot.hpp"
#include "knotchar/knotgroups/longitude.hpp"
#include "knotchar/selftest/selftest.hpp"

namespace knotchar {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string knot;
  std::string tau;
  std::string output = "human";
  std::string method;
  std::uint64_t seed = 1;
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::optional<AlexanderPoly> alexander_of(const KnotSpec& knot) {
  if (knot.is_prime()) return resolve_prime(knot).alexander;
  std::optional<AlexanderPoly> product;
  for (const auto& k : knot.summands()) {
    const auto d = resolve_prime(k).alexander;
    if (!d) return std::nullopt;
    product = product ? AlexanderPoly{laurent_mul(product->value, d->value)} : *d;
  }
  return product;
}

AlexanderPoly require_alexander(const KnotSpec& knot) {
  auto d = alexander_of(knot);
  if (!d) raise(ErrorCode::kInvalidArgument, knot.to_string() + " has no Alexander polynomial (add an \"alexander\" field)");
  return *d;
}

KnotSpec require_prime(const KnotSpec& knot, const std::string& command) {
  if (!knot.is_prime()) raise(ErrorCode::kInvalidArgument, command + " applies to prime knots only");
  return knot;
}

int cmd_alexander(const Options& o, std::ostream& out) {
  const KnotSpec knot = parse_knot_spec(o.knot);
  const AlexanderPoly delta = require_alexander(knot);
  if (o.output == "json") {
    Json coeffs = Json::array();
    for (int i = 0; i <= delta.degree(); ++i) {
      Monomial m;
      m[0] = static_cast<std::uint32_t>(i);
      coeffs.push_back(delta.polynomial().coefficient(m).get_num().get_si());
    }
    emit(out, Json{{"knot", knot.to_string()}, {"alexander", delta.to_string()}, {"coefficients", coeffs}});
  } else {
    out << "Δ(t) = " << delta.to_string() << "\n";
  }
  return 0;
}

int cmd_curve(const Options& o, std::ostream& out) {
  const KnotSpec knot = require_prime(parse_knot_spec(o.knot), "curve");
  const PrimeKnot pk = resolve_prime(knot);
  Json j{{"knot", knot.to_string()}, {"label", pk.label}};
  std::string text;
  if (const auto* c = std::get_if<PlaneCurve>(&pk.curve)) {
    const std::string removed =
        c->reducible_power == 0 ? "none" : "(" + c->reducible_factor + ")^" + std::to_string(c->reducible_power);
    j["curve"] = c->P.to_string();
    j["removed_factor"] = removed;
    j["riley"] = pk.riley->phi.to_string();
    text = pk.label + ": P(x, y) = " + c->P.to_string() + "\nremoved reducible factor: " + removed +
           "\nriley polynomial: " + pk.riley->phi.to_string() + "\n";
  } else if (const auto* t = std::get_if<TorusComponentModel>(&pk.curve)) {
    Json comps = Json::array();
    text = pk.label + ": " + std::to_string(t->components.size()) + " components, tr U = 2cos(pi i/" +
           std::to_string(t->spec.p()) + "), tr V = 2cos(pi j/" + std::to_string(t->spec.q()) + ")\n";
    for (const auto& [i, jj] : t->components) {
      comps.push_back(Json::array({i, jj}));
      text += "  (i, j) = (" + std::to_string(i) + ", " + std::to_string(jj) + ")\n";
    }
    text += "meridian trace: " + t->meridian_trace.to_string() + "\n";
    j["components"] = comps;
    j["meridian_trace"] = t->meridian_trace.to_string();
  } else {
    const auto& ap = std::get<APolynomial>(pk.curve);
    j["apolynomial"] = ap.poly.to_string();
    j["deg_l"] = deg_l(ap);
    text = pk.label + ": A(m, l) = " + ap.poly.to_string() + "\n";
  }
  if (o.output == "json") {
    emit(out, j);
  } else {
    out << text;
  }
  return 0;
}

int cmd_slice(const Options& o, std::ostream& out) {
  const KnotSpec knot = require_prime(parse_knot_spec(o.knot), "slice");
  const QuadNum tau = parse_tau(o.tau);
  const PrimeKnot pk = resolve_prime(knot);
  const SliceResult sr = slice_count(pk.curve, tau, pk.alexander);
  std::vector<std::string> mults;
  for (unsigned m : sr.multiplicities) mults.push_back(std::to_string(m));
  if (o.output == "json") {
    emit(out, Json{{"knot", knot.to_string()},
                   {"tau", tau.to_tau_string()},
                   {"slice_polynomial", sr.slice_polynomial},
                   {"multiplicities", sr.multiplicities},
                   {"multiplicities_known", sr.multiplicities_known},
                   {"total_degree", sr.total_degree},
                   {"discarded_reducible", sr.discarded_reducible},
                   {"flags",
                    {{"excluded_tau", sr.flags.excluded_tau},
                     {"non_transverse", sr.flags.non_transverse},
                     {"curve_singular_at_slice", sr.flags.curve_singular_at_slice},
                     {"component_in_hyperplane", sr.flags.component_in_hyperplane},
                     {"nongeneric_tau", sr.nongeneric_tau}}}});
    return 0;
  }
  out << pk.label << " at tau = " << tau.to_tau_string() << "\n";
  if (!sr.slice_polynomial.empty()) out << "P(tau, y) = " << sr.slice_polynomial << "\n";
  out << "multiplicities: {" << join(mults, ", ") << "}" << (sr.multiplicities_known ? "" : " (generic, not computed)")
      << "\ntotal degree: " << sr.total_degree << "\ndiscarded y = 2: " << sr.discarded_reducible << "\n";
  out << std::boolalpha << "flags: excluded_tau=" << sr.flags.excluded_tau << " non_transverse=" << sr.flags.non_transverse
      << " curve_singular_at_slice=" << sr.flags.curve_singular_at_slice
      << " component_in_hyperplane=" << sr.flags.component_in_hyperplane << " nongeneric_tau=" << sr.nongeneric_tau
      << "\n";
  return 0;
}

int cmd_apoly(const Options& o, std::ostream& out) {
  const KnotSpec knot = require_prime(parse_knot_spec(o.knot), "apoly");
  std::string method = o.method;
  if (method.empty()) {
    method = knot.kind() == KnotSpec::Kind::kTwoBridge ? "eliminate"
             : knot.kind() == KnotSpec::Kind::kExternal ? "external"
                                                       : "slice";
  }
  Json j{{"knot", knot.to_string()}, {"method", method}};
  std::string text;
  if (method == "slice") {
    if (o.tau.empty()) raise(ErrorCode::kInvalidArgument, "--tau is required for --method slice");
    const AhatDegree d = ahat_l_degree(knot, AhatMethod::kSlice, parse_tau(o.tau));
    j["apolynomial"] = nullptr;
    j["deg_l"] = d.value;
    j["provenance"] = d.provenance;
    j["tau"] = d.tau->to_tau_string();
    text = "deg_l = " + std::to_string(d.value) + " (" + d.provenance + " at tau = " + d.tau->to_tau_string() + ")\n";
  } else if (method == "eliminate") {
    if (knot.kind() != KnotSpec::Kind::kTwoBridge) ahat_l_degree(knot, AhatMethod::kEliminate);
    const RileyModel model = riley_model(knot.two_bridge());
    const LongitudeChoice lambda = longitude_two_bridge(knot.two_bridge());
    const APolynomial ap = a_polynomial_two_bridge(model, lambda.word);
    j["apolynomial"] = ap.poly.to_string();
    j["deg_l"] = deg_l(ap);
    j["provenance"] = "eliminate";
    j["longitude"] = lambda.word.to_string(model.presentation.generator_names);
    text = "A(m, l) = " + ap.poly.to_string() + "\nlongitude: " + lambda.word.to_string(model.presentation.generator_names) +
           " (" + lambda.candidate + ")\ndeg_l = " + std::to_string(deg_l(ap)) + "\n";
  } else if (method == "external") {
    if (knot.kind() != KnotSpec::Kind::kExternal) ahat_l_degree(knot, AhatMethod::kExternal);
    const APolynomial ap = load_apoly_file(knot.external().path, knot.external().name);
    j["apolynomial"] = ap.poly.to_string();
    j["deg_l"] = deg_l(ap);
    j["provenance"] = "external";
    text = "A(m, l) = " + ap.poly.to_string() + "\ndeg_l = " + std::to_string(deg_l(ap)) + "\n";
  } else {
    raise(ErrorCode::kInvalidArgument, "unknown method '" + method + "'");
  }
  if (o.output == "json") {
    emit(out, j);
  } else {
    out << text;
  }
  return 0;
}

int cmd_excluded(const Options& o, std::ostream& out) {
  const KnotSpec knot = parse_knot_spec(o.knot);
  const AlexanderPoly delta = require_alexander(knot);
  const ExcludedSet set = excluded_tau_set(delta);
  std::vector<std::string> factors;
  std::vector<std::string> squares;
  std::vector<std::string> taus;
  std::vector<std::string> tau_text;
  std::vector<std::string> unresolved;
  for (const auto& f : set.factors) factors.push_back(f.to_string());
  for (const auto& t : set.tau_squared) squares.push_back(t.to_string());
  for (const auto& t : set.taus) {
    taus.push_back(t.to_tau_string());
    tau_text.push_back(t.to_string());
  }
  for (const auto& f : set.unresolved) unresolved.push_back(f.to_string());
  std::optional<QuadNum> tau;
  if (!o.tau.empty()) tau = parse_tau(o.tau);
  if (o.output == "json") {
    Json j{{"knot", knot.to_string()},  {"w_polynomial", set.w_polynomial.to_string()},
           {"factors", factors},        {"tau_squared", squares},
           {"taus", taus},              {"unresolved", unresolved}};
    if (tau) {
      j["tau"] = tau->to_tau_string();
      j["tau_excluded"] = excluded_tau_test(delta, *tau);
    }
    emit(out, j);
    return 0;
  }
  out << "Res_z(Δ(z), z^2 - w*z + 1) = " << set.w_polynomial.to_string() << "\n";
  out << "excluded tau^2: {" << join(squares, ", ") << "}\n";
  out << "excluded tau: {" << join(tau_text, ", ") << "}\n";
  if (!unresolved.empty()) out << "unsolved factors in w: " << join(unresolved, "; ") << "\n";
  if (tau) out << "tau = " << tau->to_tau_string() << (excluded_tau_test(delta, *tau) ? " is" : " is not") << " excluded\n";
  return 0;
}

int cmd_hp(const Options& o, std::ostream& out) {
  const KnotSpec knot = parse_knot_spec(o.knot);
  const HPResult res = hp(knot, parse_tau(o.tau));
  out << format_result(res, o.output == "json" ? OutputMode::kJson : OutputMode::kHuman);
  return res.regime == Regime::kRefused ? 2 : 0;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  const std::vector<SuiteReport> reports = run_selftests(o.seed);
  bool ok = true;
  Json arr = Json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    arr.push_back(Json{{"suite", r.name}, {"passed", r.passed()}, {"cases", r.cases}, {"failures", r.failures},
                       {"first_failure", r.first_failure}});
  }
  if (o.output == "json") {
    emit(out, Json{{"seed", o.seed}, {"suites", arr}});
  } else {
    for (const auto& r : reports) {
      out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)";
      if (!r.passed()) out << ": " << r.first_failure;
      out << "\n";
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact character-variety computations for knots", "knotchar"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> outputs{"human", "json"};
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--knot", o.knot, "knot spec: 2bridge:P/Q, torus:P,Q, apoly:PATH#NAME, sum:K+K[+...]")->required();
    sub->add_option("--output", o.output, "human or json")->check(CLI::IsMember(outputs));
  };
  auto add_tau = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--tau", o.tau, "N/D or N/D+M/K*sqrt(W), -2 < tau < 2");
    if (required) opt->required();
  };

  auto* alexander = app.add_subcommand("alexander", "print the Alexander polynomial");
  add_common(alexander);
  auto* curve = app.add_subcommand("curve", "print the character curve");
  add_common(curve);
  auto* slice = app.add_subcommand("slice", "intersect the curve with tr = tau");
  add_common(slice);
  add_tau(slice, true);
  auto* apoly = app.add_subcommand("apoly", "A-polynomial and its l-degree");
  add_common(apoly);
  add_tau(apoly, false);
  apoly->add_option("--method", o.method, "slice, eliminate or external")
      ->check(CLI::IsMember(std::vector<std::string>{"slice", "eliminate", "external"}));
  auto* excluded = app.add_subcommand("excluded", "excluded tau values from the Alexander polynomial");
  add_common(excluded);
  add_tau(excluded, false);
  auto* hp_cmd = app.add_subcommand("hp", "graded ranks and Casson-Lin invariant");
  add_common(hp_cmd);
  add_tau(hp_cmd, true);
  auto* selftest = app.add_subcommand("selftest", "run the property suites");
  selftest->add_option("--seed", o.seed, "random seed");
  selftest->add_option("--output", o.output, "human or json")->check(CLI::IsMember(outputs));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (alexander->parsed()) return cmd_alexander(o, out);
    if (curve->parsed()) return cmd_curve(o, out);
    if (slice->parsed()) return cmd_slice(o, out);
    if (apoly->parsed()) return cmd_apoly(o, out);
    if (excluded->parsed()) return cmd_excluded(o, out);
    if (hp_cmd->parsed()) return cmd_hp(o, out);
    if (selftest->parsed()) return cmd_selftest(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace knotchar
