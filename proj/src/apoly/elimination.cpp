#include "knotchar/apoly/elimination.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "knotchar/error.hpp"
#include "knotchar/exactalg/polyalg.hpp"

namespace knotchar {

namespace {

const Variables& ml_context() {
  static const Variables ctx{"m", "l"};
  return ctx;
}

/// Divide out the largest monomial dividing every term.
RationalPoly strip_monomial(const RationalPoly& a) {
  if (a.is_zero()) return a;
  Monomial low = a.terms().front().mono;
  for (const auto& t : a.terms()) {
    for (std::size_t i = 0; i < kMaxVariables; ++i) low[i] = std::min(low[i], t.mono[i]);
  }
  std::vector<RationalPoly::Term> out;
  for (const auto& t : a.terms()) out.push_back({t.mono / low, t.coeff});
  return RationalPoly::from_terms(a.variables(), std::move(out));
}

/// x^deg a(1/x) in variable var.
RationalPoly reverse_in(const RationalPoly& a, std::size_t var) {
  const auto d = static_cast<std::uint32_t>(std::max(a.degree(var), 0));
  std::vector<RationalPoly::Term> out;
  for (const auto& t : a.terms()) {
    Monomial m = t.mono;
    m[var] = d - m[var];
    out.push_back({m, t.coeff});
  }
  return RationalPoly::from_terms(a.variables(), std::move(out));
}

/// Squarefree in l, using a specialisation certificate before the full gcd:
/// for primitive R, R(s0, l) squarefree of full degree implies R squarefree.
RationalPoly squarefree_in_l(const RationalPoly& r) {
  const std::size_t l = 1;
  const RationalPoly lc = r.leading_coefficient_in(l);
  for (long s0 = 2; s0 < 40; ++s0) {
    if (lc.substitute(0, BigRational(s0)).is_zero()) continue;
    const RationalPoly spec = r.substitute(0, BigRational(s0));
    if (gcd_univariate(spec, spec.derivative(l), l).degree(l) == 0) return r;
    break;
  }
  return squarefree_part_in(r, l);
}

long require_int(const nlohmann::json& v, const std::string& what) {
  if (!v.is_number_integer()) raise(ErrorCode::kParseError, what + " must be an integer");
  return v.get<long>();
}

}  // namespace

int deg_l(const APolynomial& ap) { return ap.poly.degree(ap.poly.variables().index_of("l")); }

RationalPoly normalize_apoly(const RationalPoly& a, bool squarefree) {
  const std::size_t l = 1;
  RationalPoly r = a;
  if (r.is_zero()) return r;
  r = primitive_part_in(r, l);
  if (squarefree) r = squarefree_in_l(r);
  const RationalPoly l_minus_1 = RationalPoly::variable(r.variables(), "l") - RationalPoly(r.variables(), BigRational(1));
  while (r.degree(l) > 0 && r.substitute(l, BigRational(1)).is_zero()) r = divide_exact(r, l_minus_1);
  return integer_primitive(r);
}

RationalPoly invert_l(const RationalPoly& a) { return integer_primitive(strip_monomial(reverse_in(a, 1))); }

bool apoly_equivalent(const RationalPoly& a, const RationalPoly& b) {
  const RationalPoly x = integer_primitive(strip_monomial(a.embed(ml_context())));
  const RationalPoly y = integer_primitive(strip_monomial(b.embed(ml_context())));
  if (x == y) return true;
  return x == integer_primitive(strip_monomial(reverse_in(y, 0)));
}

APolynomial a_polynomial_two_bridge(const RileyModel& model, const Word& lambda) {
  const LaurentMatrix lm = word_matrix(lambda, model.images, model.ctx);
  if (!vanishes_mod_phi(model, lm.num(1, 0))) {
    raise(ErrorCode::kLongitudeNotTriangular, model.presentation.label + ": rho(lambda) is not upper triangular on the variety");
  }
  const std::size_t u = 1;
  const RationalPoly& phi = model.phi;
  // N11 reduced modulo phi: lc^e N11 = q phi + r.
  const RationalPoly n11 = lm.num(0, 0);
  const int e = std::max(n11.degree(u) - phi.degree(u) + 1, 0);
  const RationalPoly reduced = pseudo_remainder(n11, phi, u);
  const RationalPoly scale = phi.leading_coefficient_in(u).pow(static_cast<unsigned>(e));

  const Variables sul{"s", "u", "l"};
  const RationalPoly l = RationalPoly::variable(sul, "l");
  Monomial sk;
  sk[0] = static_cast<std::uint32_t>(lm.shift);
  const RationalPoly eq = l * scale.embed(sul).mul_term(sk, BigRational(1)) - reduced.embed(sul);
  const RationalPoly res = resultant(phi.embed(sul), eq, u);
  if (res.is_zero()) raise(ErrorCode::kEliminationCollapsed, model.presentation.label + ": resultant vanishes identically");
  const RationalPoly r = res.embed(Variables{"s", "l"}).rename(ml_context());
  APolynomial ap;
  ap.poly = normalize_apoly(r, true);
  ap.source = APolynomial::Source::kEliminated;
  ap.label = model.presentation.label;
  if (ap.poly.degree(std::size_t{1}) < 1) {
    raise(ErrorCode::kEliminationCollapsed, model.presentation.label + ": eliminated polynomial does not involve l");
  }
  return ap;
}

APolynomial load_apoly(const nlohmann::json& doc) {
  if (!doc.is_object()) raise(ErrorCode::kParseError, "A-polynomial document must be a JSON object");
  APolynomial ap;
  ap.source = APolynomial::Source::kExternal;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) raise(ErrorCode::kParseError, "\"name\" must be a string");
    ap.label = doc["name"].get<std::string>();
  }
  if (doc.contains("variables") && doc["variables"] != nlohmann::json::array({"m", "l"})) {
    raise(ErrorCode::kParseError, "\"variables\" must be [\"m\", \"l\"]");
  }
  if (!doc.contains("terms") || !doc["terms"].is_array()) raise(ErrorCode::kParseError, "missing \"terms\" array");
  const auto& terms = doc["terms"];
  if (terms.empty()) raise(ErrorCode::kParseError, "\"terms\" is empty");
  std::set<std::pair<long, long>> seen;
  std::vector<RationalPoly::Term> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    const std::string where = "term " + std::to_string(i);
    if (!t.is_array() || t.size() != 3) raise(ErrorCode::kParseError, where + " must be [c, deg_m, deg_l]");
    const long c = require_int(t[0], where + " coefficient");
    const long dm = require_int(t[1], where + " deg_m");
    const long dl = require_int(t[2], where + " deg_l");
    if (dm < 0 || dl < 0) raise(ErrorCode::kInvalidTerms, where + " has a negative exponent");
    if (c == 0) raise(ErrorCode::kInvalidTerms, where + " has coefficient 0");
    if (!seen.emplace(dm, dl).second) {
      raise(ErrorCode::kInvalidTerms, where + " repeats exponents (" + std::to_string(dm) + ", " + std::to_string(dl) + ")");
    }
    Monomial m;
    m[0] = static_cast<std::uint32_t>(dm);
    m[1] = static_cast<std::uint32_t>(dl);
    out.push_back({m, BigRational(c)});
  }
  const RationalPoly raw = RationalPoly::from_terms(ml_context(), std::move(out));
  if (raw.degree(std::size_t{1}) < 1) raise(ErrorCode::kInvalidTerms, "polynomial does not involve l");
  ap.poly = normalize_apoly(raw, false);
  if (ap.poly.degree(std::size_t{1}) < 1) raise(ErrorCode::kInvalidTerms, "polynomial is a power of (l - 1) times a unit");
  if (doc.contains("alexander")) {
    const auto& a = doc["alexander"];
    if (!a.is_array() || a.empty()) raise(ErrorCode::kParseError, "\"alexander\" must be a nonempty coefficient array");
    std::vector<long> coeffs;
    for (const auto& c : a) coeffs.push_back(require_int(c, "alexander coefficient"));
    ap.alexander = alexander_from_coefficients(coeffs);
  }
  return ap;
}

APolynomial load_apoly_file(const std::string& path, const std::string& name) {
  namespace fs = std::filesystem;
  std::vector<fs::path> tries;
  const fs::path given(path);
  if (given.is_absolute()) {
    tries.push_back(given);
  } else {
    if (const char* dir = std::getenv("KNOTCHAR_APOLY_DIR")) tries.push_back(fs::path(dir) / given);
    tries.push_back(given);
#ifdef KNOTCHAR_DATA_DIR
    tries.push_back(fs::path(KNOTCHAR_DATA_DIR) / given);
#endif
  }
  for (const auto& p : tries) {
    std::error_code ec;
    if (!fs::is_regular_file(p, ec)) continue;
    std::ifstream in(p);
    if (!in) raise(ErrorCode::kIoError, "cannot open " + p.string());
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      raise(ErrorCode::kParseError, p.string() + ": " + e.what());
    }
    std::vector<nlohmann::json> docs;
    if (doc.is_array()) {
      docs.assign(doc.begin(), doc.end());
    } else {
      docs.push_back(doc);
    }
    for (const auto& d : docs) {
      if (name.empty() || (d.is_object() && d.contains("name") && d["name"] == name)) {
        APolynomial ap = load_apoly(d);
        if (ap.label.empty()) ap.label = name;
        return ap;
      }
    }
    raise(ErrorCode::kParseError, p.string() + ": no polynomial named '" + name + "'");
  }
  raise(ErrorCode::kIoError, "A-polynomial file not found: " + path);
}

}  // namespace knotchar
