#include "knotchar/apoly/ahat.hpp"

#include "knotchar/apoly/elimination.hpp"
#include "knotchar/error.hpp"
#include "knotchar/hp/prime_knot.hpp"
#include "knotchar/knotgroups/longitude.hpp"

namespace knotchar {

namespace {

[[noreturn]] void mismatch(const KnotSpec& knot, const std::string& method) {
  raise(ErrorCode::kMethodMismatch, "method '" + method + "' does not apply to " + knot.to_string());
}

}  // namespace

AhatDegree ahat_l_degree(const KnotSpec& knot, AhatMethod method, const std::optional<QuadNum>& tau) {
  switch (method) {
    case AhatMethod::kSlice: {
      if (knot.kind() != KnotSpec::Kind::kTwoBridge && knot.kind() != KnotSpec::Kind::kTorus) mismatch(knot, "slice");
      const PrimeKnot pk = resolve_prime(knot);
      const QuadNum t = tau ? *tau : first_generic_tau(pk.curve, pk.alexander);
      const SliceResult sr = slice_count(pk.curve, t, pk.alexander);
      return AhatDegree{static_cast<int>(sr.total_degree),
                        knot.kind() == KnotSpec::Kind::kTorus ? "component-count" : "slice", t};
    }
    case AhatMethod::kEliminate: {
      if (knot.kind() != KnotSpec::Kind::kTwoBridge) mismatch(knot, "eliminate");
      const RileyModel model = riley_model(knot.two_bridge());
      const LongitudeChoice lambda = longitude_two_bridge(knot.two_bridge());
      return AhatDegree{deg_l(a_polynomial_two_bridge(model, lambda.word)), "eliminate", std::nullopt};
    }
    case AhatMethod::kExternal: {
      if (knot.kind() != KnotSpec::Kind::kExternal) mismatch(knot, "external");
      return AhatDegree{deg_l(load_apoly_file(knot.external().path, knot.external().name)), "external", std::nullopt};
    }
  }
  mismatch(knot, "unknown");
}

}  // namespace knotchar
