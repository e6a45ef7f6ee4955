#include "knotchar/hp/prime_knot.hpp"

#include "knotchar/apoly/elimination.hpp"
#include "knotchar/charvar/torus.hpp"
#include "knotchar/error.hpp"

namespace knotchar {

PrimeKnot resolve_prime(const KnotSpec& spec) {
  switch (spec.kind()) {
    case KnotSpec::Kind::kTwoBridge: {
      RileyModel model = riley_model(spec.two_bridge());
      PlaneCurve curve = trace_curve(model);
      return PrimeKnot{spec, model.presentation.label, alexander_polynomial(model.presentation), std::move(curve),
                       std::move(model)};
    }
    case KnotSpec::Kind::kTorus: {
      const Presentation pres = torus_presentation(spec.torus());
      return PrimeKnot{spec, pres.label, alexander_polynomial(pres), torus_components(spec.torus()), std::nullopt};
    }
    case KnotSpec::Kind::kExternal: {
      APolynomial ap = load_apoly_file(spec.external().path, spec.external().name);
      std::optional<AlexanderPoly> delta = ap.alexander;
      const std::string label = spec.to_string();
      return PrimeKnot{spec, label, std::move(delta), std::move(ap), std::nullopt};
    }
    case KnotSpec::Kind::kSum:
      break;
  }
  raise(ErrorCode::kInvalidArgument, spec.to_string() + " is not a prime-class knot");
}

}  // namespace knotchar
