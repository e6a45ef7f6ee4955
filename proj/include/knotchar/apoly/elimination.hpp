#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "knotchar/apoly/apolynomial.hpp"
#include "knotchar/charvar/riley.hpp"

namespace knotchar {

/// Res_u(phi, l s^k - N11) with N11 / s^k the (1,1) entry of rho(lambda),
/// then normalized. Raises LONGITUDE_NOT_TRIANGULAR, ELIMINATION_COLLAPSED.
APolynomial a_polynomial_two_bridge(const RileyModel& model, const Word& lambda);

/// Integer-primitive, no l-independent factors, no (l - 1) factor, positive
/// graded-lex leading coefficient. squarefree additionally removes repeated
/// factors.
RationalPoly normalize_apoly(const RationalPoly& a, bool squarefree);

/// Equal up to units (constants, monomials) and m -> 1/m.
bool apoly_equivalent(const RationalPoly& a, const RationalPoly& b);

/// l -> 1/l, cleared and normalized (orientation reversal of the longitude).
RationalPoly invert_l(const RationalPoly& a);

/// Parses one document {"name", "variables", "terms", optional "alexander"}.
/// Raises PARSE_ERROR, INVALID_TERMS.
APolynomial load_apoly(const nlohmann::json& doc);

/// Reads a file holding one document or an array of documents and picks the
/// entry called name (any entry when name is empty). Relative paths are
/// tried under KNOTCHAR_APOLY_DIR, then the working directory, then the
/// bundled data directory. Raises IO_ERROR, PARSE_ERROR, INVALID_TERMS.
APolynomial load_apoly_file(const std::string& path, const std::string& name);

}  // namespace knotchar
