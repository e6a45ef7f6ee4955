#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotchar/exactalg/laurent.hpp"
#include "knotchar/knotgroups/presentation.hpp"

namespace knotchar {

/// Normalized Alexander polynomial: lowest exponent 0, positive leading
/// coefficient, palindromic.
struct AlexanderPoly {
  LaurentPoly value;

  /// Ordinary polynomial in t (value has shift 0).
  const RationalPoly& polynomial() const { return value.base; }
  int degree() const { return value.base.degree(std::size_t{0}); }
  std::string to_string() const { return value.to_string(); }

  friend bool operator==(const AlexanderPoly&, const AlexanderPoly&) = default;
};

/// Abelianized Fox derivative of w by one generator.
LaurentPoly fox_derivative(const Word& w, int generator, const Abelianization& ab);

/// Entry (i,j) is the abelianized Fox derivative of relator i by generator j.
std::vector<std::vector<LaurentPoly>> fox_alexander_matrix(const Presentation& pres);

/// Column to delete defaults to the last generator. Raises
/// DEGENERATE_PRESENTATION when the minor vanishes or the result fails the
/// normalization checks.
AlexanderPoly alexander_polynomial(const Presentation& pres, std::optional<int> deleted_column = std::nullopt);

/// Builds the normalized form from integer coefficients c_0 + c_1 t + ...
AlexanderPoly alexander_from_coefficients(const std::vector<long>& coefficients);

}  // namespace knotchar
