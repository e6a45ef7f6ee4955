#pragma once

#include <string>

#include "knotchar/exactalg/polynomial.hpp"

namespace knotchar {

/// S_{-1} = 0, S_0 = 1, S_{k+1} = x S_k - S_{k-1}. For a unimodular 2x2
/// matrix M, M^n = S_{n-1}(tr M) M - S_{n-2}(tr M) I. Raises
/// INVALID_ARGUMENT for k < -1.
RationalPoly chebyshev_s(int k, const std::string& var = "x");

/// S_k for any integer k, continuing the recursion downwards
/// (S_{-k} = -S_{k-2}); expressed in variable var of ctx.
RationalPoly chebyshev_s_any(int k, const Variables& ctx, std::size_t var);

}  // namespace knotchar
