#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "milnorhp/intpoly.hpp"
#include "milnorhp/mpoly.hpp"

namespace milnorhp {

// All monomials of total degree k in nvars variables, in a fixed
// deterministic order (first variable's exponent descending, then
// recursively).
std::vector<Monomial> monomials_of_degree(int nvars, long k);

// Numerator N(t) with HS(S/I)(t) = N(t)/(1-t)^nvars, computed from the
// leading-term monomial ideal of a basis of I by recursive pivot splitting
// N(I) = N(I + (x_v)) + t*N(I : x_v), pivot = variable occurring in the
// most minimal generators; memoized on the minimal generator set.
IntPoly hilbert_numerator(const Ideal& I);

// Hilbert series of S/I for homogeneous I: the numerator over
// (1-t)^nvars and its expansion truncated through degree k_max.
std::pair<IntPoly, IntPoly> hilbert_series_quotient(const Ideal& I,
                                                    std::size_t k_max);

// dim (S/I)_k computed independently of the series machinery: the rank of
// the degree-k multiplication map (u, g) -> u*g over the basis generators,
// by exact rational elimination, subtracted from dim S_k.
long quotient_dim_oracle(const Ideal& I, long k);

}  // namespace milnorhp
