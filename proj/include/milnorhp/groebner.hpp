#pragma once

#include <vector>

#include "milnorhp/mpoly.hpp"

namespace milnorhp {

// Reduced monic Groebner basis of I under I.order (Buchberger with the
// coprime and chain criteria, sugar-first pair selection, fraction-free
// integer arithmetic inside). Generators sorted by ascending leading
// monomial. Idempotent. The zero ideal yields an empty generator list.
Ideal groebner(const Ideal& I);

// Remainder of f on division by the basis: no term of the result is
// divisible by any leading monomial of G; f - normal_form(f, G) lies in
// the ideal. Requires G.is_gb.
MPoly normal_form(const MPoly& f, const Ideal& G);

bool ideal_contains(const Ideal& G, const MPoly& f);

// Ideal equality via reduced-basis comparison; inputs need not be bases.
bool ideal_equal(const Ideal& A, const Ideal& B);

// A ∩ B through a tag variable t and a block elimination order on
// (t, x): the t-free part of a basis of t·A + (1-t)·B. Returns a reduced
// basis in A.order. Requires nvars < kMaxVars (one helper slot).
Ideal ideal_intersect(const Ideal& A, const Ideal& B);

// (I : x_var), computed by intersecting with (x_var) through a tag
// variable and a block elimination order, then dividing out x_var.
// Returns a reduced basis in I.order. Requires nvars < kMaxVars (one
// helper slot).
Ideal colon_by_variable(const Ideal& I, int var);

// I : (x_0,...,x_{n-1})^infinity: repeatedly replaces I by
// I : (x_0,...,x_{n-1}) = ∩_v (I : x_v) until the reduced basis
// stabilizes. Returns a reduced basis. rounds_out (if given) receives the
// number of strict growth rounds r, so that the result equals I : m^r and
// in particular m^r times the result lies in I.
Ideal saturate_irrelevant(const Ideal& I, int* rounds_out = nullptr);

// Same saturation computed a second way, for cross-checks. Uses the
// degrevlex divide-out rule: for homogeneous I with x_v ranked last,
// dividing every reduced-basis element by its highest power of x_v yields
// a basis of I : x_v^infinity; the saturation is the intersection of
// those over all variables, iterated to a fixed point (one round already
// lands on it). Requires a homogeneous ideal.
Ideal saturate_irrelevant_divide_out(const Ideal& I);

// Minimal homogeneous generating set extracted from a basis of I
// (greedy by ascending degree, dropping members of the ideal generated by
// the kept ones).
std::vector<MPoly> minimal_generators(const Ideal& I);

// Buchberger self-check: every S-polynomial of every generator pair of G
// reduces to zero (no criteria shortcuts). Requires G.is_gb.
bool spolys_reduce_to_zero(const Ideal& G);

}  // namespace milnorhp
