// Copyright (c) the invogen contributors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <cstdint>
#include <vector>

#include "invogen/algebra.hpp"
#include "invogen/closure.hpp"
#include "invogen/normalize.hpp"
#include "invogen/polynomial.hpp"
#include "invogen/types.hpp"

namespace invogen {

struct synthesis_config {
  std::uint64_t seed = 1;
  int retry_budget = 8;
  int verify_trials = 32;
  // Scalars tried in order when separating spectra; filled by defaults().
  std::vector<cxd> lambda_scan;
  // Two root quotients closer than ten times this are considered equal.
  double root_tol = 1e-8;
  // Acceptance cutoff for the scale-normalized resultant certificate.
  double resultant_threshold = 1e-10;
  tolerance tol;

  static synthesis_config defaults(std::uint64_t seed = 1);
};

// Scalar separating the spectra of two elements: lambda avoids every
// quotient of a root of p by a root of q, with a resultant certificate.
struct lambda_choice {
  cxd lambda;
  std::vector<cxd> excluded_quotients;
  // Magnitude of the resultant of p(X) and the monic rescaling of
  // q(X / lambda), normalized by the product of the per-factor scales.
  double certificate = 0.0;
  // Smallest distance from lambda to an excluded quotient.
  double quotient_margin = 0.0;
};

// First scalar in the scan whose distance to every root quotient exceeds
// ten times root_tol and whose resultant certificate clears the
// threshold.  With require_inverse_margin the reciprocal must keep the
// same margin, so the choice works from both sides of an exchanged pair.
lambda_choice select_lambda(const polynomial& p, const polynomial& q,
                            const synthesis_config& cfg,
                            bool require_inverse_margin = false);

// Polynomial s with s(a (+) lambda b) = a (+) 0 whenever p, q are the
// minimal polynomials of a, b and lambda separates their spectra: s is X
// times the Bezout cofactor of p against the rescaled q.
polynomial splitting_polynomial(const polynomial& p, const polynomial& q,
                                cxd lambda, const tolerance& tol);

// Pair x, y with ones on the superdiagonal scaled by alphas and on the
// subdiagonal scaled by betas; together with its transpose partner the
// pair generates the full matrix algebra when all entries are nonzero.
std::pair<matrix, matrix> explicit_transpose_pair(int n,
                                                  const std::vector<cxd>& alphas,
                                                  const std::vector<cxd>& betas);
// The all-ones instance of the same pair.
std::pair<matrix, matrix> explicit_transpose_pair(int n);

// Variant adapted to the symplectic form: one subdiagonal sign is
// flipped.  The report records whether the pair generates and how far
// each member is from being the symplectic image of the other.
struct symplectic_pair_report {
  matrix x;
  matrix y;
  closure_report closure;
  double conj_residual_xy = 0.0;
  double conj_residual_yx = 0.0;
};

symplectic_pair_report explicit_symplectic_pair(int n, const tolerance& tol);

// a = x (+) lambda x in the two-block algebra; with the canonical swap
// involution the pair {a, Sa} generates when {x, x^T} generates M_n and
// lambda separates the spectrum of x from itself on both sides.
algebra_element swap_pair_generator(int n, const matrix& x, cxd lambda);

struct synthesis_result {
  algebra_element element;
  generation_certificate certificate;
  normalization_report normalization;
  involution_report involution;
  // Scalars used to combine the per-orbit generators, one per orbit.
  std::vector<cxd> combination;
};

// Produces a single element a with {a, Sa} generating the whole algebra,
// certified; raises symplectic_rank2_obstruction when a fixed block of
// size two carries the symplectic type, where no such element exists.
synthesis_result synthesize_generator(const algebra_shape& shape,
                                      const involution_spec& spec,
                                      const synthesis_config& cfg);

}  // namespace invogen
