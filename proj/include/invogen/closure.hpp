// Copyright (c) the invogen contributors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <vector>

#include "invogen/algebra.hpp"
#include "invogen/types.hpp"

namespace invogen {

struct closure_report {
  // Span dimension after each growth round, starting with the span of the
  // generators themselves.  Stationary rounds are not recorded.
  std::vector<int> dims;
  int final_dim = 0;
  // Multiplication rounds performed, including a final unproductive one
  // when the span stops growing before filling the algebra.
  int rounds = 0;
  bool generated = false;
  // Orthonormal columns spanning the closure, in vectorized coordinates.
  matrix basis;
};

// Smallest subspace containing the span of the generators and closed
// under left multiplication by them; for generators of a unital span this
// is the (non-unital) subalgebra they generate.  With two_sided set,
// right multiplications are added each round (the limit is the same, the
// intermediate dims may differ).
closure_report span_closure(const algebra_shape& shape,
                            const std::vector<algebra_element>& generators,
                            const tolerance& tol, bool two_sided = false);

// Relative distance from the element to the closure subspace.
double containment_residual(const closure_report& report,
                            const algebra_element& a);

struct generation_certificate {
  algebra_element element;
  closure_report closure;
  // Smallest singular value over the blocks of the element, and the
  // invertibility cutoff it is compared against.
  double invertibility_margin = 0.0;
  double invertibility_threshold = 0.0;
  // How far the involution applied twice is from the identity on the
  // element.
  double involution_residual = 0.0;
  bool certified = false;
};

// Checks that the element together with its involution image generates
// the whole algebra, with invertible blocks.
generation_certificate certify_generation(const algebra_shape& shape,
                                          const involution_spec& spec,
                                          const algebra_element& a,
                                          const tolerance& tol);

}  // namespace invogen
