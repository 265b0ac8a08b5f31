// Copyright (c) the invogen contributors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <functional>
#include <vector>

#include "invogen/algebra.hpp"
#include "invogen/types.hpp"

namespace invogen {

enum class block_involution_type { orthogonal, symplectic, swap_pair };

const char* block_involution_type_name(block_involution_type t);

using matrix_map = std::function<matrix(const matrix&)>;

// Result of normalizing the involution on one S-fixed block: the
// intertwiner is classified as symmetric (orthogonal type, canonical form
// x -> x^T) or skew (symplectic type, canonical form x -> J x^T J^{-1}),
// and basis_change conjugates the block so the restriction becomes the
// canonical form exactly.
struct simple_block_normalization {
  block_involution_type type = block_involution_type::orthogonal;
  matrix basis_change;
  double residual = 0.0;
};

// s_block is the restriction of the involution to one fixed block of size
// n.  Writes s_block(x) = (u x u^{-1})^T, classifies u, factors it, and
// checks the transported map against the canonical form on sample points.
simple_block_normalization normalize_simple_block(const matrix_map& s_block,
                                                  int n, const tolerance& tol);

// For an exchanged pair the involution reads x (+) y -> to_first(y) (+)
// to_second(x).  Returns u such that conjugating the first block by u
// transports the involution to the canonical swap x (+) y -> y^T (+) x^T.
struct swap_pair_normalization {
  matrix basis_change;
  double residual = 0.0;
};

swap_pair_normalization normalize_swap_pair(const matrix_map& to_first,
                                            const matrix_map& to_second,
                                            int n, const tolerance& tol);

struct orbit_normalization {
  block_orbit orbit;
  block_involution_type type = block_involution_type::orthogonal;
  matrix basis_change;
  double residual = 0.0;
};

struct normalization_report {
  std::vector<orbit_normalization> orbits;
  double max_residual = 0.0;
};

// Normalizes every orbit of the involution.  Orbits are reported in the
// order produced by pair_orbits.
normalization_report normalize_all(const algebra_shape& shape,
                                   const involution_spec& spec,
                                   const tolerance& tol);

// Maps an element written in the canonical coordinates of one orbit back
// to the original coordinates, inverting the normalizing conjugation.
algebra_element transport_from_canonical(const orbit_normalization& norm,
                                         const algebra_element& canonical);

}  // namespace invogen
