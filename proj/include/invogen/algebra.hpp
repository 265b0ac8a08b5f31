// Copyright (c) the invogen contributors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "invogen/linalg.hpp"
#include "invogen/types.hpp"

namespace invogen {

// Block decomposition of a semisimple algebra: one full matrix block per
// entry, blocks[i] being the side length of block i.
struct algebra_shape {
  std::vector<int> blocks;

  int block_count() const { return static_cast<int>(blocks.size()); }
  // Sum of squared block sizes, the linear dimension of the algebra.
  int total_dim() const;
  void validate() const;

  bool operator==(const algebra_shape&) const = default;
};

// Element of a block algebra: one square matrix per block.
struct algebra_element {
  algebra_shape shape;
  std::vector<matrix> parts;

  void validate() const;
};

algebra_element zero_element(const algebra_shape& shape);
algebra_element identity_element(const algebra_shape& shape);
algebra_element random_element(const algebra_shape& shape, std::uint64_t seed);

algebra_element add(const algebra_element& a, const algebra_element& b);
algebra_element scale(cxd c, const algebra_element& a);
algebra_element multiply(const algebra_element& a, const algebra_element& b);
double element_norm(const algebra_element& a);

// Concatenation of the row-major entry lists of the blocks, in block order.
cvec vectorize(const algebra_element& a);
algebra_element devectorize(const algebra_shape& shape, const cvec& v);

// Element supported on a single block.
algebra_element embed_block(const algebra_shape& shape, int block, const matrix& x);

// Involution acting on one S-fixed block as x -> (u x u^{-1})^T.
struct fixed_orbit_spec {
  int block = 0;
  matrix u;
};

// Involution exchanging blocks i and j as x (+) y -> (g y^T g^{-1}) (+) (h x^T h^{-1}).
struct swap_orbit_spec {
  int i = 0;
  int j = 0;
  matrix g;
  matrix h;
};

using orbit_spec = std::variant<fixed_orbit_spec, swap_orbit_spec>;

// An involutive anti-automorphism, either given orbit by orbit or as a
// dense matrix acting on vectorized elements.
struct involution_spec {
  std::vector<orbit_spec> orbits;
  std::optional<matrix> dense;

  bool is_structured() const { return !dense.has_value(); }

  static involution_spec from_orbits(std::vector<orbit_spec> orbits);
  static involution_spec from_dense(matrix action);

  void validate(const algebra_shape& shape) const;
};

// Dense matrix of the action of a structured spec, mostly for round trips.
matrix dense_from_structured(const involution_spec& spec, const algebra_shape& shape);

algebra_element apply_involution(const involution_spec& spec, const algebra_element& a);

// Residuals of the defining axioms, sampled on seeded random elements.
struct involution_report {
  double linear_residual = 0.0;
  double anti_multiplicative_residual = 0.0;
  double involutive_residual = 0.0;
  double unital_residual = 0.0;
  bool pass = false;

  double worst() const;
};

involution_report verify_involution(const involution_spec& spec,
                                    const algebra_shape& shape,
                                    const tolerance& tol, int trials = 32,
                                    std::uint64_t seed = 7);

// One orbit of the block permutation induced by an involution: either a
// fixed block or an exchanged pair i < j.
struct block_orbit {
  int i = 0;
  std::optional<int> j;

  bool is_pair() const { return j.has_value(); }
  int dim_contribution(const algebra_shape& shape) const;
};

struct orbit_pairing {
  std::vector<block_orbit> orbits;
};

// How the involution permutes the minimal central projections.  For dense
// specs this is recovered numerically from the images of the block
// identities; the permutation must be involutive and size preserving.
orbit_pairing pair_orbits(const involution_spec& spec, const algebra_shape& shape,
                          const tolerance& tol);

// Restriction of the involution to one orbit, as a map on the orbit's own
// one- or two-block shape.
algebra_shape orbit_shape(const algebra_shape& shape, const block_orbit& orbit);
algebra_element restrict_to_orbit(const involution_spec& spec,
                                  const algebra_shape& shape,
                                  const block_orbit& orbit,
                                  const algebra_element& mini);

}  // namespace invogen
