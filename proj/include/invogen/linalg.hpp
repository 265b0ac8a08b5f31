// Copyright (c) the invogen contributors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <cstdint>
#include <vector>

#include "invogen/polynomial.hpp"
#include "invogen/types.hpp"

namespace invogen {

struct rank_basis {
  int rank = 0;
  // Orthonormal columns spanning the column space of the input.
  matrix basis;
};

// Numerical rank and an orthonormal basis of the span of the input columns,
// via SVD with relative singular value cutoff tol.rank_rel.
rank_basis rank_and_basis(const matrix& columns, const tolerance& tol);
rank_basis rank_and_basis(const std::vector<cvec>& vectors, const tolerance& tol);

// Largest singular value.
double operator_norm(const matrix& a);

// Smallest and largest singular value.
std::pair<double, double> singular_extremes(const matrix& a);

// Monic annihilating polynomial of least degree, determined by rank tests
// on the Krylov family I, a, a^2, ... (computed on a/|a| for scale safety).
polynomial minimal_polynomial(const matrix& a, const tolerance& tol);

// The form [[0, I], [-I, 0]] of even size n.
matrix symplectic_form(int n);

// v with v^T v = u for invertible symmetric u (complex orthogonal Takagi
// splitting, computed through the real embedding eigenproblem).
matrix takagi_symmetric(const matrix& u, const tolerance& tol);

// v with v^T J v = u for invertible skew-symmetric u of even size, where
// J = symplectic_form(n).  Built by symplectic elimination with greedy
// pivoting on the Gram matrix.
matrix takagi_skew(const matrix& u, const tolerance& tol);

// A linear map on n x n matrices presented through its images of the
// matrix units, listed row major: images[i * n + j] = phi(E_ij).
using unit_images = std::vector<matrix>;

// Invertible u with phi(x) = u x u^{-1} for an inner automorphism phi,
// normalized so the largest-magnitude entry equals one.  The solution
// space of the intertwining equations must be one dimensional: raises
// not_inner when it is empty and ambiguous_solution when larger.
matrix find_intertwiner(const unit_images& images, const tolerance& tol);

// Deterministic pseudo randomness for sampling and tests.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);
matrix random_gaussian(int n, std::uint64_t seed);
// Random matrix with prescribed 2-norm condition number.
matrix random_conditioned(int n, std::uint64_t seed, double condition);
cxd random_unit_scalar(std::uint64_t seed);

}  // namespace invogen
