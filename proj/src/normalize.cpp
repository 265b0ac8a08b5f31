// Copyright (c) the invogen contributors.
// Licensed under the Apache License, Version 2.0.
#include "invogen/normalize.hpp"

#include <cmath>

namespace invogen {

const char* block_involution_type_name(block_involution_type t) {
  switch (t) {
    case block_involution_type::orthogonal: return "orthogonal";
    case block_involution_type::symplectic: return "symplectic";
    case block_involution_type::swap_pair: return "swap";
  }
  return "unknown";
}

simple_block_normalization normalize_simple_block(const matrix_map& s_block,
                                                  int n, const tolerance& tol) {
  tol.validate();
  if (n < 1) raise(errc::invalid_argument, "block size must be positive");

  // Writing s_block(x) = (u x u^{-1})^T, the composition phi(x) =
  // s_block(x)^T = u x u^{-1} is the inner automorphism of u itself.
  // Transposing the argument instead would invert the conjugation.
  unit_images phi;
  phi.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      matrix e = matrix::Zero(n, n);
      e(i, j) = cxd(1.0);
      phi.push_back(s_block(e).transpose());
    }
  matrix u = find_intertwiner(phi, tol);

  const double nn = u.norm();
  const double rsym = (u - u.transpose()).norm();
  const double rskew = (u + u.transpose()).norm();

  simple_block_normalization out;
  if (rsym <= tol.residual_rel * nn) {
    out.type = block_involution_type::orthogonal;
    u = 0.5 * (u + u.transpose());
    out.basis_change = takagi_symmetric(u, tol);
  } else if (rskew <= tol.residual_rel * nn) {
    out.type = block_involution_type::symplectic;
    u = 0.5 * (u - u.transpose());
    out.basis_change = takagi_skew(u, tol);
  } else {
    raise(errc::neither_symmetric_nor_skew,
          "intertwiner is neither symmetric nor skew (relative defects " +
              std::to_string(rsym / nn) + ", " + std::to_string(rskew / nn) + ")");
  }

  // Transported involution must match the canonical form pointwise.
  const matrix& v = out.basis_change;
  const matrix vinv = v.partialPivLu().solve(matrix::Identity(n, n));
  const matrix j = out.type == block_involution_type::symplectic
                       ? symplectic_form(n)
                       : matrix();
  for (int t = 0; t < 8; ++t) {
    const matrix x = random_gaussian(n, mix_seed(40'000 + n, t));
    const matrix got = v * s_block(vinv * x * v) * vinv;
    // Canonical forms: x^T for the orthogonal type, J x^T J^{-1} with
    // J^{-1} = J^T for the symplectic one.
    const matrix want = out.type == block_involution_type::orthogonal
                            ? matrix(x.transpose())
                            : matrix(j * x.transpose() * j.transpose());
    out.residual = std::max(out.residual, (got - want).norm() / x.norm());
  }
  if (out.residual > tol.residual_rel)
    raise(errc::numeric_failure,
          "transported involution misses the canonical form, residual " +
              std::to_string(out.residual));
  return out;
}

swap_pair_normalization normalize_swap_pair(const matrix_map& to_first,
                                            const matrix_map& to_second,
                                            int n, const tolerance& tol) {
  tol.validate();
  if (n < 1) raise(errc::invalid_argument, "block size must be positive");

  // to_first(y) = g y^T g^{-1} carries the transpose inside, so here it is
  // the argument that gets transposed: to_first(x^T) = g x g^{-1} and
  // to_second(x^T) = h x h^{-1} are the inner automorphisms of g and h.
  unit_images phi_g, phi_h;
  phi_g.reserve(static_cast<size_t>(n) * n);
  phi_h.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      matrix e = matrix::Zero(n, n);
      e(j, i) = cxd(1.0);
      phi_g.push_back(to_first(e));
      phi_h.push_back(to_second(e));
    }
  const matrix g = find_intertwiner(phi_g, tol);
  const matrix h = find_intertwiner(phi_h, tol);

  // The involution axiom forces h to be a scalar multiple of g^T.
  const cxd c = (g.conjugate() * h).trace() / cxd(g.squaredNorm());
  const double prop = (h - c * g.transpose()).norm() / h.norm();
  if (prop > tol.residual_rel)
    raise(errc::not_proportional,
          "second intertwiner is not proportional to the transpose of the "
          "first, relative defect " + std::to_string(prop));

  swap_pair_normalization out;
  out.basis_change = std::sqrt(c) * g;

  const matrix& u = out.basis_change;
  const matrix uinv = u.partialPivLu().solve(matrix::Identity(n, n));
  for (int t = 0; t < 8; ++t) {
    const matrix x = random_gaussian(n, mix_seed(50'000 + n, 2 * t));
    const matrix y = random_gaussian(n, mix_seed(50'000 + n, 2 * t + 1));
    // Transport by x (+) y -> (u^{-1} x u) (+) y and compare against the
    // canonical swap y^T (+) x^T.
    const matrix first = uinv * to_first(y) * u;
    const matrix second = to_second(u * x * uinv);
    out.residual = std::max(
        out.residual, (first - y.transpose()).norm() / y.norm());
    out.residual = std::max(
        out.residual, (second - x.transpose()).norm() / x.norm());
  }
  if (out.residual > tol.residual_rel)
    raise(errc::numeric_failure,
          "transported swap misses the canonical form, residual " +
              std::to_string(out.residual));
  return out;
}

normalization_report normalize_all(const algebra_shape& shape,
                                   const involution_spec& spec,
                                   const tolerance& tol) {
  const orbit_pairing pairing = pair_orbits(spec, shape, tol);
  normalization_report rep;
  for (size_t k = 0; k < pairing.orbits.size(); ++k) {
    const block_orbit& orbit = pairing.orbits[k];
    const int d = shape.blocks[orbit.i];
    orbit_normalization entry;
    entry.orbit = orbit;
    try {
      if (!orbit.is_pair()) {
        const matrix_map s = [&](const matrix& x) {
          algebra_element mini{orbit_shape(shape, orbit), {x}};
          return restrict_to_orbit(spec, shape, orbit, mini).parts[0];
        };
        const auto res = normalize_simple_block(s, d, tol);
        entry.type = res.type;
        entry.basis_change = res.basis_change;
        entry.residual = res.residual;
      } else {
        const algebra_shape mshape = orbit_shape(shape, orbit);
        const matrix_map to_first = [&](const matrix& y) {
          algebra_element mini{mshape, {matrix::Zero(d, d), y}};
          return restrict_to_orbit(spec, shape, orbit, mini).parts[0];
        };
        const matrix_map to_second = [&](const matrix& x) {
          algebra_element mini{mshape, {x, matrix::Zero(d, d)}};
          return restrict_to_orbit(spec, shape, orbit, mini).parts[1];
        };
        const auto res = normalize_swap_pair(to_first, to_second, d, tol);
        entry.type = block_involution_type::swap_pair;
        entry.basis_change = res.basis_change;
        entry.residual = res.residual;
      }
    } catch (const error& e) {
      raise(e.code(), "orbit " + std::to_string(k) + ": " + e.what());
    }
    rep.max_residual = std::max(rep.max_residual, entry.residual);
    rep.orbits.push_back(std::move(entry));
  }
  return rep;
}

algebra_element transport_from_canonical(const orbit_normalization& norm,
                                         const algebra_element& canonical) {
  canonical.validate();
  const matrix& v = norm.basis_change;
  const int n = static_cast<int>(v.rows());
  const matrix vinv = v.partialPivLu().solve(matrix::Identity(n, n));
  algebra_element out = canonical;
  if (norm.type == block_involution_type::swap_pair) {
    if (canonical.parts.size() != 2)
      raise(errc::shape_mismatch, "swap transport needs a two block element");
    // Inverse of x (+) y -> (v^{-1} x v) (+) y.
    out.parts[0] = v * canonical.parts[0] * vinv;
  } else {
    if (canonical.parts.size() != 1)
      raise(errc::shape_mismatch, "fixed block transport needs one block");
    // Inverse of x -> v x v^{-1}.
    out.parts[0] = vinv * canonical.parts[0] * v;
  }
  return out;
}

}  // namespace invogen
