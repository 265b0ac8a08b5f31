// Copyright (c) the invogen contributors.
// Licensed under the Apache License, Version 2.0.
#include "invogen/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace invogen {

int algebra_shape::total_dim() const {
  int n = 0;
  for (int d : blocks) n += d * d;
  return n;
}

void algebra_shape::validate() const {
  if (blocks.empty())
    raise(errc::invalid_argument, "algebra shape needs at least one block");
  for (int d : blocks)
    if (d < 1) raise(errc::invalid_argument, "block sizes must be positive");
}

void algebra_element::validate() const {
  shape.validate();
  if (parts.size() != shape.blocks.size())
    raise(errc::shape_mismatch, "element part count differs from shape");
  for (size_t b = 0; b < parts.size(); ++b) {
    const int d = shape.blocks[b];
    if (parts[b].rows() != d || parts[b].cols() != d)
      raise(errc::shape_mismatch, "element block " + std::to_string(b) +
                                      " has the wrong size");
  }
}

algebra_element zero_element(const algebra_shape& shape) {
  shape.validate();
  algebra_element e{shape, {}};
  e.parts.reserve(shape.blocks.size());
  for (int d : shape.blocks) e.parts.push_back(matrix::Zero(d, d));
  return e;
}

algebra_element identity_element(const algebra_shape& shape) {
  shape.validate();
  algebra_element e{shape, {}};
  e.parts.reserve(shape.blocks.size());
  for (int d : shape.blocks) e.parts.push_back(matrix::Identity(d, d));
  return e;
}

algebra_element random_element(const algebra_shape& shape, std::uint64_t seed) {
  shape.validate();
  algebra_element e{shape, {}};
  e.parts.reserve(shape.blocks.size());
  for (size_t b = 0; b < shape.blocks.size(); ++b)
    e.parts.push_back(random_gaussian(shape.blocks[b], mix_seed(seed, b)));
  return e;
}

namespace {

void require_same_shape(const algebra_element& a, const algebra_element& b) {
  if (!(a.shape == b.shape))
    raise(errc::shape_mismatch, "elements live in different algebras");
}

}  // namespace

algebra_element add(const algebra_element& a, const algebra_element& b) {
  require_same_shape(a, b);
  algebra_element out = a;
  for (size_t i = 0; i < out.parts.size(); ++i) out.parts[i] += b.parts[i];
  return out;
}

algebra_element scale(cxd c, const algebra_element& a) {
  algebra_element out = a;
  for (auto& p : out.parts) p *= c;
  return out;
}

algebra_element multiply(const algebra_element& a, const algebra_element& b) {
  require_same_shape(a, b);
  algebra_element out = a;
  for (size_t i = 0; i < out.parts.size(); ++i)
    out.parts[i] = a.parts[i] * b.parts[i];
  return out;
}

double element_norm(const algebra_element& a) {
  double s = 0.0;
  for (const auto& p : a.parts) s += p.squaredNorm();
  return std::sqrt(s);
}

cvec vectorize(const algebra_element& a) {
  a.validate();
  cvec v(a.shape.total_dim());
  Eigen::Index k = 0;
  for (const auto& p : a.parts)
    for (Eigen::Index i = 0; i < p.rows(); ++i)
      for (Eigen::Index j = 0; j < p.cols(); ++j) v(k++) = p(i, j);
  return v;
}

algebra_element devectorize(const algebra_shape& shape, const cvec& v) {
  shape.validate();
  if (v.size() != shape.total_dim())
    raise(errc::size_mismatch, "vector length differs from algebra dimension");
  algebra_element e = zero_element(shape);
  Eigen::Index k = 0;
  for (auto& p : e.parts)
    for (Eigen::Index i = 0; i < p.rows(); ++i)
      for (Eigen::Index j = 0; j < p.cols(); ++j) p(i, j) = v(k++);
  return e;
}

algebra_element embed_block(const algebra_shape& shape, int block, const matrix& x) {
  shape.validate();
  if (block < 0 || block >= shape.block_count())
    raise(errc::invalid_argument, "block index out of range");
  if (x.rows() != shape.blocks[block] || x.cols() != shape.blocks[block])
    raise(errc::shape_mismatch, "embedded matrix has the wrong size");
  algebra_element e = zero_element(shape);
  e.parts[static_cast<size_t>(block)] = x;
  return e;
}

involution_spec involution_spec::from_orbits(std::vector<orbit_spec> orbits) {
  involution_spec s;
  s.orbits = std::move(orbits);
  return s;
}

involution_spec involution_spec::from_dense(matrix action) {
  involution_spec s;
  s.dense = std::move(action);
  return s;
}

void involution_spec::validate(const algebra_shape& shape) const {
  shape.validate();
  if (dense.has_value()) {
    if (!orbits.empty())
      raise(errc::invalid_argument, "involution spec is both dense and structured");
    const int n = shape.total_dim();
    if (dense->rows() != n || dense->cols() != n)
      raise(errc::shape_mismatch, "dense involution action has the wrong size");
    return;
  }
  std::vector<bool> seen(shape.blocks.size(), false);
  auto claim = [&](int b) {
    if (b < 0 || b >= shape.block_count())
      raise(errc::invalid_argument, "orbit refers to a block out of range");
    if (seen[static_cast<size_t>(b)])
      raise(errc::invalid_argument, "block appears in two orbits");
    seen[static_cast<size_t>(b)] = true;
  };
  for (const auto& o : orbits) {
    if (std::holds_alternative<fixed_orbit_spec>(o)) {
      const auto& f = std::get<fixed_orbit_spec>(o);
      claim(f.block);
      const int d = shape.blocks[f.block];
      if (f.u.rows() != d || f.u.cols() != d)
        raise(errc::shape_mismatch, "fixed orbit matrix has the wrong size");
    } else {
      const auto& s = std::get<swap_orbit_spec>(o);
      claim(s.i);
      claim(s.j);
      if (shape.blocks[s.i] != shape.blocks[s.j])
        raise(errc::size_mismatch, "swapped blocks have different sizes");
      const int d = shape.blocks[s.i];
      if (s.g.rows() != d || s.g.cols() != d || s.h.rows() != d || s.h.cols() != d)
        raise(errc::shape_mismatch, "swap orbit matrices have the wrong size");
    }
  }
  for (bool b : seen)
    if (!b) raise(errc::invalid_argument, "orbits do not cover every block");
}

namespace {

matrix conj_transpose_by(const matrix& u, const matrix& x) {
  // (u x u^{-1})^T computed with one LU solve.
  const matrix y = u * x;
  return u.transpose()
      .partialPivLu()
      .solve(y.transpose());
}

}  // namespace

algebra_element apply_involution(const involution_spec& spec, const algebra_element& a) {
  a.validate();
  spec.validate(a.shape);
  if (spec.dense.has_value())
    return devectorize(a.shape, (*spec.dense) * vectorize(a));

  algebra_element out = zero_element(a.shape);
  for (const auto& o : spec.orbits) {
    if (std::holds_alternative<fixed_orbit_spec>(o)) {
      const auto& f = std::get<fixed_orbit_spec>(o);
      out.parts[static_cast<size_t>(f.block)] =
          conj_transpose_by(f.u, a.parts[static_cast<size_t>(f.block)]);
    } else {
      const auto& s = std::get<swap_orbit_spec>(o);
      out.parts[static_cast<size_t>(s.i)] =
          conj_transpose_by(s.g, a.parts[static_cast<size_t>(s.j)]);
      out.parts[static_cast<size_t>(s.j)] =
          conj_transpose_by(s.h, a.parts[static_cast<size_t>(s.i)]);
    }
  }
  return out;
}

double involution_report::worst() const {
  return std::max(std::max(linear_residual, anti_multiplicative_residual),
                  std::max(involutive_residual, unital_residual));
}

involution_report verify_involution(const involution_spec& spec,
                                    const algebra_shape& shape,
                                    const tolerance& tol, int trials,
                                    std::uint64_t seed) {
  tol.validate();
  spec.validate(shape);
  if (trials < 1) raise(errc::invalid_argument, "verify_involution needs trials >= 1");

  involution_report rep;
  const algebra_element one = identity_element(shape);
  rep.unital_residual =
      element_norm(add(apply_involution(spec, one), scale(cxd(-1.0), one))) /
      element_norm(one);

  for (int t = 0; t < trials; ++t) {
    const algebra_element a = random_element(shape, mix_seed(seed, 2 * t));
    const algebra_element b = random_element(shape, mix_seed(seed, 2 * t + 1));
    const cxd c = random_unit_scalar(mix_seed(seed, 1000 + t)) * cxd(1.5);
    const double na = element_norm(a);
    const double nb = element_norm(b);

    const algebra_element sa = apply_involution(spec, a);
    const algebra_element sb = apply_involution(spec, b);

    const algebra_element lin = add(
        apply_involution(spec, add(scale(c, a), b)),
        scale(cxd(-1.0), add(scale(c, sa), sb)));
    rep.linear_residual = std::max(
        rep.linear_residual, element_norm(lin) / (std::abs(c) * na + nb));

    const algebra_element anti =
        add(apply_involution(spec, multiply(a, b)),
            scale(cxd(-1.0), multiply(sb, sa)));
    rep.anti_multiplicative_residual = std::max(
        rep.anti_multiplicative_residual, element_norm(anti) / (na * nb));

    const algebra_element invl =
        add(apply_involution(spec, sa), scale(cxd(-1.0), a));
    rep.involutive_residual =
        std::max(rep.involutive_residual, element_norm(invl) / na);
  }
  rep.pass = rep.worst() <= tol.residual_rel;
  return rep;
}

int block_orbit::dim_contribution(const algebra_shape& shape) const {
  const int di = shape.blocks[i];
  return is_pair() ? 2 * di * di : di * di;
}

orbit_pairing pair_orbits(const involution_spec& spec, const algebra_shape& shape,
                          const tolerance& tol) {
  tol.validate();
  spec.validate(shape);
  const int nb = shape.block_count();

  std::vector<int> image(static_cast<size_t>(nb), -1);
  if (spec.is_structured()) {
    for (const auto& o : spec.orbits) {
      if (std::holds_alternative<fixed_orbit_spec>(o)) {
        const auto& f = std::get<fixed_orbit_spec>(o);
        image[static_cast<size_t>(f.block)] = f.block;
      } else {
        const auto& s = std::get<swap_orbit_spec>(o);
        image[static_cast<size_t>(s.i)] = s.j;
        image[static_cast<size_t>(s.j)] = s.i;
      }
    }
  } else {
    // Recover the permutation from the images of the block identities.
    for (int b = 0; b < nb; ++b) {
      const algebra_element eb = embed_block(
          shape, b, matrix::Identity(shape.blocks[b], shape.blocks[b]));
      const algebra_element im = apply_involution(spec, eb);
      const double nb_norm = element_norm(eb);
      int target = -1;
      for (int c = 0; c < nb; ++c) {
        const double mass = im.parts[static_cast<size_t>(c)].norm();
        if (mass > tol.residual_rel * nb_norm) {
          if (target != -1)
            raise(errc::not_a_permutation,
                  "image of a block identity meets two blocks");
          target = c;
        }
      }
      if (target == -1)
        raise(errc::not_a_permutation, "image of a block identity vanishes");
      const algebra_element ec = embed_block(
          shape, target,
          matrix::Identity(shape.blocks[target], shape.blocks[target]));
      if (element_norm(add(im, scale(cxd(-1.0), ec))) > tol.residual_rel * nb_norm)
        raise(errc::not_a_permutation,
              "image of a block identity is not a block identity");
      image[static_cast<size_t>(b)] = target;
    }
  }

  for (int b = 0; b < nb; ++b) {
    const int ib = image[static_cast<size_t>(b)];
    if (ib < 0 || image[static_cast<size_t>(ib)] != b)
      raise(errc::not_a_permutation, "block permutation is not involutive");
    if (shape.blocks[static_cast<size_t>(b)] != shape.blocks[static_cast<size_t>(ib)])
      raise(errc::size_mismatch, "paired blocks have different sizes");
  }

  orbit_pairing out;
  for (int b = 0; b < nb; ++b) {
    const int ib = image[static_cast<size_t>(b)];
    if (ib == b) {
      out.orbits.push_back(block_orbit{b, std::nullopt});
    } else if (b < ib) {
      out.orbits.push_back(block_orbit{b, ib});
    }
  }
  return out;
}

algebra_shape orbit_shape(const algebra_shape& shape, const block_orbit& orbit) {
  const int d = shape.blocks[orbit.i];
  if (orbit.is_pair()) return algebra_shape{{d, d}};
  return algebra_shape{{d}};
}

algebra_element restrict_to_orbit(const involution_spec& spec,
                                  const algebra_shape& shape,
                                  const block_orbit& orbit,
                                  const algebra_element& mini) {
  mini.validate();
  const algebra_shape mshape = orbit_shape(shape, orbit);
  if (!(mini.shape == mshape))
    raise(errc::shape_mismatch, "element does not match the orbit shape");
  algebra_element full = zero_element(shape);
  full.parts[static_cast<size_t>(orbit.i)] = mini.parts[0];
  if (orbit.is_pair()) full.parts[static_cast<size_t>(*orbit.j)] = mini.parts[1];
  const algebra_element im = apply_involution(spec, full);
  algebra_element out = zero_element(mshape);
  out.parts[0] = im.parts[static_cast<size_t>(orbit.i)];
  if (orbit.is_pair()) out.parts[1] = im.parts[static_cast<size_t>(*orbit.j)];
  return out;
}

matrix dense_from_structured(const involution_spec& spec, const algebra_shape& shape) {
  spec.validate(shape);
  if (!spec.is_structured())
    raise(errc::invalid_argument, "spec is already dense");
  const int n = shape.total_dim();
  matrix d(n, n);
  for (int k = 0; k < n; ++k) {
    cvec e = cvec::Zero(n);
    e(k) = cxd(1.0);
    d.col(k) = vectorize(apply_involution(spec, devectorize(shape, e)));
  }
  return d;
}

}  // namespace invogen
