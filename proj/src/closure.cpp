// Copyright (c) the invogen contributors.
// Licensed under the Apache License, Version 2.0.
#include "invogen/closure.hpp"

#include <algorithm>

namespace invogen {

closure_report span_closure(const algebra_shape& shape,
                            const std::vector<algebra_element>& generators,
                            const tolerance& tol, bool two_sided) {
  tol.validate();
  shape.validate();
  if (generators.empty())
    raise(errc::invalid_argument, "span_closure needs at least one generator");
  for (const auto& g : generators) {
    g.validate();
    if (!(g.shape == shape))
      raise(errc::shape_mismatch, "generator lives in a different algebra");
  }

  const int total = shape.total_dim();
  const auto m = static_cast<Eigen::Index>(generators.size());

  matrix init(total, m);
  for (Eigen::Index k = 0; k < m; ++k)
    init.col(k) = vectorize(generators[static_cast<size_t>(k)]);

  closure_report rep;
  rank_basis rb = rank_and_basis(init, tol);
  rep.dims.push_back(rb.rank);

  while (rb.rank < total) {
    const Eigen::Index r = rb.rank;
    const Eigen::Index factor = two_sided ? 2 * m : m;
    matrix stacked(total, r + factor * r);
    stacked.leftCols(r) = rb.basis;
    Eigen::Index col = r;
    for (Eigen::Index k = 0; k < r; ++k) {
      const algebra_element w = devectorize(shape, rb.basis.col(k));
      for (const auto& g : generators) {
        stacked.col(col++) = vectorize(multiply(g, w));
        if (two_sided) stacked.col(col++) = vectorize(multiply(w, g));
      }
    }
    rank_basis next = rank_and_basis(stacked, tol);
    ++rep.rounds;
    if (next.rank <= rb.rank) break;
    rep.dims.push_back(next.rank);
    rb = std::move(next);
  }

  rep.final_dim = rb.rank;
  rep.generated = rb.rank == total;
  rep.basis = std::move(rb.basis);
  return rep;
}

double containment_residual(const closure_report& report,
                            const algebra_element& a) {
  const cvec v = vectorize(a);
  const double nv = v.norm();
  if (nv == 0.0) return 0.0;
  if (report.basis.rows() != v.size())
    raise(errc::size_mismatch, "element does not match the closure basis");
  const cvec proj = report.basis * (report.basis.adjoint() * v);
  return (v - proj).norm() / nv;
}

generation_certificate certify_generation(const algebra_shape& shape,
                                          const involution_spec& spec,
                                          const algebra_element& a,
                                          const tolerance& tol) {
  tol.validate();
  a.validate();
  if (!(a.shape == shape))
    raise(errc::shape_mismatch, "element lives in a different algebra");

  const algebra_element sa = apply_involution(spec, a);
  const algebra_element ssa = apply_involution(spec, sa);
  const double na = element_norm(a);

  generation_certificate cert;
  cert.element = a;
  cert.involution_residual =
      na == 0.0 ? 0.0 : element_norm(add(ssa, scale(cxd(-1.0), a))) / na;
  cert.closure = span_closure(shape, {a, sa}, tol);

  double smin = -1.0;
  double smax = 0.0;
  for (const auto& p : a.parts) {
    const auto [lo, hi] = singular_extremes(p);
    smin = smin < 0.0 ? lo : std::min(smin, lo);
    smax = std::max(smax, hi);
  }
  cert.invertibility_margin = std::max(smin, 0.0);
  cert.invertibility_threshold = tol.rank_rel * smax;
  const bool invertible = cert.invertibility_margin > cert.invertibility_threshold;

  cert.certified = cert.closure.generated && invertible &&
                   cert.involution_residual <= tol.residual_rel;
  return cert;
}

}  // namespace invogen
