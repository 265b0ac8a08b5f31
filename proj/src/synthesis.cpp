// Copyright (c) the invogen contributors.
// Licensed under the Apache License, Version 2.0.
#include "invogen/synthesis.hpp"

#include <algorithm>
#include <cmath>

namespace invogen {

synthesis_config synthesis_config::defaults(std::uint64_t seed) {
  synthesis_config cfg;
  cfg.seed = seed;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97})
    cfg.lambda_scan.push_back(cxd(double(p), 0.0));
  // Tail of scattered samples in an annulus, for inputs whose spectra
  // happen to collide with every small prime.
  for (int t = 0; t < 32; ++t) {
    const cxd dir = random_unit_scalar(mix_seed(seed, 7000 + t));
    const double mod = 1.5 + 2.0 * (double(t) + 0.5) / 32.0;
    cfg.lambda_scan.push_back(mod * dir);
  }
  return cfg;
}

namespace {

void validate_config(const synthesis_config& cfg) {
  cfg.tol.validate();
  if (cfg.retry_budget < 1)
    raise(errc::invalid_argument, "retry budget must be positive");
  if (cfg.verify_trials < 1)
    raise(errc::invalid_argument, "verify trials must be positive");
  if (!(cfg.root_tol > 0.0))
    raise(errc::invalid_argument, "root tolerance must be positive");
  if (!(cfg.resultant_threshold > 0.0))
    raise(errc::invalid_argument, "resultant threshold must be positive");
}

bool well_invertible(const matrix& x, const tolerance& tol) {
  const auto [lo, hi] = singular_extremes(x);
  return lo > tol.rank_rel * hi && hi > 0.0;
}

// Deterministic generator probe: ones on the superdiagonal, 1..n on the
// diagonal and a corner entry breaking the remaining symmetry.  Together
// with its image under any of the canonical involutions this element
// generates the full matrix algebra (checked by the caller).
matrix deterministic_probe(int n, double corner) {
  matrix x = matrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) x(i, i + 1) = cxd(1.0);
  for (int i = 0; i < n; ++i) x(i, i) += cxd(double(i + 1), 0.0);
  x(n - 1, 0) += cxd(corner, 0.0);
  return x;
}

lambda_choice select_lambda_skipping(const polynomial& p, const polynomial& q,
                                     const synthesis_config& cfg,
                                     bool require_inverse_margin, int skip) {
  validate_config(cfg);
  if (p.degree() < 1 || q.degree() < 1)
    raise(errc::invalid_argument, "select_lambda needs nonconstant polynomials");
  polynomial pm = p;
  polynomial qm = q;
  pm.normalize_monic();
  qm.normalize_monic();

  const std::vector<cxd> rp = roots(pm);
  const std::vector<cxd> rq = roots(qm);
  std::vector<cxd> quotients;
  quotients.reserve(rp.size() * rq.size());
  for (const cxd& rho : rp)
    for (const cxd& sigma : rq) {
      if (std::abs(sigma) < 1e-14)
        raise(errc::invalid_argument,
              "select_lambda divisor polynomial has a near-zero root");
      quotients.push_back(rho / sigma);
    }

  const double margin_floor = 10.0 * cfg.root_tol;
  for (const cxd& lambda : cfg.lambda_scan) {
    if (std::abs(lambda) < 1e-14) continue;
    double margin = std::numeric_limits<double>::infinity();
    for (const cxd& qt : quotients)
      margin = std::min(margin, std::abs(lambda - qt));
    if (!(margin > margin_floor)) continue;
    if (require_inverse_margin) {
      const cxd inv = cxd(1.0) / lambda;
      double m2 = std::numeric_limits<double>::infinity();
      for (const cxd& qt : quotients) m2 = std::min(m2, std::abs(inv - qt));
      if (!(m2 > margin_floor)) continue;
      margin = std::min(margin, m2);
    }

    const polynomial qs = scale_roots_monic(qm, lambda);
    const double res = std::abs(sylvester_resultant(pm, qs));
    double scale = 1.0;
    for (const cxd& rho : rp)
      for (const cxd& sigma : rq)
        scale *= std::max({1.0, std::abs(rho), std::abs(lambda * sigma)});
    const double certificate = res / scale;
    if (!(certificate > cfg.resultant_threshold)) continue;

    if (skip > 0) {
      --skip;
      continue;
    }
    lambda_choice choice;
    choice.lambda = lambda;
    choice.excluded_quotients = quotients;
    choice.certificate = certificate;
    choice.quotient_margin = margin;
    return choice;
  }
  raise(errc::lambda_exhausted,
        "no scan candidate separates the spectra with the required margin");
}

}  // namespace

lambda_choice select_lambda(const polynomial& p, const polynomial& q,
                            const synthesis_config& cfg,
                            bool require_inverse_margin) {
  return select_lambda_skipping(p, q, cfg, require_inverse_margin, 0);
}

polynomial splitting_polynomial(const polynomial& p, const polynomial& q,
                                cxd lambda, const tolerance& tol) {
  if (p.degree() < 1 || q.degree() < 1)
    raise(errc::invalid_argument,
          "splitting_polynomial needs nonconstant polynomials");
  polynomial pm = p;
  polynomial qm = q;
  pm.normalize_monic();
  qm.normalize_monic();
  const polynomial qs = scale_roots_monic(qm, lambda);
  const bezout_pair bz = bezout_identity(pm, qs, tol);
  // beta * qs is 1 modulo p and 0 modulo the rescaled q; the extra factor
  // of X keeps the constant term zero so evaluation stays inside the
  // non-unital algebra generated by the argument.
  return shift_up(bz.beta * qs);
}

std::pair<matrix, matrix> explicit_transpose_pair(
    int n, const std::vector<cxd>& alphas, const std::vector<cxd>& betas) {
  if (n < 1) raise(errc::invalid_argument, "explicit pair needs n >= 1");
  if (alphas.size() != static_cast<size_t>(n - 1) ||
      betas.size() != static_cast<size_t>(n - 1))
    raise(errc::size_mismatch, "explicit pair needs n - 1 scale factors");
  for (const auto& c : alphas)
    if (std::abs(c) == 0.0)
      raise(errc::zero_entry, "superdiagonal scale factors must be nonzero");
  for (const auto& c : betas)
    if (std::abs(c) == 0.0)
      raise(errc::zero_entry, "subdiagonal scale factors must be nonzero");
  matrix x = matrix::Zero(n, n);
  matrix y = matrix::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    x(i, i + 1) = alphas[static_cast<size_t>(i)];
    y(i + 1, i) = betas[static_cast<size_t>(i)];
  }
  return {x, y};
}

std::pair<matrix, matrix> explicit_transpose_pair(int n) {
  const std::vector<cxd> ones(static_cast<size_t>(std::max(n - 1, 0)), cxd(1.0));
  return explicit_transpose_pair(n, ones, ones);
}

symplectic_pair_report explicit_symplectic_pair(int n, const tolerance& tol) {
  tol.validate();
  if (n < 2 || n % 2 != 0)
    raise(errc::odd_dimension, "symplectic pair needs even n >= 2");
  auto [x, y] = explicit_transpose_pair(n);
  // One flipped sign on the subdiagonal adapts the pair to the symplectic
  // form.
  y(n / 2, n / 2 - 1) = cxd(-1.0);

  symplectic_pair_report rep;
  rep.x = x;
  rep.y = y;
  const algebra_shape shape{{n}};
  rep.closure = span_closure(shape, {algebra_element{shape, {x}},
                                     algebra_element{shape, {y}}},
                             tol);
  const matrix j = symplectic_form(n);
  const matrix sx = j * x.transpose() * j.transpose();
  const matrix sy = j * y.transpose() * j.transpose();
  rep.conj_residual_xy = (sx - y).norm() / y.norm();
  rep.conj_residual_yx = (sy - x).norm() / x.norm();
  return rep;
}

algebra_element swap_pair_generator(int n, const matrix& x, cxd lambda) {
  if (n < 1) raise(errc::invalid_argument, "swap_pair_generator needs n >= 1");
  if (x.rows() != n || x.cols() != n)
    raise(errc::size_mismatch, "swap_pair_generator matrix has the wrong size");
  if (std::abs(lambda) == 0.0)
    raise(errc::invalid_argument, "swap_pair_generator needs lambda != 0");
  tolerance tol;
  if (!well_invertible(x, tol))
    raise(errc::singular_matrix, "swap_pair_generator needs an invertible matrix");
  const algebra_shape shape{{n, n}};
  return algebra_element{shape, {x, lambda * x}};
}

namespace {

// One generator for a single orbit, in original coordinates, certified to
// generate the orbit subalgebra together with its involution image.
algebra_element orbit_generator(const algebra_shape& shape,
                                const involution_spec& spec,
                                const orbit_normalization& norm, size_t index,
                                const synthesis_config& cfg) {
  const block_orbit& orbit = norm.orbit;
  const int d = shape.blocks[orbit.i];
  const algebra_shape mshape = orbit_shape(shape, orbit);
  const int mdim = mshape.total_dim();

  auto orbit_closure_ok = [&](const algebra_element& mini) {
    const algebra_element image = restrict_to_orbit(spec, shape, orbit, mini);
    return span_closure(mshape, {mini, image}, cfg.tol).final_dim == mdim;
  };

  const bool swap = orbit.is_pair();
  const algebra_shape block_shape{{d}};

  auto build_from_block = [&](const matrix& x,
                              int lambda_skip) -> std::pair<bool, algebra_element> {
    if (!well_invertible(x, cfg.tol)) return {false, {}};
    if (!swap) {
      algebra_element mini{mshape, {x}};
      if (!orbit_closure_ok(mini)) return {false, {}};
      return {true, std::move(mini)};
    }
    // Exchanged pair: require that x with its transpose generates the
    // block, pick a spectrum-separating scalar that also works from the
    // swapped side, and transport x (+) lambda x back from canonical
    // coordinates.
    const algebra_element xe{block_shape, {x}};
    const algebra_element xt{block_shape, {matrix(x.transpose())}};
    if (span_closure(block_shape, {xe, xt}, cfg.tol).final_dim != d * d)
      return {false, {}};
    const polynomial px = minimal_polynomial(x, cfg.tol);
    lambda_choice lc;
    try {
      lc = select_lambda_skipping(px, px, cfg, true, lambda_skip);
    } catch (const error&) {
      return {false, {}};
    }
    const algebra_element canonical = swap_pair_generator(d, x, lc.lambda);
    algebra_element mini = transport_from_canonical(norm, canonical);
    if (!orbit_closure_ok(mini)) return {false, {}};
    return {true, std::move(mini)};
  };

  for (int t = 0; t < cfg.retry_budget; ++t) {
    const matrix x =
        random_gaussian(d, mix_seed(cfg.seed, 0xB000 + 64 * index + t));
    auto [ok, mini] = build_from_block(x, 0);
    if (ok) return mini;
  }

  // Deterministic fallback, independent of the seed.
  for (const double corner : {0.3, 0.7, 1.3}) {
    matrix x = deterministic_probe(d, corner);
    if (!swap) {
      // The probe generates against the canonical forms; conjugate it
      // into original coordinates.
      algebra_element canonical{mshape, {x}};
      algebra_element mini = transport_from_canonical(norm, canonical);
      if (well_invertible(mini.parts[0], cfg.tol) && orbit_closure_ok(mini))
        return mini;
    } else {
      auto [ok, mini] = build_from_block(x, 0);
      if (ok) return mini;
    }
  }
  raise(errc::retry_exhausted,
        "no generating element found for orbit " + std::to_string(index));
}

matrix support_matrix(const algebra_element& a, const std::vector<int>& blocks) {
  // Block diagonal matrix of the listed parts, for minimal polynomials.
  int n = 0;
  for (int b : blocks) n += static_cast<int>(a.parts[static_cast<size_t>(b)].rows());
  matrix m = matrix::Zero(n, n);
  int at = 0;
  for (int b : blocks) {
    const auto& p = a.parts[static_cast<size_t>(b)];
    const int d = static_cast<int>(p.rows());
    m.block(at, at, d, d) = p;
    at += d;
  }
  return m;
}

}  // namespace

synthesis_result synthesize_generator(const algebra_shape& shape,
                                      const involution_spec& spec,
                                      const synthesis_config& cfg_in) {
  synthesis_config cfg = cfg_in;
  if (cfg.lambda_scan.empty())
    cfg.lambda_scan = synthesis_config::defaults(cfg.seed).lambda_scan;
  validate_config(cfg);
  shape.validate();
  spec.validate(shape);

  synthesis_result result;
  result.involution = verify_involution(spec, shape, cfg.tol, cfg.verify_trials,
                                        mix_seed(cfg.seed, 0xA0));
  if (!result.involution.pass)
    raise(errc::axiom_failure,
          "involution axioms fail on random samples, worst residual " +
              std::to_string(result.involution.worst()));

  result.normalization = normalize_all(shape, spec, cfg.tol);
  for (const auto& norm : result.normalization.orbits)
    if (norm.type == block_involution_type::symplectic &&
        shape.blocks[norm.orbit.i] == 2)
      raise(errc::symplectic_rank2_obstruction,
            "block " + std::to_string(norm.orbit.i) +
                " carries the symplectic type on a size two block, where "
                "x and its involution image always commute");

  // One certified generator per orbit, then a scalar combination.
  std::vector<algebra_element> gens;
  gens.reserve(result.normalization.orbits.size());
  for (size_t k = 0; k < result.normalization.orbits.size(); ++k)
    gens.push_back(
        orbit_generator(shape, spec, result.normalization.orbits[k], k, cfg));

  auto embed_orbit = [&](const block_orbit& orbit, const algebra_element& mini) {
    algebra_element full = zero_element(shape);
    full.parts[static_cast<size_t>(orbit.i)] = mini.parts[0];
    if (orbit.is_pair())
      full.parts[static_cast<size_t>(*orbit.j)] = mini.parts[1];
    return full;
  };

  std::vector<int> support;
  auto extend_support = [&](const block_orbit& orbit) {
    support.push_back(orbit.i);
    if (orbit.is_pair()) support.push_back(*orbit.j);
    std::sort(support.begin(), support.end());
  };

  const auto& orbits = result.normalization.orbits;
  algebra_element partial = embed_orbit(orbits[0].orbit, gens[0]);
  extend_support(orbits[0].orbit);
  result.combination.push_back(cxd(1.0));
  int covered = orbits[0].orbit.dim_contribution(shape);

  for (size_t k = 1; k < orbits.size(); ++k) {
    const block_orbit& orbit = orbits[k].orbit;
    const polynomial p =
        minimal_polynomial(support_matrix(partial, support), cfg.tol);
    std::vector<int> gen_blocks{orbit.i};
    if (orbit.is_pair()) gen_blocks.push_back(*orbit.j);
    const algebra_element gen_full = embed_orbit(orbit, gens[k]);
    const polynomial q =
        minimal_polynomial(support_matrix(gen_full, gen_blocks), cfg.tol);

    covered += orbit.dim_contribution(shape);
    bool accepted = false;
    for (int t = 0; t < cfg.retry_budget && !accepted; ++t) {
      const lambda_choice mu = select_lambda_skipping(p, q, cfg, false, t);
      const algebra_element candidate = add(partial, scale(mu.lambda, gen_full));
      const algebra_element image = apply_involution(spec, candidate);
      if (span_closure(shape, {candidate, image}, cfg.tol).final_dim == covered) {
        partial = candidate;
        result.combination.push_back(mu.lambda);
        extend_support(orbit);
        accepted = true;
      }
    }
    if (!accepted)
      raise(errc::retry_exhausted,
            "no combination scalar joined orbit " + std::to_string(k));
  }

  result.certificate = certify_generation(shape, spec, partial, cfg.tol);
  if (!result.certificate.certified)
    raise(errc::numeric_failure, "final certificate failed after combination");
  result.element = std::move(partial);
  return result;
}

}  // namespace invogen
