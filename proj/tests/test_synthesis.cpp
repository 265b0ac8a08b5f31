// Copyright (c) the invogen contributors.
// Licensed under the Apache License, Version 2.0.
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "invogen/synthesis.hpp"
#include "oracle.hpp"

using namespace invogen;

namespace {

const tolerance tol;

polynomial from_roots(const std::vector<cxd>& rs) {
  polynomial p = polynomial::constant(cxd(1.0));
  for (cxd r : rs) p = p * polynomial({-r, cxd(1.0)});
  return p;
}

errc thrown_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return errc::numeric_failure;
}

matrix block_diag(const matrix& a, const matrix& b) {
  const int n = static_cast<int>(a.rows());
  const int m = static_cast<int>(b.rows());
  matrix out = matrix::Zero(n + m, n + m);
  out.topLeftCorner(n, n) = a;
  out.bottomRightCorner(m, m) = b;
  return out;
}

}  // namespace

TEST_CASE("explicit transpose pairs have the pinned sparsity") {
  const auto [x, y] = explicit_transpose_pair(3);
  CHECK(x(0, 1) == cxd(1.0));
  CHECK(x(1, 2) == cxd(1.0));
  CHECK(x.norm() == doctest::Approx(std::sqrt(2.0)));
  CHECK(y(1, 0) == cxd(1.0));
  CHECK(y(2, 1) == cxd(1.0));

  const auto [x1, y1] = explicit_transpose_pair(1);
  CHECK(x1.norm() == 0.0);
  CHECK(y1.norm() == 0.0);

  const auto [xs, ys] = explicit_transpose_pair(
      3, {cxd(2.0), cxd(3.0)}, {cxd(5.0), cxd(7.0)});
  CHECK(xs(0, 1) == cxd(2.0));
  CHECK(xs(1, 2) == cxd(3.0));
  CHECK(ys(1, 0) == cxd(5.0));
  CHECK(ys(2, 1) == cxd(7.0));

  CHECK(thrown_code([] {
          explicit_transpose_pair(3, {cxd(0.0), cxd(1.0)}, {cxd(1.0), cxd(1.0)});
        }) == errc::zero_entry);
  CHECK(thrown_code([] { explicit_transpose_pair(3, {cxd(1.0)}, {cxd(1.0)}); }) ==
        errc::size_mismatch);
}

TEST_CASE("explicit transpose pairs generate the full matrix block") {
  for (int n = 2; n <= 6; ++n) {
    const auto [x, y] = explicit_transpose_pair(n);
    const algebra_shape shape{{n}};
    const auto report = span_closure(
        shape, {embed_block(shape, 0, x), embed_block(shape, 0, y)}, tol);
    CHECK(report.generated);
    CHECK(report.final_dim == n * n);
    CHECK(report.rounds <= n + 1);

    const int oracle = testing::word_span_rank(
        shape, {embed_block(shape, 0, x), embed_block(shape, 0, y)}, tol,
        2 * n + 2);
    CHECK(oracle == n * n);
  }
}

TEST_CASE("the symplectic pair variant generates but is not conjugate") {
  const auto rep2 = explicit_symplectic_pair(2, tol);
  CHECK(rep2.closure.generated);
  CHECK(rep2.closure.final_dim == 4);
  CHECK(rep2.y(1, 0) == cxd(-1.0));
  // x and y fail to be symplectic images of each other by a fixed gap.
  CHECK(rep2.conj_residual_xy == doctest::Approx(std::sqrt(2.0)));

  const auto rep4 = explicit_symplectic_pair(4, tol);
  CHECK(rep4.closure.generated);
  CHECK(rep4.closure.final_dim == 16);
  CHECK(rep4.conj_residual_xy == doctest::Approx(std::sqrt(2.0 / 3.0)));
  CHECK(rep4.conj_residual_yx > 0.1);

  CHECK(thrown_code([] { explicit_symplectic_pair(3, tol); }) ==
        errc::odd_dimension);
}

TEST_CASE("lambda selection skips every root quotient") {
  synthesis_config cfg = synthesis_config::defaults();

  SUBCASE("single shared root") {
    const polynomial p = from_roots({cxd(1.0)});
    const auto choice = select_lambda(p, p, cfg);
    CHECK(choice.lambda == cxd(2.0));
    REQUIRE(choice.excluded_quotients.size() == 1);
    CHECK(std::abs(choice.excluded_quotients[0] - cxd(1.0)) <= 1e-12);
    CHECK(choice.quotient_margin == doctest::Approx(1.0));
    CHECK(choice.certificate > cfg.resultant_threshold);
  }

  SUBCASE("all quotients of two factored polynomials are excluded") {
    const polynomial p = from_roots({cxd(1.0), cxd(2.0)});
    const polynomial q = from_roots({cxd(1.0), cxd(3.0)});
    const auto choice = select_lambda(p, q, cfg);
    // Quotients 1/1, 1/3, 2/1, 2/3; the scan accepts 3.
    REQUIRE(choice.excluded_quotients.size() == 4);
    std::vector<double> mags;
    for (cxd z : choice.excluded_quotients) mags.push_back(std::abs(z));
    std::sort(mags.begin(), mags.end());
    CHECK(mags[0] == doctest::Approx(1.0 / 3.0));
    CHECK(mags[1] == doctest::Approx(2.0 / 3.0));
    CHECK(mags[2] == doctest::Approx(1.0));
    CHECK(mags[3] == doctest::Approx(2.0));
    CHECK(choice.lambda == cxd(3.0));
  }

  SUBCASE("the scan order is respected") {
    synthesis_config custom = cfg;
    custom.lambda_scan = {cxd(5.0), cxd(2.0)};
    const auto choice = select_lambda(from_roots({cxd(1.0)}),
                                      from_roots({cxd(1.0)}), custom);
    CHECK(choice.lambda == cxd(5.0));
  }

  SUBCASE("the inverse margin rejects reciprocals of quotients") {
    synthesis_config custom = cfg;
    custom.lambda_scan = {cxd(0.5), cxd(5.0)};
    const polynomial p = from_roots({cxd(2.0)});
    const polynomial q = from_roots({cxd(1.0)});
    // Quotient set is {2}; 0.5 is fine directly but its inverse hits 2.
    const auto plain = select_lambda(p, q, custom, false);
    CHECK(plain.lambda == cxd(0.5));
    const auto guarded = select_lambda(p, q, custom, true);
    CHECK(guarded.lambda == cxd(5.0));
  }

  SUBCASE("an exhausted scan raises") {
    synthesis_config custom = cfg;
    custom.lambda_scan = {cxd(1.0)};
    CHECK(thrown_code([&] {
            select_lambda(from_roots({cxd(1.0)}), from_roots({cxd(1.0)}),
                          custom);
          }) == errc::lambda_exhausted);
  }
}

TEST_CASE("the splitting polynomial has the pinned coefficients") {
  const polynomial p = from_roots({cxd(1.0)});
  const polynomial s = splitting_polynomial(p, p, cxd(2.0), tol);
  // alpha (X - 1) + beta (X - 2) = 1 gives beta = -1, s = X (2 - X).
  REQUIRE(s.degree() == 2);
  CHECK(std::abs(s.coeff(0) - cxd(0.0)) <= 1e-12);
  CHECK(std::abs(s.coeff(1) - cxd(2.0)) <= 1e-12);
  CHECK(std::abs(s.coeff(2) - cxd(-1.0)) <= 1e-12);
}

TEST_CASE("the splitting polynomial projects onto the first summand") {
  synthesis_config cfg = synthesis_config::defaults();
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const int n = 2 + static_cast<int>(seed % 3);
    const int m = 2 + static_cast<int>((seed / 2) % 3);
    const matrix a = random_gaussian(n, mix_seed(seed, 1));
    const matrix b = random_gaussian(m, mix_seed(seed, 2));
    const polynomial p = minimal_polynomial(a, tol);
    const polynomial q = minimal_polynomial(b, tol);
    const auto choice = select_lambda(p, q, cfg);
    const polynomial s = splitting_polynomial(p, q, choice.lambda, tol);

    const matrix big = block_diag(a, choice.lambda * b);
    const matrix image = s.eval(big);
    double scale = 0.0;
    const double norm_big = std::max(1.0, operator_norm(big));
    double power = 1.0;
    for (int j = 0; j <= s.degree(); ++j, power *= norm_big)
      scale += std::abs(s.coeff(j)) * power;
    const matrix expected = block_diag(a, matrix::Zero(m, m));
    CHECK((image - expected).norm() <= 1e-8 * scale);
  }
}

TEST_CASE("swap pair generators fill the two block algebra") {
  synthesis_config cfg = synthesis_config::defaults();
  const int n = 2;
  const matrix x = random_gaussian(n, 3);
  const polynomial p = minimal_polynomial(x, tol);
  const auto choice = select_lambda(p, p, cfg, true);
  const algebra_element a = swap_pair_generator(n, x, choice.lambda);

  const algebra_shape shape{{n, n}};
  const involution_spec swap = involution_spec::from_orbits(
      {swap_orbit_spec{0, 1, matrix::Identity(n, n), matrix::Identity(n, n)}});
  const auto cert = certify_generation(shape, swap, a, tol);
  CHECK(cert.certified);
  CHECK(cert.closure.final_dim == 2 * n * n);

  // lambda = 1 collapses the pair onto a diagonal copy.
  const auto degenerate = certify_generation(
      shape, swap, swap_pair_generator(n, x, cxd(1.0)), tol);
  CHECK_FALSE(degenerate.certified);
  CHECK(degenerate.closure.final_dim < 2 * n * n);
}

TEST_CASE("synthesis covers single blocks of every simple type") {
  synthesis_config cfg = synthesis_config::defaults();

  SUBCASE("a one dimensional block") {
    const algebra_shape shape{{1}};
    const involution_spec spec = involution_spec::from_orbits(
        {fixed_orbit_spec{0, matrix::Identity(1, 1)}});
    const auto result = synthesize_generator(shape, spec, cfg);
    CHECK(result.certificate.certified);
    CHECK(result.certificate.closure.final_dim == 1);
  }

  SUBCASE("transpose on a 3 x 3 block") {
    const algebra_shape shape{{3}};
    const involution_spec spec = involution_spec::from_orbits(
        {fixed_orbit_spec{0, matrix::Identity(3, 3)}});
    const auto result = synthesize_generator(shape, spec, cfg);
    CHECK(result.certificate.certified);
    CHECK(result.certificate.closure.final_dim == 9);
    CHECK(result.involution.pass);
    REQUIRE(result.normalization.orbits.size() == 1);
    CHECK(result.normalization.orbits[0].type ==
          block_involution_type::orthogonal);
  }

  SUBCASE("a symplectic 4 x 4 block") {
    const algebra_shape shape{{4}};
    const involution_spec spec =
        involution_spec::from_orbits({fixed_orbit_spec{0, symplectic_form(4)}});
    const auto result = synthesize_generator(shape, spec, cfg);
    CHECK(result.certificate.certified);
    CHECK(result.certificate.closure.final_dim == 16);
    CHECK(result.normalization.orbits[0].type ==
          block_involution_type::symplectic);
  }

  SUBCASE("an exchanged pair of 2 x 2 blocks") {
    const algebra_shape shape{{2, 2}};
    const involution_spec spec = involution_spec::from_orbits({swap_orbit_spec{
        0, 1, matrix::Identity(2, 2), matrix::Identity(2, 2)}});
    const auto result = synthesize_generator(shape, spec, cfg);
    CHECK(result.certificate.certified);
    CHECK(result.certificate.closure.final_dim == 8);
    CHECK(result.normalization.orbits[0].type ==
          block_involution_type::swap_pair);
  }
}

TEST_CASE("a symplectic block of size two admits no generator") {
  const algebra_shape shape{{2}};
  const involution_spec spec =
      involution_spec::from_orbits({fixed_orbit_spec{0, symplectic_form(2)}});
  CHECK(thrown_code([&] {
          synthesize_generator(shape, spec, synthesis_config::defaults());
        }) == errc::symplectic_rank2_obstruction);
}

TEST_CASE("synthesis combines mixed orbits into one generator") {
  const algebra_shape shape{{2, 2, 3, 4}};
  const matrix g = random_conditioned(2, 31, 20.0);
  const matrix w = random_conditioned(4, 32, 20.0);
  const involution_spec spec = involution_spec::from_orbits({
      swap_orbit_spec{0, 1, g, cxd(-1.5) * g.transpose()},
      fixed_orbit_spec{2, random_conditioned(3, 33, 20.0).transpose() *
                              random_conditioned(3, 33, 20.0)},
      fixed_orbit_spec{3, w.transpose() * symplectic_form(4) * w},
  });

  const auto result = synthesize_generator(shape, spec, synthesis_config::defaults());
  CHECK(result.certificate.certified);
  CHECK(result.certificate.closure.final_dim == shape.total_dim());
  CHECK(result.combination.size() == 3);
  CHECK(result.certificate.involution_residual <= 1e-8);

  SUBCASE("the run is deterministic") {
    const auto again =
        synthesize_generator(shape, spec, synthesis_config::defaults());
    CHECK(element_norm(add(result.element, scale(cxd(-1.0), again.element))) ==
          0.0);
  }

  SUBCASE("a different seed still certifies") {
    const auto other =
        synthesize_generator(shape, spec, synthesis_config::defaults(99));
    CHECK(other.certificate.certified);
  }
}

TEST_CASE("broken axioms are reported before any synthesis work") {
  const algebra_shape shape{{2, 2}};
  matrix h(2, 2);
  h << cxd(1.0), cxd(0.0), cxd(0.0), cxd(2.0);
  const involution_spec spec = involution_spec::from_orbits(
      {swap_orbit_spec{0, 1, matrix::Identity(2, 2), h}});
  CHECK(thrown_code([&] {
          synthesize_generator(shape, spec, synthesis_config::defaults());
        }) == errc::axiom_failure);
}

TEST_CASE("single random elements stay inside a proper subalgebra") {
  // A lone element generates a commutative subalgebra, never a full block.
  for (int n = 2; n <= 4; ++n) {
    const algebra_shape shape{{n}};
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto report = span_closure(
          shape, {random_element(shape, mix_seed(seed, n))}, tol);
      CHECK(report.final_dim <= n);
      CHECK_FALSE(report.generated);
    }
  }
}
