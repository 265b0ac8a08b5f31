// Copyright (c) the invogen contributors.
// Licensed under the Apache License, Version 2.0.
#include <doctest.h>

#include "invogen/algebra.hpp"

using namespace invogen;

namespace {

const tolerance tol;

matrix unit(int n, int i, int j) {
  matrix e = matrix::Zero(n, n);
  e(i, j) = cxd(1.0);
  return e;
}

involution_spec transpose_spec(int n) {
  return involution_spec::from_orbits({fixed_orbit_spec{0, matrix::Identity(n, n)}});
}

involution_spec canonical_swap_spec(int n) {
  return involution_spec::from_orbits({swap_orbit_spec{
      0, 1, matrix::Identity(n, n), matrix::Identity(n, n)}});
}

}  // namespace

TEST_CASE("shape and element bookkeeping") {
  algebra_shape shape{{2, 3}};
  CHECK(shape.total_dim() == 13);
  CHECK(shape.block_count() == 2);

  CHECK_THROWS_AS(algebra_shape{{}}.validate(), error);
  CHECK_THROWS_AS((algebra_shape{{2, 0}}).validate(), error);

  const algebra_element one = identity_element(shape);
  CHECK(element_norm(one) == doctest::Approx(std::sqrt(5.0)));

  const cvec v = vectorize(one);
  CHECK(v.size() == 13);
  const algebra_element back = devectorize(shape, v);
  CHECK(element_norm(add(back, scale(cxd(-1.0), one))) == 0.0);
}

TEST_CASE("vectorization is row major per block") {
  algebra_shape shape{{2}};
  algebra_element e = zero_element(shape);
  e.parts[0] << cxd(1.0), cxd(2.0), cxd(3.0), cxd(4.0);
  const cvec v = vectorize(e);
  CHECK(v(0) == cxd(1.0));
  CHECK(v(1) == cxd(2.0));  // entry (0, 1) comes second
  CHECK(v(2) == cxd(3.0));
  CHECK(v(3) == cxd(4.0));
}

TEST_CASE("multiplication acts blockwise") {
  algebra_shape shape{{2, 2}};
  algebra_element a = zero_element(shape);
  a.parts[0] = unit(2, 0, 1);
  a.parts[1] = matrix::Identity(2, 2);
  const algebra_element sq = multiply(a, a);
  CHECK(sq.parts[0].norm() == 0.0);
  CHECK((sq.parts[1] - matrix::Identity(2, 2)).norm() == 0.0);
}

TEST_CASE("transpose involution on one block") {
  const involution_spec spec = transpose_spec(2);
  algebra_element e = embed_block(algebra_shape{{2}}, 0, unit(2, 0, 1));
  const algebra_element se = apply_involution(spec, e);
  CHECK((se.parts[0] - unit(2, 1, 0)).norm() < 1e-14);
}

TEST_CASE("conjugated transpose flips the sign of off-diagonal units") {
  // u = symplectic form on a 2 x 2 block: (u E01 u^{-1})^T = -E01
  const matrix j = symplectic_form(2);
  const involution_spec spec =
      involution_spec::from_orbits({fixed_orbit_spec{0, j}});
  const algebra_element e = embed_block(algebra_shape{{2}}, 0, unit(2, 0, 1));
  const algebra_element se = apply_involution(spec, e);
  CHECK((se.parts[0] + unit(2, 0, 1)).norm() < 1e-14);
}

TEST_CASE("canonical swap exchanges and transposes") {
  const involution_spec spec = canonical_swap_spec(2);
  algebra_shape shape{{2, 2}};
  algebra_element e = zero_element(shape);
  e.parts[0] = unit(2, 0, 1);
  const algebra_element se = apply_involution(spec, e);
  CHECK(se.parts[0].norm() == 0.0);
  CHECK((se.parts[1] - unit(2, 1, 0)).norm() < 1e-14);
}

TEST_CASE("involution axioms hold for valid specs") {
  const involution_report r1 =
      verify_involution(transpose_spec(3), algebra_shape{{3}}, tol);
  CHECK(r1.pass);
  CHECK(r1.worst() < 1e-12);

  const involution_report r2 =
      verify_involution(canonical_swap_spec(2), algebra_shape{{2, 2}}, tol);
  CHECK(r2.pass);

  // swap with h = c g^T stays involutive for any nonzero c
  const matrix g = random_conditioned(2, 21, 10.0);
  const involution_spec spec = involution_spec::from_orbits(
      {swap_orbit_spec{0, 1, g, matrix(cxd(2.0) * g.transpose())}});
  const involution_report r3 = verify_involution(spec, algebra_shape{{2, 2}}, tol);
  CHECK(r3.pass);
}

TEST_CASE("involution verification rejects broken specs") {
  // h not proportional to g^T: the double image is a genuine conjugation
  matrix h = matrix::Zero(2, 2);
  h(0, 0) = cxd(1.0);
  h(1, 1) = cxd(2.0);
  const involution_spec spec = involution_spec::from_orbits(
      {swap_orbit_spec{0, 1, matrix::Identity(2, 2), h}});
  const involution_report rep = verify_involution(spec, algebra_shape{{2, 2}}, tol);
  CHECK_FALSE(rep.pass);
  CHECK(rep.involutive_residual > 1e-3);

  // dense spec that is linear but not anti-multiplicative
  const involution_spec dense =
      involution_spec::from_dense(cxd(2.0) * matrix::Identity(4, 4));
  const involution_report rd = verify_involution(dense, algebra_shape{{2}}, tol);
  CHECK_FALSE(rd.pass);
}

TEST_CASE("dense round trip preserves the action") {
  const algebra_shape shape{{2, 2}};
  const involution_spec structured = canonical_swap_spec(2);
  const involution_spec dense =
      involution_spec::from_dense(dense_from_structured(structured, shape));

  for (int t = 0; t < 10; ++t) {
    const algebra_element a = random_element(shape, mix_seed(91, t));
    const algebra_element d1 = apply_involution(structured, a);
    const algebra_element d2 = apply_involution(dense, a);
    CHECK(element_norm(add(d1, scale(cxd(-1.0), d2))) / element_norm(a) < 1e-12);
  }

  const involution_report rep = verify_involution(dense, shape, tol);
  CHECK(rep.pass);
}

TEST_CASE("orbit pairing reads structured specs") {
  const involution_spec spec = involution_spec::from_orbits(
      {swap_orbit_spec{0, 2, matrix::Identity(2, 2), matrix::Identity(2, 2)},
       fixed_orbit_spec{1, matrix::Identity(3, 3)}});
  const orbit_pairing pairing = pair_orbits(spec, algebra_shape{{2, 3, 2}}, tol);
  REQUIRE(pairing.orbits.size() == 2);
  CHECK(pairing.orbits[0].i == 0);
  REQUIRE(pairing.orbits[0].is_pair());
  CHECK(*pairing.orbits[0].j == 2);
  CHECK(pairing.orbits[1].i == 1);
  CHECK_FALSE(pairing.orbits[1].is_pair());
  CHECK(pairing.orbits[0].dim_contribution(algebra_shape{{2, 3, 2}}) == 8);
}

TEST_CASE("orbit pairing recovers the permutation from dense specs") {
  const algebra_shape shape{{2, 2}};
  const matrix d = dense_from_structured(canonical_swap_spec(2), shape);
  const orbit_pairing pairing =
      pair_orbits(involution_spec::from_dense(d), shape, tol);
  REQUIRE(pairing.orbits.size() == 1);
  CHECK(pairing.orbits[0].is_pair());
  CHECK(pairing.orbits[0].i == 0);
  CHECK(*pairing.orbits[0].j == 1);
}

TEST_CASE("orbit pairing rejects non-permutations") {
  // this dense map scrambles the two block identities
  const algebra_shape shape{{2, 2}};
  matrix d = matrix::Identity(8, 8);
  d(0, 0) = cxd(0.5);
  d(0, 4) = cxd(0.5);
  try {
    pair_orbits(involution_spec::from_dense(d), shape, tol);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::not_a_permutation);
  }
}

TEST_CASE("spec validation catches structural mistakes") {
  const algebra_shape shape{{2, 3}};
  // swapped blocks of different sizes
  CHECK_THROWS_AS(
      involution_spec::from_orbits(
          {swap_orbit_spec{0, 1, matrix::Identity(2, 2), matrix::Identity(2, 2)}})
          .validate(shape),
      error);
  // orbit set must cover every block
  CHECK_THROWS_AS(involution_spec::from_orbits(
                      {fixed_orbit_spec{0, matrix::Identity(2, 2)}})
                      .validate(shape),
                  error);
  // matrix of the wrong size
  CHECK_THROWS_AS(involution_spec::from_orbits(
                      {fixed_orbit_spec{0, matrix::Identity(3, 3)},
                       fixed_orbit_spec{1, matrix::Identity(2, 2)}})
                      .validate(shape),
                  error);
}

TEST_CASE("restriction to orbits matches the full action") {
  const algebra_shape shape{{2, 2, 3}};
  const matrix g = random_conditioned(2, 31, 10.0);
  const involution_spec spec = involution_spec::from_orbits(
      {swap_orbit_spec{0, 1, g, matrix(g.transpose())},
       fixed_orbit_spec{2, matrix::Identity(3, 3)}});
  const orbit_pairing pairing = pair_orbits(spec, shape, tol);

  const block_orbit& pair = pairing.orbits[0];
  algebra_element mini = zero_element(orbit_shape(shape, pair));
  mini.parts[0] = random_gaussian(2, 41);
  mini.parts[1] = random_gaussian(2, 42);
  const algebra_element restricted = restrict_to_orbit(spec, shape, pair, mini);

  algebra_element full = zero_element(shape);
  full.parts[0] = mini.parts[0];
  full.parts[1] = mini.parts[1];
  const algebra_element image = apply_involution(spec, full);
  CHECK((restricted.parts[0] - image.parts[0]).norm() < 1e-13);
  CHECK((restricted.parts[1] - image.parts[1]).norm() < 1e-13);
}
