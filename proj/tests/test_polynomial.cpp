// Copyright (c) the invogen contributors.
// Licensed under the Apache License, Version 2.0.
#include <doctest.h>

#include <cmath>

#include "invogen/polynomial.hpp"

using namespace invogen;

namespace {

polynomial from_roots(const std::vector<cxd>& rs) {
  polynomial p = polynomial::constant(cxd(1.0));
  for (const cxd& r : rs)
    p = p * polynomial({-r, cxd(1.0)});
  return p;
}

}  // namespace

TEST_CASE("degree and coefficient access") {
  polynomial z;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(z.coeff(0) == cxd(0.0));

  polynomial p({cxd(1.0), cxd(0.0), cxd(3.0)});
  CHECK(p.degree() == 2);
  CHECK(p.coeff(0) == cxd(1.0));
  CHECK(p.coeff(2) == cxd(3.0));
  CHECK(p.coeff(5) == cxd(0.0));

  // trailing zero coefficients are trimmed
  polynomial q({cxd(2.0), cxd(0.0), cxd(0.0)});
  CHECK(q.degree() == 0);
}

TEST_CASE("arithmetic") {
  polynomial p({cxd(1.0), cxd(1.0)});        // 1 + X
  polynomial q({cxd(-1.0), cxd(1.0)});       // -1 + X
  polynomial s = p + q;
  CHECK(s.degree() == 1);
  CHECK(s.coeff(0) == cxd(0.0));
  CHECK(s.coeff(1) == cxd(2.0));

  polynomial m = p * q;                      // X^2 - 1
  CHECK(m.degree() == 2);
  CHECK(m.coeff(0) == cxd(-1.0));
  CHECK(m.coeff(1) == cxd(0.0));
  CHECK(m.coeff(2) == cxd(1.0));

  // cancellation drops the degree
  polynomial d = p - p;
  CHECK(d.is_zero());

  polynomial sh = shift_up(p);               // X + X^2
  CHECK(sh.degree() == 2);
  CHECK(sh.coeff(0) == cxd(0.0));
  CHECK(sh.coeff(1) == cxd(1.0));
}

TEST_CASE("evaluation on scalars and matrices") {
  polynomial p({cxd(2.0), cxd(-3.0), cxd(1.0)});  // (X-1)(X-2)
  CHECK(std::abs(p.eval(cxd(1.0))) < 1e-15);
  CHECK(std::abs(p.eval(cxd(2.0))) < 1e-15);
  CHECK(std::abs(p.eval(cxd(0.0)) - cxd(2.0)) < 1e-15);

  matrix a(2, 2);
  a << cxd(1.0), cxd(5.0), cxd(0.0), cxd(2.0);
  const matrix pa = p.eval(a);
  CHECK(pa.norm() < 1e-12);  // a has eigenvalues 1 and 2

  const matrix ia = polynomial({cxd(1.0)}).eval(a);
  CHECK((ia - matrix::Identity(2, 2)).norm() == 0.0);
}

TEST_CASE("root scaling keeps monicity and moves roots") {
  polynomial q = from_roots({cxd(1.0), cxd(3.0)});
  polynomial qs = scale_roots_monic(q, cxd(2.0));
  CHECK(qs.is_monic());
  CHECK(std::abs(qs.eval(cxd(2.0))) < 1e-12);
  CHECK(std::abs(qs.eval(cxd(6.0))) < 1e-12);

  CHECK_THROWS_AS(scale_roots_monic(q, cxd(0.0)), error);
}

TEST_CASE("roots of small polynomials") {
  const auto rs = roots(from_roots({cxd(1.0), cxd(2.0)}));
  REQUIRE(rs.size() == 2);
  CHECK(std::abs(rs[0] - cxd(1.0)) < 1e-10);
  CHECK(std::abs(rs[1] - cxd(2.0)) < 1e-10);

  // complex pair, sorted by real part then imaginary part
  const auto ri = roots(polynomial({cxd(1.0), cxd(0.0), cxd(1.0)}));
  REQUIRE(ri.size() == 2);
  CHECK(std::abs(ri[0] - cxd(0.0, -1.0)) < 1e-10);
  CHECK(std::abs(ri[1] - cxd(0.0, 1.0)) < 1e-10);

  CHECK_THROWS_AS(roots(polynomial::constant(cxd(3.0))), error);
}

TEST_CASE("roots survive bad scaling") {
  // (X - 1e-4)(X - 1e4): coefficients span eight orders of magnitude
  const auto rs = roots(from_roots({cxd(1e-4), cxd(1e4)}));
  REQUIRE(rs.size() == 2);
  CHECK(std::abs(rs[0] - cxd(1e-4)) < 1e-10);
  CHECK(std::abs(rs[1] - cxd(1e4)) / 1e4 < 1e-10);
}

TEST_CASE("resultant magnitude detects shared roots") {
  polynomial p = from_roots({cxd(1.0)});
  polynomial q = from_roots({cxd(2.0)});
  // distinct roots: magnitude equals the root gap for linear factors
  CHECK(std::abs(sylvester_resultant(p, q)) == doctest::Approx(1.0));

  polynomial shared = from_roots({cxd(2.0), cxd(5.0)});
  polynomial other = from_roots({cxd(2.0), cxd(7.0)});
  CHECK(std::abs(sylvester_resultant(shared, other)) < 1e-12);

  // values match the product formula prod (rho_i - sigma_j)
  polynomial a = from_roots({cxd(1.0), cxd(2.0)});
  polynomial b = from_roots({cxd(4.0), cxd(5.0)});
  const double expect = std::abs((1.0 - 4.0) * (1.0 - 5.0) * (2.0 - 4.0) *
                                 (2.0 - 5.0));
  CHECK(std::abs(sylvester_resultant(a, b)) == doctest::Approx(expect));
}

TEST_CASE("bezout identity on coprime inputs") {
  tolerance tol;
  polynomial p = from_roots({cxd(1.0)});
  polynomial q = from_roots({cxd(2.0)});
  const bezout_pair bz = bezout_identity(p, q, tol);
  const polynomial one = bz.alpha * p + bz.beta * q;
  CHECK(std::abs(one.coeff(0) - cxd(1.0)) < 1e-12);
  CHECK(std::abs(one.coeff(1)) < 1e-12);

  // frozen cofactor for the standard example: beta = -1, so
  // beta * q = 2 - X
  CHECK(std::abs(bz.beta.coeff(0) - cxd(-1.0)) < 1e-12);

  polynomial shared = from_roots({cxd(3.0), cxd(1.0)});
  polynomial collide = from_roots({cxd(3.0), cxd(9.0)});
  CHECK_THROWS_AS(bezout_identity(shared, collide, tol), error);
}

TEST_CASE("bezout identity at larger degrees") {
  tolerance tol;
  polynomial p = from_roots({cxd(1.0), cxd(2.0), cxd(0.0, 1.0)});
  polynomial q = from_roots({cxd(-1.0), cxd(4.0), cxd(0.5, -0.5)});
  const bezout_pair bz = bezout_identity(p, q, tol);
  CHECK(bz.alpha.degree() < q.degree());
  CHECK(bz.beta.degree() < p.degree());
  const polynomial one = bz.alpha * p + bz.beta * q;
  CHECK(std::abs(one.coeff(0) - cxd(1.0)) < 1e-10);
  for (int i = 1; i <= one.degree(); ++i)
    CHECK(std::abs(one.coeff(i)) < 1e-10);
}
