// Copyright (c) the invogen contributors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <vector>

#include "invogen/types.hpp"

namespace invogen {

// Dense univariate polynomial over C, coefficients stored lowest degree
// first.  The zero polynomial has an empty coefficient vector.
class polynomial {
 public:
  polynomial() = default;
  explicit polynomial(std::vector<cxd> coeffs);

  static polynomial constant(cxd c);
  static polynomial monomial(int degree, cxd c = cxd(1.0, 0.0));

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<cxd>& coeffs() const { return coeffs_; }

  // Coefficient of X^i, zero beyond the stored range.
  cxd coeff(int i) const;
  cxd leading() const;
  bool is_monic(double eps = 1e-12) const;

  cxd eval(cxd x) const;
  // Horner evaluation with a square matrix argument.
  matrix eval(const matrix& a) const;

  polynomial& normalize_monic();

 private:
  void trim();

  std::vector<cxd> coeffs_;
};

polynomial operator+(const polynomial& p, const polynomial& q);
polynomial operator-(const polynomial& p, const polynomial& q);
polynomial operator*(const polynomial& p, const polynomial& q);
polynomial operator*(cxd c, const polynomial& p);

// X * p, i.e. all coefficients shifted up by one degree.
polynomial shift_up(const polynomial& p);

// Monic polynomial whose roots are lambda times the roots of q;
// equivalently lambda^deg(q) * q(X / lambda) for monic q.
polynomial scale_roots_monic(const polynomial& q, cxd lambda);

// All complex roots, via the balanced companion matrix followed by one
// Newton correction per root.  Input must have degree >= 1.
std::vector<cxd> roots(const polynomial& p);

// Determinant of the Sylvester matrix of p and q.  Zero exactly when the
// two polynomials share a root (up to sign conventions the classical
// resultant; only the magnitude is used by callers).
cxd sylvester_resultant(const polynomial& p, const polynomial& q);

// alpha * p + beta * q = 1 for coprime p and q, solved through the square
// Sylvester-structured linear system.  deg(alpha) < deg(q) and
// deg(beta) < deg(p).  Raises not_coprime when the system is rank
// deficient or the residual is out of tolerance.
struct bezout_pair {
  polynomial alpha;
  polynomial beta;
  double residual = 0.0;
};

bezout_pair bezout_identity(const polynomial& p, const polynomial& q,
                            const tolerance& tol);

}  // namespace invogen
