// Copyright (c) the invogen contributors.
// Licensed under the Apache License, Version 2.0.
#include "invogen/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace invogen {

namespace {

double coeff_scale(const std::vector<cxd>& c) {
  double m = 0.0;
  for (const auto& x : c) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

polynomial::polynomial(std::vector<cxd> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

polynomial polynomial::constant(cxd c) { return polynomial({c}); }

polynomial polynomial::monomial(int degree, cxd c) {
  if (degree < 0) raise(errc::invalid_argument, "monomial degree < 0");
  std::vector<cxd> v(static_cast<size_t>(degree) + 1, cxd(0.0));
  v.back() = c;
  return polynomial(std::move(v));
}

cxd polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return cxd(0.0);
  return coeffs_[static_cast<size_t>(i)];
}

cxd polynomial::leading() const {
  return coeffs_.empty() ? cxd(0.0) : coeffs_.back();
}

bool polynomial::is_monic(double eps) const {
  return !coeffs_.empty() && std::abs(coeffs_.back() - cxd(1.0)) <= eps;
}

cxd polynomial::eval(cxd x) const {
  cxd acc(0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

matrix polynomial::eval(const matrix& a) const {
  if (a.rows() != a.cols())
    raise(errc::invalid_argument, "polynomial eval needs a square matrix");
  const auto n = a.rows();
  matrix acc = matrix::Zero(n, n);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * a + *it * matrix::Identity(n, n);
  return acc;
}

polynomial& polynomial::normalize_monic() {
  if (is_zero()) raise(errc::invalid_argument, "cannot make zero polynomial monic");
  const cxd lead = coeffs_.back();
  if (std::abs(lead) == 0.0)
    raise(errc::invalid_argument, "zero leading coefficient");
  for (auto& c : coeffs_) c /= lead;
  coeffs_.back() = cxd(1.0);
  return *this;
}

void polynomial::trim() {
  while (!coeffs_.empty() && std::abs(coeffs_.back()) == 0.0)
    coeffs_.pop_back();
}

polynomial operator+(const polynomial& p, const polynomial& q) {
  std::vector<cxd> out(std::max(p.coeffs().size(), q.coeffs().size()), cxd(0.0));
  for (size_t i = 0; i < p.coeffs().size(); ++i) out[i] += p.coeffs()[i];
  for (size_t i = 0; i < q.coeffs().size(); ++i) out[i] += q.coeffs()[i];
  return polynomial(std::move(out));
}

polynomial operator-(const polynomial& p, const polynomial& q) {
  return p + (cxd(-1.0) * q);
}

polynomial operator*(const polynomial& p, const polynomial& q) {
  if (p.is_zero() || q.is_zero()) return polynomial();
  std::vector<cxd> out(p.coeffs().size() + q.coeffs().size() - 1, cxd(0.0));
  for (size_t i = 0; i < p.coeffs().size(); ++i)
    for (size_t j = 0; j < q.coeffs().size(); ++j)
      out[i + j] += p.coeffs()[i] * q.coeffs()[j];
  return polynomial(std::move(out));
}

polynomial operator*(cxd c, const polynomial& p) {
  std::vector<cxd> out = p.coeffs();
  for (auto& x : out) x *= c;
  return polynomial(std::move(out));
}

polynomial shift_up(const polynomial& p) {
  if (p.is_zero()) return polynomial();
  std::vector<cxd> out(p.coeffs().size() + 1, cxd(0.0));
  std::copy(p.coeffs().begin(), p.coeffs().end(), out.begin() + 1);
  return polynomial(std::move(out));
}

polynomial scale_roots_monic(const polynomial& q, cxd lambda) {
  if (q.degree() < 0)
    raise(errc::invalid_argument, "scale_roots_monic of zero polynomial");
  if (std::abs(lambda) == 0.0)
    raise(errc::invalid_argument, "scale_roots_monic with lambda = 0");
  const int d = q.degree();
  std::vector<cxd> out(static_cast<size_t>(d) + 1);
  // lambda^d q(X/lambda): coefficient j picks up lambda^(d-j).
  cxd pw(1.0);
  for (int j = d; j >= 0; --j) {
    out[static_cast<size_t>(j)] = q.coeff(j) * pw;
    pw *= lambda;
  }
  polynomial r(std::move(out));
  r.normalize_monic();
  return r;
}

std::vector<cxd> roots(const polynomial& p_in) {
  if (p_in.degree() < 1)
    raise(errc::invalid_argument, "roots of a constant polynomial");
  polynomial p = p_in;
  p.normalize_monic();
  const int d = p.degree();

  // Scale the variable so coefficients stay O(1); improves the companion
  // eigenproblem for badly scaled inputs.
  double s = 0.0;
  for (int j = 0; j < d; ++j) {
    const double cj = std::abs(p.coeff(j));
    if (cj > 0.0) s = std::max(s, std::pow(cj, 1.0 / (d - j)));
  }
  if (s == 0.0) s = 1.0;

  // Coefficients of p(s Y) / s^d: coefficient j shrinks by s^(d - j), so
  // every scaled coefficient has magnitude at most one.
  std::vector<cxd> cs(static_cast<size_t>(d) + 1);
  double pw = 1.0;
  for (int j = d; j >= 0; --j) {
    cs[static_cast<size_t>(j)] = p.coeff(j) * pw;
    pw /= s;
  }
  polynomial ps{cs};
  ps.normalize_monic();

  matrix companion = matrix::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = cxd(1.0);
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -ps.coeff(i);

  Eigen::ComplexEigenSolver<matrix> es(companion, false);
  std::vector<cxd> out(static_cast<size_t>(d));
  const polynomial dp = [&] {
    std::vector<cxd> der(static_cast<size_t>(d));
    for (int j = 1; j <= d; ++j)
      der[static_cast<size_t>(j - 1)] = ps.coeff(j) * cxd(double(j));
    return polynomial(std::move(der));
  }();
  for (int i = 0; i < d; ++i) {
    cxd z = es.eigenvalues()(i);
    // One Newton step tightens eigenvalues of the companion matrix.
    for (int it = 0; it < 2; ++it) {
      const cxd fv = ps.eval(z);
      const cxd dv = dp.eval(z);
      if (std::abs(dv) < 1e-300) break;
      const cxd step = fv / dv;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      if (std::abs(step) > 0.5 * (1.0 + std::abs(z))) break;
      z -= step;
    }
    out[static_cast<size_t>(i)] = z * s;
  }
  std::sort(out.begin(), out.end(), [](const cxd& a, const cxd& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

namespace {

// Columns of the Sylvester-structured matrix: X^j * p for j < deg(q)
// followed by X^j * q for j < deg(p), written in the monomial basis of
// degree < deg(p) + deg(q).
matrix sylvester_matrix(const polynomial& p, const polynomial& q) {
  const int dp = p.degree();
  const int dq = q.degree();
  if (dp < 1 || dq < 1)
    raise(errc::invalid_argument, "sylvester matrix needs positive degrees");
  const int n = dp + dq;
  matrix m = matrix::Zero(n, n);
  for (int j = 0; j < dq; ++j)
    for (int i = 0; i <= dp; ++i) m(i + j, j) = p.coeff(i);
  for (int j = 0; j < dp; ++j)
    for (int i = 0; i <= dq; ++i) m(i + j, dq + j) = q.coeff(i);
  return m;
}

}  // namespace

cxd sylvester_resultant(const polynomial& p, const polynomial& q) {
  return sylvester_matrix(p, q).partialPivLu().determinant();
}

bezout_pair bezout_identity(const polynomial& p, const polynomial& q,
                            const tolerance& tol) {
  tol.validate();
  const int dp = p.degree();
  const int dq = q.degree();
  if (dp < 1 || dq < 1)
    raise(errc::invalid_argument, "bezout_identity needs positive degrees");
  const int n = dp + dq;
  const matrix m = sylvester_matrix(p, q);

  Eigen::ColPivHouseholderQR<matrix> qr(m);
  qr.setThreshold(tol.rank_rel);
  if (qr.rank() < n)
    raise(errc::not_coprime, "polynomials share a root within tolerance");

  cvec rhs = cvec::Zero(n);
  rhs(0) = cxd(1.0);
  const cvec sol = qr.solve(rhs);

  const double scale =
      coeff_scale(std::vector<cxd>(sol.data(), sol.data() + sol.size())) *
      m.norm();
  const double res = (m * sol - rhs).norm();
  if (res > tol.residual_rel * std::max(1.0, scale))
    raise(errc::not_coprime, "bezout system residual out of tolerance");

  std::vector<cxd> ac(sol.data(), sol.data() + dq);
  std::vector<cxd> bc(sol.data() + dq, sol.data() + n);
  return bezout_pair{polynomial(std::move(ac)), polynomial(std::move(bc)), res};
}

}  // namespace invogen
