// Copyright (c) the invogen contributors.
// Licensed under the Apache License, Version 2.0.
#include "invogen/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

namespace invogen {

namespace {

void require_square(const matrix& a, const char* who) {
  if (a.rows() != a.cols() || a.rows() < 1)
    raise(errc::invalid_argument, std::string(who) + " needs a nonempty square matrix");
}

Eigen::JacobiSVD<matrix> thin_svd(const matrix& m, unsigned options) {
  return Eigen::JacobiSVD<matrix>(m, options);
}

}  // namespace

rank_basis rank_and_basis(const matrix& columns, const tolerance& tol) {
  tol.validate();
  if (columns.cols() == 0 || columns.rows() == 0)
    return rank_basis{0, matrix::Zero(columns.rows(), 0)};
  auto svd = thin_svd(columns, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv(0) : 0.0;
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol.rank_rel * smax && sv(i) > 0.0) ++r;
  return rank_basis{r, svd.matrixU().leftCols(r)};
}

rank_basis rank_and_basis(const std::vector<cvec>& vectors, const tolerance& tol) {
  if (vectors.empty()) return rank_basis{0, matrix::Zero(0, 0)};
  const auto n = vectors.front().size();
  matrix m(n, static_cast<Eigen::Index>(vectors.size()));
  for (size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != n)
      raise(errc::size_mismatch, "rank_and_basis vectors of unequal length");
    m.col(static_cast<Eigen::Index>(j)) = vectors[j];
  }
  return rank_and_basis(m, tol);
}

double operator_norm(const matrix& a) {
  if (a.size() == 0) return 0.0;
  return thin_svd(a, 0).singularValues()(0);
}

std::pair<double, double> singular_extremes(const matrix& a) {
  require_square(a, "singular_extremes");
  const Eigen::VectorXd sv = thin_svd(a, 0).singularValues();
  return {sv(sv.size() - 1), sv(0)};
}

polynomial minimal_polynomial(const matrix& a, const tolerance& tol) {
  tol.validate();
  require_square(a, "minimal_polynomial");
  const int n = static_cast<int>(a.rows());
  const double s = operator_norm(a);
  if (s == 0.0) return polynomial({cxd(0.0), cxd(1.0)});

  const matrix b = a / s;
  std::vector<cvec> krylov;
  krylov.reserve(static_cast<size_t>(n) + 1);
  matrix pw = matrix::Identity(n, n);
  for (int k = 0; k <= n; ++k) {
    krylov.push_back(Eigen::Map<const cvec>(pw.data(), pw.size()));
    if (k < n) pw = pw * b;
  }

  int d = n;
  for (int k = 1; k <= n; ++k) {
    std::vector<cvec> head(krylov.begin(), krylov.begin() + k + 1);
    if (rank_and_basis(head, tol).rank <= k) {
      d = k;
      break;
    }
  }

  matrix lhs(n * n, d);
  for (int k = 0; k < d; ++k) lhs.col(k) = krylov[static_cast<size_t>(k)];
  const cvec c = lhs.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV)
                     .solve(krylov[static_cast<size_t>(d)]);

  // Undo the normalization: p(X) = s^d pb(X/s) stays monic.
  std::vector<cxd> coeffs(static_cast<size_t>(d) + 1, cxd(0.0));
  double pw_s = std::pow(s, d);
  for (int j = 0; j < d; ++j)
    coeffs[static_cast<size_t>(j)] = -c(j) * pw_s / std::pow(s, j);
  coeffs[static_cast<size_t>(d)] = cxd(1.0);
  return polynomial(std::move(coeffs));
}

matrix symplectic_form(int n) {
  if (n < 2 || n % 2 != 0)
    raise(errc::odd_dimension, "symplectic form needs even positive size");
  const int k = n / 2;
  matrix j = matrix::Zero(n, n);
  j.topRightCorner(k, k) = matrix::Identity(k, k);
  j.bottomLeftCorner(k, k) = -matrix::Identity(k, k);
  return j;
}

matrix takagi_symmetric(const matrix& u_in, const tolerance& tol) {
  tol.validate();
  require_square(u_in, "takagi_symmetric");
  const int n = static_cast<int>(u_in.rows());
  const double scale = u_in.norm();
  if (scale == 0.0) raise(errc::singular_matrix, "takagi_symmetric of zero matrix");
  if ((u_in - u_in.transpose()).norm() > tol.residual_rel * scale)
    raise(errc::not_symmetric, "takagi_symmetric input is not symmetric");
  const matrix u = 0.5 * (u_in + u_in.transpose());

  // Real embedding: for u = X + iY the symmetric real matrix
  // [[X, Y], [Y, -X]] has eigenpairs (+sigma, [p; q]) with w = p + iq
  // satisfying u conj(w) = sigma w.  The top-n eigenvectors assemble a
  // unitary W with W^T u W diagonal and nonnegative.
  Eigen::MatrixXd m(2 * n, 2 * n);
  m.topLeftCorner(n, n) = u.real();
  m.topRightCorner(n, n) = u.imag();
  m.bottomLeftCorner(n, n) = u.imag();
  m.bottomRightCorner(n, n) = -u.real();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  if (es.info() != Eigen::Success)
    raise(errc::numeric_failure, "takagi_symmetric eigensolver failed");

  Eigen::VectorXd sigma(n);
  matrix w(n, n);
  for (int i = 0; i < n; ++i) {
    const int idx = 2 * n - 1 - i;  // eigenvalues ascending; take the top n
    sigma(i) = es.eigenvalues()(idx);
    const Eigen::VectorXd v = es.eigenvectors().col(idx);
    w.col(i) = v.head(n).cast<cxd>() + cxd(0.0, 1.0) * v.tail(n).cast<cxd>();
  }
  const double smax = sigma(0);
  const double smin = sigma(n - 1);
  if (!(smin > tol.rank_rel * smax))
    raise(errc::singular_matrix, "takagi_symmetric input is numerically singular");

  matrix v = w.transpose();
  for (int i = 0; i < n; ++i) v.row(i) *= std::sqrt(sigma(i));

  if ((v.transpose() * v - u).norm() > tol.residual_rel * std::max(1.0, scale))
    raise(errc::numeric_failure, "takagi_symmetric reconstruction residual too large");
  return v;
}

matrix takagi_skew(const matrix& u_in, const tolerance& tol) {
  tol.validate();
  require_square(u_in, "takagi_skew");
  const int n = static_cast<int>(u_in.rows());
  if (n % 2 != 0)
    raise(errc::odd_dimension, "takagi_skew needs even size");
  const double scale = u_in.norm();
  if (scale == 0.0) raise(errc::singular_matrix, "takagi_skew of zero matrix");
  if ((u_in + u_in.transpose()).norm() > tol.residual_rel * scale)
    raise(errc::not_skew, "takagi_skew input is not skew symmetric");
  const matrix u = 0.5 * (u_in - u_in.transpose());

  const auto [smin, smax] = singular_extremes(u);
  if (!(smin > tol.rank_rel * smax))
    raise(errc::singular_matrix, "takagi_skew input is numerically singular");

  // Build a basis C with C^T u C = J by repeatedly extracting a
  // hyperbolic pair (f, g) with f^T u g = 1 and projecting the rest onto
  // the complement under the bilinear form.
  const int k = n / 2;
  matrix z = matrix::Identity(n, n);
  std::vector<cvec> fs, gs;
  fs.reserve(k);
  gs.reserve(k);
  while (z.cols() > 0) {
    const matrix gram = z.transpose() * u * z;
    const int m = static_cast<int>(z.cols());
    int pa = 0, pb = 1;
    double best = -1.0;
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        if (std::abs(gram(a, b)) > best) {
          best = std::abs(gram(a, b));
          pa = a;
          pb = b;
        }
    if (!(best > tol.rank_rel * smax))
      raise(errc::singular_matrix, "takagi_skew pivot collapsed");
    const cvec f = z.col(pa);
    const cvec g = z.col(pb) / gram(pa, pb);
    fs.push_back(f);
    gs.push_back(g);
    matrix rest(n, m - 2);
    int out = 0;
    for (int c = 0; c < m; ++c) {
      if (c == pa || c == pb) continue;
      const cvec zc = z.col(c);
      const cxd fz = (f.transpose() * u * zc)(0);
      const cxd gz = (g.transpose() * u * zc)(0);
      rest.col(out++) = zc + gz * f - fz * g;
    }
    z = std::move(rest);
  }

  matrix c(n, n);
  for (int i = 0; i < k; ++i) {
    c.col(i) = fs[static_cast<size_t>(i)];
    c.col(k + i) = gs[static_cast<size_t>(i)];
  }
  const Eigen::PartialPivLU<matrix> lu(c);
  const matrix v = lu.solve(matrix::Identity(n, n));

  const matrix j = symplectic_form(n);
  if ((v.transpose() * j * v - u).norm() > tol.residual_rel * std::max(1.0, scale))
    raise(errc::numeric_failure, "takagi_skew reconstruction residual too large");
  return v;
}

matrix find_intertwiner(const unit_images& images, const tolerance& tol) {
  tol.validate();
  const int n = static_cast<int>(std::llround(std::sqrt(double(images.size()))));
  if (n < 1 || static_cast<size_t>(n) * static_cast<size_t>(n) != images.size())
    raise(errc::invalid_argument, "find_intertwiner needs n^2 unit images");
  for (const auto& im : images)
    if (im.rows() != n || im.cols() != n)
      raise(errc::size_mismatch, "find_intertwiner image of wrong size");

  // Stack the equations phi(E) u - u E = 0 over all units E and solve for
  // the null space of the Gram matrix.  With column-major vec this reads
  // (I (x) phi(E) - E^T (x) I) vec(u) = 0.
  const int nn = n * n;
  matrix gram = matrix::Zero(nn, nn);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const matrix& ph = images[static_cast<size_t>(i * n + j)];
      matrix l = matrix::Zero(nn, nn);
      for (int b = 0; b < n; ++b)
        l.block(b * n, b * n, n, n) = ph;
      // E_ij^T (x) I subtracts identity blocks at block position (j, i).
      l.block(j * n, i * n, n, n) -= matrix::Identity(n, n);
      gram += l.adjoint() * l;
    }

  Eigen::SelfAdjointEigenSolver<matrix> es(gram);
  if (es.info() != Eigen::Success)
    raise(errc::numeric_failure, "find_intertwiner eigensolver failed");
  const auto& ev = es.eigenvalues();
  const double emax = std::max(ev(nn - 1), 0.0);
  double img_scale = 0.0;
  for (const auto& im : images) img_scale = std::max(img_scale, im.norm());
  // The Gram matrix is quadratic in the intertwining residual, so the null
  // cutoff is the square of the rank tolerance, floored well above the
  // arithmetic noise level of the assembled eigenvalues (about 1e-16
  // relative) and well below the smallest genuine gap (about 3 / cond(u)^2
  // relative, so 3e-6 for conjugators of condition 1e3).  An absolute floor
  // of the squared residual tolerance covers maps whose whole Gram spectrum
  // is rounding noise, such as images equal to the units themselves.
  const double null_floor = 1e-11;
  const double noise = tol.residual_rel * std::max(1.0, img_scale);
  const double cut = std::max(
      std::max(tol.rank_rel * tol.rank_rel, null_floor) * std::max(emax, 1e-300),
      noise * noise);
  int nulldim = 0;
  for (int i = 0; i < nn; ++i)
    if (ev(i) <= cut) ++nulldim;

  if (nulldim == 0)
    raise(errc::not_inner, "intertwining equations have no nonzero solution");
  if (nulldim > 1)
    raise(errc::ambiguous_solution,
          "intertwining solution space has dimension " + std::to_string(nulldim));

  const cvec vu = es.eigenvectors().col(0);
  matrix u = Eigen::Map<const matrix>(vu.data(), n, n);

  // Deterministic normalization: first entry of maximal magnitude, in row
  // major order, becomes one.
  double best = -1.0;
  cxd pivot(1.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (std::abs(u(i, j)) > best) {
        best = std::abs(u(i, j));
        pivot = u(i, j);
      }
  u /= pivot;

  const auto [smin, smax] = singular_extremes(u);
  if (!(smin > tol.rank_rel * smax))
    raise(errc::not_inner, "intertwiner is numerically singular");
  double res = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      matrix e = matrix::Zero(n, n);
      e(i, j) = cxd(1.0);
      res = std::max(res,
                     (images[static_cast<size_t>(i * n + j)] * u - u * e).norm());
    }
  if (res > tol.residual_rel * std::max(1.0, img_scale) * std::max(1.0, u.norm()))
    raise(errc::not_inner, "intertwiner residual out of tolerance");
  return u;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  // splitmix64 step on the combined value.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

matrix random_gaussian(int n, std::uint64_t seed) {
  if (n < 1) raise(errc::invalid_argument, "random_gaussian needs n >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double re = nd(rng);
      const double im = nd(rng);
      m(i, j) = cxd(re, im);
    }
  return m;
}

matrix random_conditioned(int n, std::uint64_t seed, double condition) {
  if (n < 1) raise(errc::invalid_argument, "random_conditioned needs n >= 1");
  if (!(condition >= 1.0))
    raise(errc::invalid_argument, "condition number must be >= 1");
  const matrix a = random_gaussian(n, mix_seed(seed, 101));
  const matrix b = random_gaussian(n, mix_seed(seed, 202));
  const matrix q1 = Eigen::HouseholderQR<matrix>(a).householderQ();
  const matrix q2 = Eigen::HouseholderQR<matrix>(b).householderQ();
  Eigen::VectorXd sv(n);
  const double h = 0.5 * std::log10(condition);
  for (int i = 0; i < n; ++i) {
    const double t = n == 1 ? 0.0 : double(i) / double(n - 1);
    sv(i) = std::pow(10.0, h - 2.0 * h * t);
  }
  return q1 * sv.cast<cxd>().asDiagonal() * q2;
}

cxd random_unit_scalar(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ud(0.0, 2.0 * M_PI);
  const double th = ud(rng);
  return cxd(std::cos(th), std::sin(th));
}

}  // namespace invogen
