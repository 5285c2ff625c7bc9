#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "ortho2c/basis.hpp"
#include "ortho2c/families.hpp"
#include "ortho2c/kernel.hpp"
#include "ortho2c/recurrence.hpp"

namespace ortho2c {

/// Truncated block Jacobi operator for degree n: block rows/columns are the
/// levels 0..n-1, with diagonal beta_m, superdiagonal alpha_m and subdiagonal
/// gamma_m.  Size n(n+1)/2.
inline Eigen::MatrixXcd jacobi_operator(const RecurrenceData& rd, int n) {
  if (n < 1) throw Error("jacobi_operator: degree must be >= 1");
  if (rd.degree() < n - 1) throw Error("jacobi_operator: recurrence data too short");
  const int N = n * (n + 1) / 2;
  Eigen::MatrixXcd J = Eigen::MatrixXcd::Zero(N, N);
  const auto off = [](int m) { return m * (m + 1) / 2; };
  for (int m = 0; m < n; ++m) {
    J.block(off(m), off(m), m + 1, m + 1) = rd.levels[m].beta;
    if (m + 1 < n) {
      J.block(off(m), off(m + 1), m + 1, m + 2) = rd.levels[m].alpha;
      J.block(off(m + 1), off(m), m + 2, m + 1) = rd.levels[m + 1].gamma;
    }
  }
  return J;
}

struct ZeroOptions {
  double pivot_tol = 1e-6;     // minimum relative size of the leading segment
  double sym_tol = 1e-8;       // eigenvector conjugation-reversal tolerance
  double residual_tol = 1e-8;  // relative polynomial residual at accepted zeros
  double cluster_radius = 1e-3;
  double dedup_tol = 1e-8;
  int max_refine = 12;
};

namespace detail {

/// Eigenvector structure test: split xi into level segments, normalize by the
/// leading one-entry segment, and require each segment to equal its own
/// reversed conjugate.  Exact eigenvectors at genuine common zeros always
/// satisfy this; numerically it is a necessary filter only.
inline bool eigvec_symmetric(const Eigen::VectorXcd& xi, int n, const ZeroOptions& opt) {
  const double mx = xi.cwiseAbs().maxCoeff();
  if (std::abs(xi(0)) < opt.pivot_tol * mx) return false;
  Eigen::VectorXcd v = xi / xi(0);
  const double scale = std::max(1.0, v.cwiseAbs().maxCoeff());
  int pos = 0;
  for (int m = 0; m < n; ++m) {
    for (int k = 0; k <= m; ++k) {
      const Complex a = std::conj(v(pos + k));
      const Complex b = v(pos + m - k);
      if (std::abs(a - b) > opt.sym_tol * scale) return false;
    }
    pos += m + 1;
  }
  return true;
}

/// Coefficient-size bound used to make residual tests relative.
inline double level_scale(const std::vector<CPoly>& polys, Complex nu) {
  const double r = std::max(1.0, std::abs(nu));
  double s = 0.0;
  for (const auto& p : polys) {
    double acc = 0.0;
    for (const auto& [e, c] : p.terms()) acc += std::abs(c) * std::pow(r, e.a + e.b);
    s = std::max(s, acc);
  }
  return std::max(1.0, s);
}

inline double level_residual(const std::vector<CPoly>& polys, Complex nu) {
  double r = 0.0;
  for (const auto& p : polys) r = std::max(r, std::abs(eval(p, nu)));
  return r;
}

/// Local least-squares polish of a candidate common zero of the level.
/// Returns the refined point, or the start point if refinement diverges.
inline Complex refine_zero(const std::vector<CPoly>& polys, Complex start,
                           const ZeroOptions& opt) {
  std::vector<CPoly> px, py;
  for (const auto& p : polys) {
    px.push_back(dx(p));
    py.push_back(dy(p));
  }
  const int m = int(polys.size());
  Complex nu = start;
  const double move_cap = 0.5 * std::max(1.0, std::abs(start));
  for (int it = 0; it < opt.max_refine; ++it) {
    Eigen::VectorXd r(2 * m);
    Eigen::MatrixXd Jm(2 * m, 2);
    for (int k = 0; k < m; ++k) {
      const Complex v = eval(polys[k], nu);
      const Complex gx = eval(px[k], nu);
      const Complex gy = eval(py[k], nu);
      r(2 * k) = v.real();
      r(2 * k + 1) = v.imag();
      Jm(2 * k, 0) = gx.real();
      Jm(2 * k, 1) = gy.real();
      Jm(2 * k + 1, 0) = gx.imag();
      Jm(2 * k + 1, 1) = gy.imag();
    }
    const Eigen::Vector2d step = Jm.colPivHouseholderQr().solve(-r);
    nu += Complex(step(0), step(1));
    if (std::abs(nu - start) > move_cap) return start;
    if (step.norm() < 1e-14 * std::max(1.0, std::abs(nu))) break;
  }
  return nu;
}

}  // namespace detail

/// Common zeros of the degree-n level via the truncated Jacobi operator.
/// Eigenvalues (individually and as close-cluster means) seed a local
/// least-squares polish; a point is kept only if every level-n polynomial
/// vanishes there to within residual_tol relative to the coefficient scale.
inline std::vector<Complex> common_zeros(const BasisSet& bs, int n, const RecurrenceData& rd,
                                         const ZeroOptions& opt = {}) {
  if (n < 1) throw Error("common_zeros: degree must be >= 1");
  if (n > bs.degree()) throw Error("common_zeros: degree exceeds basis");
  const Eigen::MatrixXcd J = jacobi_operator(rd, n);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(J);
  if (es.info() != Eigen::Success) throw Error("common_zeros: eigen-solve failed");

  const Eigen::VectorXcd& evs = es.eigenvalues();
  const double ev_scale = std::max(1.0, evs.cwiseAbs().maxCoeff());

  std::vector<Complex> candidates;
  for (Eigen::Index i = 0; i < evs.size(); ++i) candidates.push_back(evs(i));
  // Means of eigenvalue clusters: under defective degeneracy the individual
  // eigenvalues scatter around the true point but their mean stays close.
  {
    std::vector<Complex> centers;
    std::vector<int> sizes;
    const double rad = opt.cluster_radius * ev_scale;
    for (Eigen::Index i = 0; i < evs.size(); ++i) {
      bool merged = false;
      for (std::size_t c = 0; c < centers.size(); ++c) {
        if (std::abs(evs(i) - centers[c]) < rad) {
          centers[c] = (centers[c] * double(sizes[c]) + evs(i)) / double(sizes[c] + 1);
          ++sizes[c];
          merged = true;
          break;
        }
      }
      if (!merged) {
        centers.push_back(evs(i));
        sizes.push_back(1);
      }
    }
    for (std::size_t c = 0; c < centers.size(); ++c)
      if (sizes[c] >= 2) candidates.push_back(centers[c]);
  }

  const auto& polys = bs.level(n).polys;
  std::vector<Complex> zeros;
  for (Complex cand : candidates) {
    const Complex nu = detail::refine_zero(polys, cand, opt);
    const double scale = detail::level_scale(polys, nu);
    if (detail::level_residual(polys, nu) >= opt.residual_tol * scale) continue;
    bool dup = false;
    for (const Complex& z : zeros)
      if (std::abs(z - nu) < opt.dedup_tol * std::max(1.0, std::abs(nu))) {
        dup = true;
        break;
      }
    if (!dup) zeros.push_back(nu);
  }
  if (int(zeros.size()) > n * (n + 1) / 2)
    throw Error("common_zeros: more zeros than dim of lower degree space; "
                "residual tolerance too loose");
  std::sort(zeros.begin(), zeros.end(), [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return zeros;
}

/// Convenience driver: builds the orthonormal basis and recurrence.
inline std::vector<Complex> common_zeros(const WeightSpec& w, int n, const ZeroOptions& opt = {},
                                         uint64_t seed = 42) {
  BasisSet bs = build_basis(w, n, Normalization::orthonormal);
  RecurrenceData rd = w.kind() == WeightKind::deltoid_second
                          ? deltoid_u_recurrence(n)
                          : extract_complex_three_term(bs, w.is_deltoid() ? 1e-6 : 1e-9, 50, seed);
  return common_zeros(bs, n, rd, opt);
}

struct MaxZeroReport {
  bool satisfied = false;
  double residual = 0.0;  // asymmetry of alpha alpha^* J
};

/// Criterion for the maximal number n(n+1)/2 of common zeros at degree n:
/// alpha_{n-1} alpha_{n-1}^* J must be symmetric (J = index reversal of size
/// rows(alpha)).
inline MaxZeroReport max_zero_condition(const Eigen::MatrixXcd& alpha, double tol = 1e-8) {
  const Eigen::Index r = alpha.rows();
  Eigen::MatrixXcd C = alpha * alpha.adjoint();
  Eigen::MatrixXcd CJ(r, r);
  for (Eigen::Index i = 0; i < r; ++i) CJ.col(i) = C.col(r - 1 - i);
  MaxZeroReport rep;
  rep.residual = (CJ - CJ.transpose()).cwiseAbs().maxCoeff();
  rep.satisfied = rep.residual < tol * std::max(1.0, CJ.cwiseAbs().maxCoeff());
  return rep;
}

struct CubatureRule {
  std::vector<Complex> nodes;
  std::vector<double> weights;
  int exact_degree = 0;  // exact for z^a zbar^b with a+b up to this degree
  double total_mass = 0.0;
};

/// Worst moment error of a rule over all monomials of total degree <= deg.
inline double cubature_exactness(const WeightSpec& w, const CubatureRule& rule, int deg) {
  double worst = 0.0;
  for (int a = 0; a <= deg; ++a)
    for (int b = 0; a + b <= deg; ++b) {
      Complex acc = 0.0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const Complex z = rule.nodes[i];
        acc += rule.weights[i] * std::pow(z, a) * std::pow(std::conj(z), b);
      }
      worst = std::max(worst, std::abs(acc - moment(w, a, b)));
    }
  return worst;
}

/// Gaussian cubature of exactness 2n-1 from the common zeros of the degree-n
/// level, with weights 1/K_{n-1}(nu, nu).  Throws when the weight does not
/// admit one (criterion fails or the zero count is short).
inline CubatureRule gaussian_cubature(const WeightSpec& w, int n, double exact_tol = 1e-7,
                                      const ZeroOptions& opt = {}, uint64_t seed = 42) {
  if (n < 1) throw Error("gaussian_cubature: degree must be >= 1");
  BasisSet bs = build_basis(w, n, Normalization::orthonormal);
  RecurrenceData rd = w.kind() == WeightKind::deltoid_second
                          ? deltoid_u_recurrence(n)
                          : extract_complex_three_term(bs, w.is_deltoid() ? 1e-6 : 1e-9, 50, seed);
  const MaxZeroReport mz = max_zero_condition(rd.levels[n - 1].alpha);
  if (!mz.satisfied)
    throw Error("gaussian_cubature: maximal-zero criterion fails for this weight (asymmetry " +
                std::to_string(mz.residual) + ")");
  std::vector<Complex> zs = common_zeros(bs, n, rd, opt);
  if (int(zs.size()) != n * (n + 1) / 2)
    throw Error("gaussian_cubature: found " + std::to_string(zs.size()) +
                " common zeros, need " + std::to_string(n * (n + 1) / 2));

  CubatureRule rule;
  rule.nodes = std::move(zs);
  rule.exact_degree = 2 * n - 1;
  for (const Complex& nu : rule.nodes) {
    const Complex k = kernel_complex(bs, n - 1, nu, nu);
    if (std::abs(k.imag()) > 1e-8 * std::abs(k) || k.real() <= 0.0)
      throw Error("gaussian_cubature: kernel value at a node is not positive real");
    rule.weights.push_back(1.0 / k.real());
    rule.total_mass += rule.weights.back();
  }
  const double err = cubature_exactness(w, rule, rule.exact_degree);
  if (err > exact_tol)
    throw Error("gaussian_cubature: rule misses exactness, worst moment error " +
                std::to_string(err));
  return rule;
}

}  // namespace ortho2c
