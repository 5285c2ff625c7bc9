#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "ortho2c/basis.hpp"
#include "ortho2c/bridge.hpp"
#include "ortho2c/classical.hpp"
#include "ortho2c/gauss.hpp"

namespace ortho2c {

/// Reproducing kernel of the span of levels 0..n (orthonormal levels):
/// K_n(z, zeta) = sum_m Q_m(z)^t conj(Q_m(zeta)).
inline Complex kernel_complex(const BasisSet& bs, int n, Complex z, Complex zeta) {
  if (n > bs.degree()) throw Error("kernel_complex: degree exceeds basis");
  Complex acc = 0.0;
  for (int m = 0; m <= n; ++m) {
    const Eigen::VectorXcd a = eval_level(bs.level(m), z);
    const Eigen::VectorXcd b = eval_level(bs.level(m), zeta);
    acc += b.dot(a);  // conj(b) . a
  }
  return acc;
}

/// Same kernel through the real orthonormal levels; the value is real.
inline double kernel_real(const RealBasisSet& rbs, int n, double x, double y, double xp,
                          double yp) {
  if (n >= int(rbs.levels.size())) throw Error("kernel_real: degree exceeds basis");
  double acc = 0.0;
  for (int m = 0; m <= n; ++m) {
    const Eigen::VectorXd a = eval_real_level(rbs.levels[m], x, y);
    const Eigen::VectorXd b = eval_real_level(rbs.levels[m], xp, yp);
    acc += a.dot(b);
  }
  return acc;
}

/// Compact two-level form of the kernel:
///   K_n(z,zeta) = [S(z,zeta) - S(zeta,z)] / (z - zeta),
///   S(z,zeta) = Q_{n+1}(z)^t alpha_n^t J Q_n(zeta),
/// with J the index-reversal on level n.  alpha_n is the up coefficient of the
/// orthonormal three-term relation.  Requires z != zeta.
///
/// With starred = true the transposes are replaced by adjoints; that variant
/// is NOT an identity for the kernel (kept for diagnostic comparison).
inline Complex cd_kernel_complex(const BasisSet& bs, const Eigen::MatrixXcd& alpha_n, int n,
                                 Complex z, Complex zeta, bool starred = false) {
  if (n + 1 > bs.degree()) throw Error("cd_kernel_complex: need level n+1 in basis");
  if (alpha_n.rows() != n + 1 || alpha_n.cols() != n + 2)
    throw Error("cd_kernel_complex: alpha has wrong shape");
  const double sep = std::abs(z - zeta);
  if (sep <= 1e-12 * std::max(1.0, std::abs(z)))
    throw Error("cd_kernel_complex: arguments coincide; use the summed kernel");

  const auto S = [&](Complex u, Complex v) {
    Eigen::VectorXcd qn1 = eval_level(bs.level(n + 1), u);
    Eigen::VectorXcd qn = eval_level(bs.level(n), v);
    Eigen::VectorXcd jq(n + 1);
    for (int k = 0; k <= n; ++k) jq(k) = qn(n - k);
    if (starred) return Complex(qn1.adjoint() * alpha_n.adjoint() * jq);
    return Complex(qn1.transpose() * alpha_n.transpose() * jq);
  };
  return (S(z, zeta) - S(zeta, z)) / (z - zeta);
}

/// Real-variable two-level kernel form along one axis (0 = first coordinate,
/// 1 = second):
///   K_n(u, v) = [P_{n+1}(u)^t A^t P_n(v) - P_{n+1}(v)^t A^t P_n(u)] / (u_i - v_i),
/// where A is the up coefficient for that axis.  Requires u_i != v_i.
inline double cd_kernel_real(const RealBasisSet& rbs, const Eigen::MatrixXd& A, int n, double x,
                             double y, double xp, double yp, int axis) {
  if (axis != 0 && axis != 1) throw Error("cd_kernel_real: axis must be 0 or 1");
  if (n + 1 >= int(rbs.levels.size())) throw Error("cd_kernel_real: need level n+1 in basis");
  const double diff = axis == 0 ? x - xp : y - yp;
  if (std::abs(diff) <= 1e-12 * std::max({1.0, std::abs(x), std::abs(y)}))
    throw Error("cd_kernel_real: coordinates coincide along this axis; use the other axis");
  const auto S = [&](double a, double b, double c, double d) {
    Eigen::VectorXd p1 = eval_real_level(rbs.levels[n + 1], a, b);
    Eigen::VectorXd p0 = eval_real_level(rbs.levels[n], c, d);
    return double(p1.transpose() * A.transpose() * p0);
  };
  return (S(x, y, xp, yp) - S(xp, yp, x, y)) / diff;
}

/// Closed-form degree-n kernel slice on the unit disk with radial weight
/// (1 - |z|^2)^lambda, evaluated through a one-dimensional Gegenbauer average:
///   slice_n(z, zeta) ~ C_n^{mu+1/2}(Re(z conj(zeta)) + sqrt(1-|z|^2) sqrt(1-|zeta|^2) t)
/// averaged against (1-t^2)^{mu-1} with mu = lambda + 1/2, then scaled by
/// (n + mu + 1/2)/(mu + 1/2).  The average is normalized so n = 0 yields 1.
/// Valid for |z| <= 1, |zeta| <= 1, lambda > -1/2.
inline double disk_kernel_gegenbauer(double lambda, int n, Complex z, Complex zeta) {
  if (lambda <= -0.5) throw Error("disk_kernel_gegenbauer: requires lambda > -1/2");
  if (std::abs(z) > 1.0 + 1e-12 || std::abs(zeta) > 1.0 + 1e-12)
    throw Error("disk_kernel_gegenbauer: arguments must lie in the closed disk");
  const double mu = lambda + 0.5;
  const double a = std::real(z * std::conj(zeta));
  const double rz = std::sqrt(std::max(0.0, 1.0 - std::norm(z)));
  const double rzeta = std::sqrt(std::max(0.0, 1.0 - std::norm(zeta)));
  const double b = rz * rzeta;
  const GaussRule rule = gauss_jacobi(n / 2 + 2, mu - 1.0, mu - 1.0);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    num += rule.weights[i] * gegenbauer_eval(n, mu + 0.5, a + b * rule.nodes[i]);
    den += rule.weights[i];
  }
  return (n + mu + 0.5) / (mu + 0.5) * num / den;
}

}  // namespace ortho2c
