#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ortho2c/poly.hpp"

namespace ortho2c {

/// One-variable classical families, forward recurrences.  Values only; the
/// coefficient builders below are used where a polynomial object is needed.

inline double laguerre_eval(int n, double alpha, double t) {
  if (n < 0) throw Error("laguerre: negative degree");
  if (alpha <= -1.0) throw Error("laguerre: alpha must exceed -1");
  double p0 = 1.0;
  if (n == 0) return p0;
  double p1 = 1.0 + alpha - t;
  for (int k = 1; k < n; ++k) {
    double p2 = ((2.0 * k + 1.0 + alpha - t) * p1 - (k + alpha) * p0) / (k + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

inline double jacobi_eval(int n, double a, double b, double t) {
  if (n < 0) throw Error("jacobi: negative degree");
  if (a <= -1.0 || b <= -1.0) throw Error("jacobi: parameters must exceed -1");
  double p0 = 1.0;
  if (n == 0) return p0;
  double p1 = 0.5 * (a + b + 2.0) * t + 0.5 * (a - b);
  for (int k = 1; k < n; ++k) {
    const double c1 = 2.0 * (k + 1.0) * (k + a + b + 1.0) * (2.0 * k + a + b);
    const double c2 = (2.0 * k + a + b + 1.0) * (a * a - b * b);
    const double c3 = (2.0 * k + a + b) * (2.0 * k + a + b + 1.0) * (2.0 * k + a + b + 2.0);
    const double c4 = 2.0 * (k + a) * (k + b) * (2.0 * k + a + b + 2.0);
    double p2 = ((c2 + c3 * t) * p1 - c4 * p0) / c1;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

inline double gegenbauer_eval(int n, double mu, double t) {
  if (n < 0) throw Error("gegenbauer: negative degree");
  if (mu <= -0.5 || mu == 0.0) throw Error("gegenbauer: index must exceed -1/2 and be nonzero");
  double p0 = 1.0;
  if (n == 0) return p0;
  double p1 = 2.0 * mu * t;
  for (int k = 1; k < n; ++k) {
    double p2 = (2.0 * (k + mu) * t * p1 - (k + 2.0 * mu - 1.0) * p0) / (k + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

/// Physicists' Hermite: H_{n+1} = 2t H_n - 2n H_{n-1}.
inline double hermite1d_eval(int n, double t) {
  if (n < 0) throw Error("hermite1d: negative degree");
  double p0 = 1.0;
  if (n == 0) return p0;
  double p1 = 2.0 * t;
  for (int k = 1; k < n; ++k) {
    double p2 = 2.0 * t * p1 - 2.0 * k * p0;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

/// Coefficients of L_n^{(alpha)} in ascending powers of t.
inline std::vector<double> laguerre_coeffs(int n, double alpha) {
  if (n < 0) throw Error("laguerre: negative degree");
  std::vector<double> p0 = {1.0};
  if (n == 0) return p0;
  std::vector<double> p1 = {1.0 + alpha, -1.0};
  for (int k = 1; k < n; ++k) {
    std::vector<double> p2(k + 2, 0.0);
    for (int i = 0; i <= k; ++i) {
      p2[i] += (2.0 * k + 1.0 + alpha) * p1[i];
      p2[i + 1] -= p1[i];
    }
    for (int i = 0; i < int(p0.size()); ++i) p2[i] -= (k + alpha) * p0[i];
    for (double& c : p2) c /= (k + 1.0);
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  return p1;
}

/// Coefficients of the Jacobi polynomial P_n^{(a,b)} in ascending powers of t.
inline std::vector<double> jacobi_coeffs(int n, double a, double b) {
  if (n < 0) throw Error("jacobi: negative degree");
  if (a <= -1.0 || b <= -1.0) throw Error("jacobi: parameters must exceed -1");
  std::vector<double> p0 = {1.0};
  if (n == 0) return p0;
  std::vector<double> p1 = {0.5 * (a - b), 0.5 * (a + b + 2.0)};
  for (int k = 1; k < n; ++k) {
    const double c1 = 2.0 * (k + 1.0) * (k + a + b + 1.0) * (2.0 * k + a + b);
    const double c2 = (2.0 * k + a + b + 1.0) * (a * a - b * b);
    const double c3 = (2.0 * k + a + b) * (2.0 * k + a + b + 1.0) * (2.0 * k + a + b + 2.0);
    const double c4 = 2.0 * (k + a) * (k + b) * (2.0 * k + a + b + 2.0);
    std::vector<double> p2(k + 2, 0.0);
    for (int i = 0; i <= k; ++i) {
      p2[i] += c2 * p1[i];
      p2[i + 1] += c3 * p1[i];
    }
    for (int i = 0; i < int(p0.size()); ++i) p2[i] -= c4 * p0[i];
    for (double& c : p2) c /= c1;
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  return p1;
}

/// Coefficients of the physicists' Hermite H_n in ascending powers of t.
inline std::vector<double> hermite1d_coeffs(int n) {
  if (n < 0) throw Error("hermite1d: negative degree");
  std::vector<double> p0 = {1.0};
  if (n == 0) return p0;
  std::vector<double> p1 = {0.0, 2.0};
  for (int k = 1; k < n; ++k) {
    std::vector<double> p2(k + 2, 0.0);
    for (int i = 0; i <= k; ++i) p2[i + 1] += 2.0 * p1[i];
    for (int i = 0; i < int(p0.size()); ++i) p2[i] -= 2.0 * k * p0[i];
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  return p1;
}

enum class Classical { laguerre, jacobi, gegenbauer, hermite1d };

/// Uniform entry point used by the CLI and the disk kernel identity.
/// `a` and `b` are the family parameters (unused slots ignored).
inline double classical_eval(Classical kind, int n, double a, double b, double t) {
  switch (kind) {
    case Classical::laguerre: return laguerre_eval(n, a, t);
    case Classical::jacobi: return jacobi_eval(n, a, b, t);
    case Classical::gegenbauer: return gegenbauer_eval(n, a, t);
    case Classical::hermite1d: return hermite1d_eval(n, t);
  }
  throw Error("classical_eval: unknown family");
}

}  // namespace ortho2c
