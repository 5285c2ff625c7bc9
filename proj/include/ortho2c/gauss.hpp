#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <vector>

#include "ortho2c/poly.hpp"

namespace ortho2c {

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

namespace detail {

/// Golub-Welsch: nodes are eigenvalues of the symmetric tridiagonal matrix
/// built from the monic recurrence (diag a_k, offdiag sqrt(b_k)); weights are
/// mu0 times the squared first eigenvector components.
inline GaussRule golub_welsch(const std::vector<double>& a, const std::vector<double>& b,
                              double mu0) {
  const int n = int(a.size());
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    J(i, i) = a[i];
    if (i + 1 < n) J(i, i + 1) = J(i + 1, i) = std::sqrt(b[i + 1]);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  if (es.info() != Eigen::Success) throw Error("gauss rule: eigensolve failed");
  GaussRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    r.nodes[i] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    r.weights[i] = mu0 * v0 * v0;
  }
  return r;
}

}  // namespace detail

/// n-point rule for weight (1-t)^a (1+t)^b on [-1, 1].
inline GaussRule gauss_jacobi(int n, double a, double b) {
  if (n < 1) throw Error("gauss_jacobi: need at least one node");
  if (a <= -1.0 || b <= -1.0) throw Error("gauss_jacobi: parameters must exceed -1");
  std::vector<double> diag(n), off(n, 0.0);
  const double s = a + b;
  diag[0] = (b - a) / (s + 2.0);
  for (int k = 1; k < n; ++k) {
    const double d = (2.0 * k + s) * (2.0 * k + s + 2.0);
    diag[k] = (b * b - a * a) / d;
  }
  if (n > 1) off[1] = 4.0 * (a + 1.0) * (b + 1.0) / ((s + 2.0) * (s + 2.0) * (s + 3.0));
  for (int k = 2; k < n; ++k) {
    const double d = (2.0 * k + s) * (2.0 * k + s) * (2.0 * k + s + 1.0) * (2.0 * k + s - 1.0);
    off[k] = 4.0 * k * (k + a) * (k + b) * (k + s) / d;
  }
  const double mu0 = std::exp((s + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) +
                              std::lgamma(b + 1.0) - std::lgamma(s + 2.0));
  return detail::golub_welsch(diag, off, mu0);
}

inline GaussRule gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

/// n-point rule for weight e^{-t} on [0, inf).
inline GaussRule gauss_laguerre(int n) {
  if (n < 1) throw Error("gauss_laguerre: need at least one node");
  std::vector<double> diag(n), off(n, 0.0);
  for (int k = 0; k < n; ++k) {
    diag[k] = 2.0 * k + 1.0;
    if (k >= 1) off[k] = double(k) * double(k);
  }
  return detail::golub_welsch(diag, off, 1.0);
}

/// Adaptive 1-D quadrature with an embedded 7/15-point Gauss pair.
/// Absolute-tolerance bookkeeping: the budget is split between halves on each
/// subdivision.  Throws once the subdivision depth is exhausted with the
/// tolerance still unmet.
class AdaptiveGauss {
 public:
  AdaptiveGauss() : g7_(gauss_legendre(7)), g15_(gauss_legendre(15)) {}

  struct Result {
    Complex value;
    double error;  // accumulated error estimate
    long evals;
  };

  /// With throw_on_fail = false, depth exhaustion folds the panel's error
  /// estimate into Result::error instead of throwing; the caller decides
  /// whether the achieved accuracy is acceptable.
  template <class F>
  Result integrate(F&& f, double a, double b, double abs_tol, int max_depth = 28,
                   bool throw_on_fail = true) const {
    Result r{0.0, 0.0, 0};
    recurse(f, a, b, abs_tol, max_depth, throw_on_fail, r);
    return r;
  }

 private:
  template <class F>
  Complex apply(F&& f, const GaussRule& g, double a, double b, long& evals) const {
    const double h = 0.5 * (b - a), m = 0.5 * (a + b);
    Complex s = 0.0;
    for (size_t i = 0; i < g.nodes.size(); ++i) {
      s += g.weights[i] * f(m + h * g.nodes[i]);
      ++evals;
    }
    return h * s;
  }

  template <class F>
  void recurse(F&& f, double a, double b, double tol, int depth, bool throw_on_fail,
               Result& r) const {
    const Complex c7 = apply(f, g7_, a, b, r.evals);
    const Complex c15 = apply(f, g15_, a, b, r.evals);
    const double err = std::abs(c15 - c7);
    if (err <= tol || depth <= 0) {
      if (err > tol && throw_on_fail)
        throw Error("adaptive quadrature: depth exhausted, achieved error " +
                    std::to_string(err) + " over [" + std::to_string(a) + ", " +
                    std::to_string(b) + "]");
      r.value += c15;
      r.error += err;
      return;
    }
    const double m = 0.5 * (a + b);
    recurse(f, a, m, 0.5 * tol, depth - 1, throw_on_fail, r);
    recurse(f, m, b, 0.5 * tol, depth - 1, throw_on_fail, r);
  }

  GaussRule g7_, g15_;
};

}  // namespace ortho2c
