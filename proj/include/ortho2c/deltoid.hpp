#pragma once

#include <cmath>
#include <functional>

#include "ortho2c/gauss.hpp"
#include "ortho2c/poly.hpp"

namespace ortho2c {

/// Deltoid region: interior of the three-cusped hypocycloid with cusps at
/// z = 1, e^{2*pi*i/3}, e^{-2*pi*i/3}.  The boundary is the zero set of F
/// below; F > 0 inside.  The weights handled here are F^{+1/2} and F^{-1/2}.
inline double deltoid_F(double x, double y) {
  const double r2 = x * x + y * y;
  return -3.0 * (r2 + 1.0) * (r2 + 1.0) + 8.0 * (x * x * x - 3.0 * x * y * y) + 4.0;
}

inline bool deltoid_contains(double x, double y) { return deltoid_F(x, y) > 0.0; }

/// For fixed x in (-1/2, 1), F is quadratic in v = y^2:
///   F = 3 (v - vminus) (vplus - v)
/// with closed-form roots.  The slice of the region is
///   y^2 in [max(vminus, 0), vplus];
/// vminus > 0 happens for x < -1/3 (two disjoint y-bands near the left cusps).
struct DeltoidSlice {
  double vminus, vplus;
};

inline DeltoidSlice deltoid_slice(double x) {
  const double s = 2.0 * x + 1.0;
  if (s <= 0.0) return {0.0, 0.0};
  const double disc = (2.0 / std::sqrt(3.0)) * s * std::sqrt(s);
  const double base = -(x * x + 4.0 * x + 1.0);
  return {base - disc, base + disc};
}

namespace detail {

/// One half-slice integral  int_{ylo}^{yhi} g(y) 3^a (y^2-vm)^a (vp-y^2)^a dy
/// where g is the even part of the integrand in y.  Both endpoints may carry
/// (.)^{+-1/2} factors; each half is mapped by y = endpoint -+ t^2, which
/// turns the factor into an exact t-form with no 0/0 at the nodes.
template <class G>
Complex deltoid_slice_integral(double alpha, G&& g, const DeltoidSlice& sl,
                               const AdaptiveGauss& ag, double abs_tol, double& err,
                               long& evals) {
  const double vm = sl.vminus, vp = sl.vplus;
  if (vp <= 1e-14) return 0.0;
  const double ylo = vm > 0.0 ? std::sqrt(vm) : 0.0;
  const double yhi = std::sqrt(vp);
  if (yhi - ylo <= 1e-12) return 0.0;
  const double mid = 0.5 * (ylo + yhi);
  const double pref = std::pow(3.0, alpha);
  const bool inner_singular = vm > 0.0;

  // lower half: y = ylo + t^2
  auto lower = [&](double t) -> Complex {
    const double y = ylo + t * t;
    const double up = std::pow(vp - y * y, alpha);
    double low_dy;  // (y^2 - vm)^alpha * dy/dt
    if (inner_singular) {
      const double s = y + ylo;  // y^2 - vm = t^2 (y + ylo), dy = 2 t dt
      low_dy = alpha > 0 ? 2.0 * t * t * std::sqrt(s) : 2.0 / std::sqrt(s);
    } else {
      low_dy = 2.0 * t * std::pow(y * y - vm, alpha);
    }
    return pref * g(y) * up * low_dy;
  };
  // upper half: y = yhi - t^2,  vp - y^2 = t^2 (y + yhi)
  auto upper = [&](double t) -> Complex {
    const double y = yhi - t * t;
    const double low = std::pow(y * y - vm, alpha);
    const double s = y + yhi;
    const double up_dy = alpha > 0 ? 2.0 * t * t * std::sqrt(s) : 2.0 / std::sqrt(s);
    return pref * g(y) * low * up_dy;
  };

  auto r1 = ag.integrate(lower, 0.0, std::sqrt(mid - ylo), 0.5 * abs_tol, 28, false);
  auto r2 = ag.integrate(upper, 0.0, std::sqrt(yhi - mid), 0.5 * abs_tol, 28, false);
  err += r1.error + r2.error;
  evals += r1.evals + r2.evals;
  return r1.value + r2.value;
}

}  // namespace detail

struct DeltoidIntegral {
  Complex value;
  double error;
  long evals;
};

/// int over the deltoid region of f(x, y) * F(x, y)^alpha, alpha = +-1/2.
/// Outer adaptive pass in x with a forced split at x = -1/3 where the inner
/// slice geometry switches between one and two y-bands (for alpha = -1/2 the
/// slice integral has a logarithmic spike there).
template <class F>
DeltoidIntegral deltoid_region_integral(double alpha, F&& f, double abs_tol) {
  if (alpha != 0.5 && alpha != -0.5) throw Error("deltoid weight exponent must be +-1/2");
  static const AdaptiveGauss ag;
  double inner_err = 0.0;
  long evals = 0;
  const double inner_tol = abs_tol * 1e-3;

  auto slice_val = [&](double x) -> Complex {
    const DeltoidSlice sl = deltoid_slice(x);
    auto g = [&](double y) -> Complex { return f(x, y) + f(x, -y); };
    return detail::deltoid_slice_integral(alpha, g, sl, ag, inner_tol, inner_err, evals);
  };

  auto left = ag.integrate(slice_val, -0.5, -1.0 / 3.0, 0.25 * abs_tol, 34, false);
  auto right = ag.integrate(slice_val, -1.0 / 3.0, 1.0, 0.75 * abs_tol, 34, false);
  DeltoidIntegral out;
  out.value = left.value + right.value;
  out.error = left.error + right.error + inner_err;
  out.evals = evals + left.evals + right.evals;
  return out;
}

}  // namespace ortho2c
