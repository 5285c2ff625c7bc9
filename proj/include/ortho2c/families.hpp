#pragma once

#include <mutex>
#include <vector>

#include "ortho2c/basis.hpp"
#include "ortho2c/classical.hpp"

namespace ortho2c {

/// Complex Hermite polynomial H_{k,j}, monic with leading term z^k zbar^j.
/// Built from H_{k+1,j} = z H_{k,j} - j H_{k,j-1} starting at H_{0,j} = zbar^j.
inline CPoly hermite_complex(int k, int j) {
  if (k < 0 || j < 0) throw Error("hermite_complex: negative index");
  std::vector<std::vector<CPoly>> tab(k + 1, std::vector<CPoly>(j + 1));
  for (int jj = 0; jj <= j; ++jj) tab[0][jj] = CPoly::monomial(0, jj);
  for (int i = 1; i <= k; ++i)
    for (int jj = 0; jj <= j; ++jj) {
      tab[i][jj] = tab[i - 1][jj].shifted(1, 0);
      if (jj > 0) tab[i][jj] -= double(jj) * tab[i - 1][jj - 1];
    }
  return tab[k][j];
}

inline double hermite_norm2(int k, int j) {
  return detail::factorial(k) * detail::factorial(j);
}

/// Disk polynomial P_{k,j}^lambda as a terminating hypergeometric sum; the
/// leading z^k zbar^j coefficient is (lambda+1)_{k+j} / ((lambda+1)_k (lambda+1)_j).
inline CPoly disk_complex(double lambda, int k, int j) {
  if (lambda <= -1.0) throw Error("disk_complex: lambda must exceed -1");
  if (k < 0 || j < 0) throw Error("disk_complex: negative index");
  const double lead = detail::pochhammer(lambda + 1.0, k + j) /
                      (detail::pochhammer(lambda + 1.0, k) * detail::pochhammer(lambda + 1.0, j));
  CPoly p;
  double c = 1.0;
  for (int s = 0; s <= std::min(k, j); ++s) {
    p += CPoly::monomial(k - s, j - s, lead * c);
    // ratio of consecutive hypergeometric terms; denominator never vanishes
    // for s < min(k, j) when lambda > -1
    c *= double(-(k - s)) * double(-(j - s)) / ((-lambda - k - j + s) * double(s + 1));
  }
  return p;
}

inline double disk_norm2(double lambda, int k, int j) {
  return (lambda + 1.0) / (lambda + k + j + 1.0) * detail::factorial(k) *
         detail::factorial(j) /
         (detail::pochhammer(lambda + 1.0, k) * detail::pochhammer(lambda + 1.0, j));
}

namespace detail {

struct DeltoidLevels {
  std::mutex mu;
  std::vector<std::vector<CPoly>> t, u;
};
inline DeltoidLevels& deltoid_levels_cache() {
  static DeltoidLevels c;
  return c;
}

/// Chebyshev-style deltoid families from the coupled recurrence
///   P_k^{n+1} = 3 z P_k^n - P_{k+1}^n - P_{k-1}^{n-1},  k = 0..n,
/// closed by conjugation for the last index.  Second kind: out-of-range terms
/// are zero.  First kind boundary data: T_{-1}^{n-1} = T_1^n, and the k = n
/// equation picks up a factor 2 on the left.
inline void extend_deltoid(std::vector<std::vector<CPoly>>& lv, bool first_kind, int upto) {
  if (lv.empty()) {
    lv.push_back({CPoly::constant(1.0)});
    const double c = first_kind ? 1.0 : 3.0;
    lv.push_back({CPoly::monomial(1, 0, c), CPoly::monomial(0, 1, c)});
  }
  while (int(lv.size()) <= upto) {
    const int n = int(lv.size()) - 1;
    const auto& cur = lv[n];
    const auto& prev = lv[n - 1];
    std::vector<CPoly> next(n + 2);
    for (int k = 0; k <= n; ++k) {
      CPoly p = cur[k].shifted(1, 0) * 3.0;
      if (first_kind) {
        if (k == n) {
          p -= prev[n - 1];
          p *= 0.5;
        } else {
          p -= cur[k + 1];
          p -= (k >= 1) ? prev[k - 1] : cur[1];  // T_{-1}^{n-1} = T_1^n
        }
      } else {
        if (k + 1 <= n) p -= cur[k + 1];
        if (k >= 1) p -= prev[k - 1];
      }
      next[k] = std::move(p);
    }
    next[n + 1] = conj_poly(next[0]);
    lv.push_back(std::move(next));
  }
}

}  // namespace detail

/// Level n of the deltoid family (first kind = T, second kind = U).
inline std::vector<CPoly> deltoid_level(WeightKind kind, int n) {
  if (n < 0) throw Error("deltoid_level: negative degree");
  const bool first = kind == WeightKind::deltoid_first;
  if (!first && kind != WeightKind::deltoid_second)
    throw Error("deltoid_level: not a deltoid weight kind");
  auto& c = detail::deltoid_levels_cache();
  std::lock_guard<std::mutex> lk(c.mu);
  auto& lv = first ? c.t : c.u;
  detail::extend_deltoid(lv, first, std::max(n, 1));
  return lv[n];
}

/// Closed-form complex levels: hermite level n is {H_{n-k,k}}_k, disk level n
/// is {P_{n-k,k}^lambda}_k, both leading in z^{n-k} zbar^k.
inline std::vector<CPoly> hermite_level(int n) {
  std::vector<CPoly> v;
  for (int k = 0; k <= n; ++k) v.push_back(hermite_complex(n - k, k));
  return v;
}
inline std::vector<CPoly> disk_level(double lambda, int n) {
  std::vector<CPoly> v;
  for (int k = 0; k <= n; ++k) v.push_back(disk_complex(lambda, n - k, k));
  return v;
}

/// Deltoid basis levels.  The second-kind family is orthonormal as
/// constructed (all norms are 1 against the unit-mass weight); the first kind
/// is normalized by quadrature norms.  Monic levels divide by the leading
/// coefficient.
inline BasisSet deltoid_basis(const WeightSpec& w, int n, Normalization norm) {
  if (!w.is_deltoid()) throw Error("deltoid_basis: not a deltoid weight");
  BasisSet out{w, norm, {}};
  for (int m = 0; m <= n; ++m) {
    std::vector<CPoly> polys = deltoid_level(w.kind(), m);
    if (norm == Normalization::monic) {
      for (int k = 0; k <= m; ++k) {
        const Complex lead = polys[k].coeff(m - k, k);
        polys[k] *= 1.0 / lead;
      }
    } else if (w.kind() == WeightKind::deltoid_first) {
      for (auto& p : polys) {
        const double h2 = inner_product(w, p, p).real();
        if (h2 <= 0.0) throw Error("deltoid_basis: nonpositive quadrature norm");
        p *= 1.0 / std::sqrt(h2);
      }
    }
    BasisLevel lv{m, std::move(polys), Eigen::MatrixXcd(), norm};
    if (norm == Normalization::orthonormal && w.kind() == WeightKind::deltoid_second)
      lv.gram = Eigen::MatrixXcd::Identity(m + 1, m + 1);
    else
      lv.gram = gram(w, lv.polys, lv.polys);
    out.levels.push_back(std::move(lv));
  }
  return out;
}

/// Orthogonal basis for any weight: moment pipeline for hermite/disk/custom,
/// recurrence-defined families for the deltoid weights.
inline BasisSet build_basis(const WeightSpec& w, int n, Normalization norm) {
  if (w.is_deltoid()) return deltoid_basis(w, n, norm);
  BasisSet monic = monic_basis(w, n);
  if (norm == Normalization::monic) return monic;
  BasisSet out{w, Normalization::orthonormal, {}};
  for (const auto& lv : monic.levels) out.levels.push_back(orthonormalize(lv));
  return out;
}

enum class RealFamily { hermite_product, hermite_polar, disk_polar };

namespace detail {

inline RPoly real_part_of(const CPoly& p) {
  auto [re, im] = complex_to_xy(p);
  if (im.max_abs_coeff() > 1e-10 * std::max(1.0, re.max_abs_coeff()))
    throw Error("real family construction produced a genuinely complex polynomial");
  return re;
}

/// cos(m theta) r^m and sin(m theta) r^m as polynomials in (z, zbar).
inline CPoly harmonic_cos(int m) {
  CPoly p = CPoly::monomial(m, 0, 0.5);
  p += CPoly::monomial(0, m, 0.5);
  return p;
}
inline CPoly harmonic_sin(int m) {
  CPoly p = CPoly::monomial(m, 0, Complex(0, -0.5));
  p += CPoly::monomial(0, m, Complex(0, 0.5));
  return p;
}

/// radial(r^2) expressed in (z, zbar): substitute r^2 = z zbar into a
/// coefficient vector over t (ascending), optionally with t = 2 r^2 - 1.
inline CPoly radial_subst(const std::vector<double>& coeffs, bool shifted_arg) {
  CPoly t = shifted_arg ? CPoly::monomial(1, 1, 2.0) - CPoly::constant(1.0)
                        : CPoly::monomial(1, 1);
  CPoly acc, tp = CPoly::constant(1.0);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    acc += tp * coeffs[i];
    if (i + 1 < coeffs.size()) tp = tp * t;
  }
  return acc;
}

}  // namespace detail

/// Classical real orthogonal levels, used as conversion oracles (normalization
/// and sign conventions differ from the bridge output by design):
///  - hermite_product: H_{n-k}(x) H_k(y)
///  - hermite_polar:   L_j^{(m)}(r^2) r^m {cos, sin}(m theta), m = n - 2j
///  - disk_polar:      P_j^{(lambda, m)}(2 r^2 - 1) r^m {cos, sin}(m theta)
inline std::vector<RPoly> real_family(RealFamily fam, double lambda, int n) {
  if (n < 0) throw Error("real_family: negative degree");
  std::vector<RPoly> out(n + 1);
  if (fam == RealFamily::hermite_product) {
    for (int k = 0; k <= n; ++k) {
      const auto cx = hermite1d_coeffs(n - k);
      const auto cy = hermite1d_coeffs(k);
      RPoly p;
      for (size_t i = 0; i < cx.size(); ++i)
        for (size_t j = 0; j < cy.size(); ++j)
          if (cx[i] != 0.0 && cy[j] != 0.0)
            p += RPoly::monomial(int(i), int(j), cx[i] * cy[j]);
      out[k] = std::move(p);
    }
    return out;
  }
  for (int k = 0; k <= n; ++k) {
    const bool sine = 2 * k > n;
    const int j = sine ? n - k : k;
    const int m = n - 2 * j;
    std::vector<double> rad = (fam == RealFamily::hermite_polar)
                                  ? laguerre_coeffs(j, double(m))
                                  : jacobi_coeffs(j, lambda, double(m));
    CPoly radial = detail::radial_subst(rad, fam == RealFamily::disk_polar);
    CPoly ang = m == 0 ? CPoly::constant(1.0)
                       : (sine ? detail::harmonic_sin(m) : detail::harmonic_cos(m));
    out[k] = detail::real_part_of(radial * ang);
  }
  return out;
}

}  // namespace ortho2c
