#pragma once

#include <Eigen/Dense>
#include <vector>

#include "ortho2c/basis.hpp"

namespace ortho2c {

/// Unitary change of basis between a conjugation-symmetric complex level and
/// a real level: row k is (e_k - i e_{n-k})/sqrt(2) for k < n/2, the bare
/// middle vector e_{n/2} for even n, and (e_{n-k} + i e_k)/sqrt(2) above.
/// Satisfies L L^* = I and L L^t = J (the flip matrix).
inline Eigen::MatrixXcd build_L(int n) {
  if (n < 0) throw Error("build_L: negative degree");
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd L = Eigen::MatrixXcd::Zero(n + 1, n + 1);
  for (int k = 0; k <= n; ++k) {
    if (2 * k < n) {
      L(k, k) = s;
      L(k, n - k) = Complex(0, -s);
    } else if (2 * k == n) {
      L(k, k) = 1.0;
    } else {
      L(k, n - k) = s;
      L(k, k) = Complex(0, s);
    }
  }
  const double uni = (L * L.adjoint() - Eigen::MatrixXcd::Identity(n + 1, n + 1))
                         .cwiseAbs()
                         .maxCoeff();
  Eigen::MatrixXcd J = Eigen::MatrixXcd::Zero(n + 1, n + 1);
  for (int k = 0; k <= n; ++k) J(k, n - k) = 1.0;
  const double flip = (L * L.transpose() - J).cwiseAbs().maxCoeff();
  if (uni > 1e-14 || flip > 1e-14) throw Error("build_L: invariants violated");
  return L;
}

struct RealBasisSet {
  WeightSpec weight;
  Normalization norm = Normalization::orthonormal;
  std::vector<std::vector<RPoly>> levels;
  int degree() const { return int(levels.size()) - 1; }
};

/// Real level from a conjugation-symmetric complex level: P = L^* Q.  Each
/// output must have vanishing imaginary part; a residue above tolerance means
/// the input level was not conjugation-symmetric.
inline std::vector<RPoly> real_from_complex(const BasisLevel& lv) {
  const int n = lv.n;
  const Eigen::MatrixXcd L = build_L(n);
  std::vector<RPoly> out;
  out.reserve(n + 1);
  for (int k = 0; k <= n; ++k) {
    CPoly q;
    for (int j = 0; j <= n; ++j) q += lv.polys[j] * std::conj(L(j, k));
    auto [re, im] = complex_to_xy(q);
    if (im.max_abs_coeff() > 1e-10 * std::max(1.0, re.max_abs_coeff()))
      throw Error("real_from_complex: complex residue; input level is not conjugation-symmetric");
    out.push_back(std::move(re));
  }
  return out;
}

/// Complex level from a real one: Q = L P, with the real polynomials first
/// rewritten in (z, zbar).  Round-trips with real_from_complex.
inline BasisLevel complex_from_real(const std::vector<RPoly>& plist, int n,
                                    Normalization norm = Normalization::orthonormal) {
  if (int(plist.size()) != n + 1) throw Error("complex_from_real: level size mismatch");
  const Eigen::MatrixXcd L = build_L(n);
  std::vector<CPoly> cz;
  cz.reserve(n + 1);
  for (const auto& p : plist) cz.push_back(to_complex_vars(p));
  BasisLevel lv{n, {}, Eigen::MatrixXcd::Identity(n + 1, n + 1), norm};
  for (int k = 0; k <= n; ++k) {
    CPoly q;
    for (int j = 0; j <= n; ++j) q += cz[j] * L(k, j);
    lv.polys.push_back(std::move(q));
  }
  return lv;
}

inline RealBasisSet real_basis(const BasisSet& bs) {
  RealBasisSet out{bs.weight, bs.norm, {}};
  out.levels.reserve(bs.levels.size());
  for (const auto& lv : bs.levels) out.levels.push_back(real_from_complex(lv));
  return out;
}

inline Eigen::VectorXd eval_real_level(const std::vector<RPoly>& lv, double x, double y) {
  Eigen::VectorXd v(lv.size());
  for (size_t k = 0; k < lv.size(); ++k) v(k) = eval(lv[k], x, y);
  return v;
}

}  // namespace ortho2c
