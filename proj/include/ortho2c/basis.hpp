#pragma once

#include <Eigen/Dense>
#include <vector>

#include "ortho2c/weight.hpp"

namespace ortho2c {

enum class Normalization { monic, orthonormal };

/// One degree level: polys[k] has leading monomial proportional to
/// z^{n-k} zbar^k; gram(k, l) = <polys[k], polys[l]>.
struct BasisLevel {
  int n = 0;
  std::vector<CPoly> polys;
  Eigen::MatrixXcd gram;
  Normalization norm = Normalization::monic;
};

struct BasisSet {
  WeightSpec weight;
  Normalization norm = Normalization::monic;
  std::vector<BasisLevel> levels;  // levels[m] has degree m
  int degree() const { return int(levels.size()) - 1; }
  const BasisLevel& level(int m) const {
    if (m < 0 || m >= int(levels.size())) throw Error("basis level out of range");
    return levels[size_t(m)];
  }
};

/// Evaluate a whole level at a point.
inline Eigen::VectorXcd eval_level(const BasisLevel& lv, Complex z) {
  Eigen::VectorXcd v(lv.polys.size());
  for (size_t k = 0; k < lv.polys.size(); ++k) v(k) = eval(lv.polys[k], z);
  return v;
}

/// Monic orthogonal levels 0..n built degree by degree: the degree-m
/// correction coefficients solve the Hermitian positive definite system with
/// the Gram matrix of all lower monomials.  For radial weights the system is
/// block diagonal in a - b (charge), which the dense solve inherits for free.
inline BasisSet monic_basis(const WeightSpec& w, int n) {
  if (n < 0) throw Error("monic_basis: negative degree");
  BasisSet out{w, Normalization::monic, {}};
  out.levels.reserve(n + 1);

  BasisLevel l0{0, {CPoly::constant(1.0)}, Eigen::MatrixXcd::Zero(1, 1), Normalization::monic};
  l0.gram(0, 0) = moment(w, 0, 0);
  out.levels.push_back(std::move(l0));

  for (int m = 1; m <= n; ++m) {
    const int nl = monomial_count(m - 1);  // lower monomials
    Eigen::MatrixXcd G(nl, nl);
    for (int p = 0; p < m; ++p)
      for (int s = 0; s <= p; ++s)
        for (int j = 0; j < m; ++j)
          for (int t = 0; t <= j; ++t)
            G(monomial_index(p, s), monomial_index(j, t)) = moment(w, j - t + s, t + p - s);
    Eigen::MatrixXcd rhs(nl, m + 1);
    for (int k = 0; k <= m; ++k)
      for (int p = 0; p < m; ++p)
        for (int s = 0; s <= p; ++s)
          rhs(monomial_index(p, s), k) = moment(w, m - k + s, k + p - s);

    Eigen::LDLT<Eigen::MatrixXcd> ldlt(G);
    if (ldlt.info() != Eigen::Success)
      throw Error("monic basis: lower-monomial Gram factorization failed");
    const Eigen::MatrixXcd C = ldlt.solve(rhs);

    BasisLevel lv{m, {}, Eigen::MatrixXcd(m + 1, m + 1), Normalization::monic};
    lv.polys.reserve(m + 1);
    for (int k = 0; k <= m; ++k) {
      CPoly q = CPoly::monomial(m - k, k);
      for (int j = 0; j < m; ++j)
        for (int t = 0; t <= j; ++t)
          q -= CPoly::monomial(j - t, t, C(monomial_index(j, t), k));
      lv.polys.push_back(std::move(q));
    }
    lv.gram = gram(w, lv.polys, lv.polys);
    out.levels.push_back(std::move(lv));
  }
  return out;
}

/// Independent construction of the monic polynomial Q_{k,n} as a ratio of
/// bordered moment determinants, cofactor-expanded along the symbolic last
/// row.  O((n^2)^4) determinant work; guarded to small degrees, intended as
/// a cross-check oracle for monic_basis.
inline CPoly determinant_oracle(const WeightSpec& w, int k, int n) {
  if (n > 6) throw Error("determinant_oracle: degree capped at 6");
  if (k < 0 || k > n) throw Error("determinant_oracle: index out of range");
  if (n == 0) return CPoly::constant(1.0);
  const int N = monomial_count(n - 1);
  Eigen::MatrixXcd top(N, N + 1);  // moment rows of the bordered matrix
  for (int j = 0; j < n; ++j)
    for (int s = 0; s <= j; ++s) {
      const int r = monomial_index(j, s);
      for (int p = 0; p < n; ++p)
        for (int t = 0; t <= p; ++t) top(r, monomial_index(p, t)) = moment(w, j - s + t, s + p - t);
      top(r, N) = moment(w, j - s + n - k, s + k);
    }
  const Complex det_m = Eigen::MatrixXcd(top.leftCols(N)).determinant();
  if (std::abs(det_m) == 0.0) throw Error("determinant_oracle: singular moment matrix");

  CPoly q;
  for (int c = 0; c <= N; ++c) {
    Eigen::MatrixXcd minor(N, N);
    int cc = 0;
    for (int col = 0; col <= N; ++col) {
      if (col == c) continue;
      minor.col(cc++) = top.col(col);
    }
    const double sign = ((N + c) % 2 == 0) ? 1.0 : -1.0;
    const Complex coef = sign * minor.determinant() / det_m;
    if (c == N) {
      q += CPoly::monomial(n - k, k, coef);
    } else {
      // the symbolic last row carries z^t zbar^{p-t} at block position (p, t)
      int p = 0;
      while (monomial_index(p + 1, 0) <= c) ++p;
      const int t = c - monomial_index(p, 0);
      q += CPoly::monomial(t, p - t, coef);
    }
  }
  return q;
}

/// Inverse square root of a Hermitian positive definite matrix through its
/// eigendecomposition.  Unlike a Cholesky-based whitening this commutes with
/// the half-turn conjugation of the level Gram, so orthonormalization
/// preserves the basis conjugation symmetry.
inline Eigen::MatrixXcd hermitian_inv_sqrt(const Eigen::MatrixXcd& H, double rel_tol = 1e-12) {
  if (H.rows() != H.cols()) throw Error("hermitian_inv_sqrt: matrix not square");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
  if (es.info() != Eigen::Success) throw Error("hermitian_inv_sqrt: eigensolve failed");
  const double lo = es.eigenvalues().minCoeff(), hi = es.eigenvalues().maxCoeff();
  if (lo <= rel_tol * std::max(hi, 0.0))
    throw Error("hermitian_inv_sqrt: matrix not positive definite, min eigenvalue " +
                std::to_string(lo));
  Eigen::VectorXd d = es.eigenvalues().cwiseSqrt().cwiseInverse();
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

/// Orthonormal level from a monic one: Q' = H^{-1/2} Q.
inline BasisLevel orthonormalize(const BasisLevel& lv) {
  const Eigen::MatrixXcd S = hermitian_inv_sqrt(lv.gram);
  const int m = int(lv.polys.size());
  BasisLevel out{lv.n, {}, Eigen::MatrixXcd::Identity(m, m), Normalization::orthonormal};
  out.polys.reserve(m);
  for (int k = 0; k < m; ++k) {
    CPoly q;
    for (int j = 0; j < m; ++j) q += lv.polys[j] * S(k, j);
    out.polys.push_back(std::move(q));
  }
  return out;
}

}  // namespace ortho2c
