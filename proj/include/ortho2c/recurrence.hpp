#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "ortho2c/basis.hpp"
#include "ortho2c/bridge.hpp"
#include "ortho2c/sampling.hpp"

namespace ortho2c {

/// Half-turn conjugate of a coefficient matrix: reverse rows and columns and
/// conjugate the entries (M -> J conj(M) J).
inline Eigen::MatrixXcd vee(const Eigen::MatrixXcd& m) {
  Eigen::MatrixXcd v(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      v(i, j) = std::conj(m(m.rows() - 1 - i, m.cols() - 1 - j));
  return v;
}

/// Coefficients of z Q_n = alpha_n Q_{n+1} + beta_n Q_n + gamma_{n-1} Q_{n-1}.
/// Shapes at degree n: alpha (n+1)x(n+2), beta (n+1)x(n+1), gamma (n+1)xn.
struct LevelCoeffs {
  Eigen::MatrixXcd alpha, beta, gamma;
};

struct RecurrenceData {
  std::vector<LevelCoeffs> levels;  // levels[n] holds the degree-n relation
  double residual = 0.0;            // max reconstruction error at sample points
  int degree() const { return int(levels.size()) - 1; }
};

namespace detail {

inline Eigen::MatrixXcd coeffs_against(const WeightSpec& w, const std::vector<CPoly>& lhs,
                                       const BasisLevel& target) {
  Eigen::MatrixXcd G = gram(w, lhs, target.polys);
  if (target.norm == Normalization::orthonormal) return G;
  // expansion coefficients in a non-orthonormal level need the level Gram
  return target.gram.transpose().ldlt().solve(G.transpose()).transpose();
}

}  // namespace detail

/// Extract the three-term data from basis levels 0..N (orthonormal or monic);
/// produces relations for degrees 0..N-1 and verifies them by evaluation at
/// seeded points.  Throws if the reconstruction residual exceeds tol.
inline RecurrenceData extract_complex_three_term(const BasisSet& bs, double tol = 1e-9,
                                                 int check_points = 50, uint64_t seed = 42) {
  const int N = bs.degree();
  if (N < 1) throw Error("extract_complex_three_term: need at least levels 0 and 1");
  RecurrenceData out;
  for (int n = 0; n + 1 <= N; ++n) {
    std::vector<CPoly> zq;
    for (const auto& q : bs.level(n).polys) zq.push_back(q.shifted(1, 0));
    LevelCoeffs lc;
    lc.alpha = detail::coeffs_against(bs.weight, zq, bs.level(n + 1));
    lc.beta = detail::coeffs_against(bs.weight, zq, bs.level(n));
    lc.gamma = n >= 1 ? detail::coeffs_against(bs.weight, zq, bs.level(n - 1))
                      : Eigen::MatrixXcd(1, 0);
    out.levels.push_back(std::move(lc));
  }

  const auto pts = sample_points(bs.weight, check_points, seed);
  double res = 0.0;
  for (const Complex& z : pts) {
    std::vector<Eigen::VectorXcd> vals;
    for (int m = 0; m <= N; ++m) vals.push_back(eval_level(bs.level(m), z));
    for (int n = 0; n + 1 <= N; ++n) {
      const auto& lc = out.levels[n];
      Eigen::VectorXcd rhs = lc.alpha * vals[n + 1] + lc.beta * vals[n];
      if (n >= 1) rhs += lc.gamma * vals[n - 1];
      const double scale = std::max(1.0, vals[n].cwiseAbs().maxCoeff() * std::abs(z));
      res = std::max(res, (z * vals[n] - rhs).cwiseAbs().maxCoeff() / scale);
    }
  }
  out.residual = res;
  if (res > tol)
    throw Error("three-term extraction: reconstruction residual " + std::to_string(res) +
                " exceeds tolerance");
  return out;
}

/// Exact recurrence data of the second-kind deltoid family:
/// alpha_n = [I | 0]/3, beta_n = supershift/3, gamma_{n-1} = [0 ; I]/3.
inline RecurrenceData deltoid_u_recurrence(int max_degree) {
  RecurrenceData out;
  for (int n = 0; n <= max_degree; ++n) {
    LevelCoeffs lc;
    lc.alpha = Eigen::MatrixXcd::Zero(n + 1, n + 2);
    for (int k = 0; k <= n; ++k) lc.alpha(k, k) = 1.0 / 3.0;
    lc.beta = Eigen::MatrixXcd::Zero(n + 1, n + 1);
    for (int k = 0; k < n; ++k) lc.beta(k, k + 1) = 1.0 / 3.0;
    lc.gamma = Eigen::MatrixXcd::Zero(n + 1, std::max(n, 0));
    for (int k = 1; k <= n; ++k) lc.gamma(k, k - 1) = 1.0 / 3.0;
    out.levels.push_back(std::move(lc));
  }
  out.residual = 0.0;
  return out;
}

/// Structural link between the down and up coefficients:
///   gamma_{n-1} H_{n-1} = J_{n+1} (alpha_{n-1} H_n)^t J_n.
/// Returns the maximum residual over available degrees; grams[m] is the
/// level-m Gram matrix (identity for orthonormal levels).
inline double check_gamma_alpha(const RecurrenceData& rd,
                                const std::vector<Eigen::MatrixXcd>& grams) {
  double res = 0.0;
  for (int n = 1; n <= rd.degree(); ++n) {
    const Eigen::MatrixXcd& gam = rd.levels[n].gamma;
    const Eigen::MatrixXcd& alf = rd.levels[n - 1].alpha;
    Eigen::MatrixXcd lhs = gam * grams.at(n - 1);
    Eigen::MatrixXcd prod = (alf * grams.at(n)).transpose();  // (n+1) x n
    Eigen::MatrixXcd rhs(prod.rows(), prod.cols());
    for (Eigen::Index i = 0; i < prod.rows(); ++i)
      for (Eigen::Index j = 0; j < prod.cols(); ++j)
        rhs(i, j) = prod(prod.rows() - 1 - i, prod.cols() - 1 - j);
    res = std::max(res, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return res;
}

/// Real three-term data: x_i P_n = A_{n,i} P_{n+1} + B_{n,i} P_n + A_{n-1,i}^t P_{n-1}.
struct RealLevelCoeffs {
  Eigen::MatrixXd A1, A2, B1, B2;
};

struct RealRecurrenceData {
  std::vector<RealLevelCoeffs> levels;
  double residual = 0.0;
  int degree() const { return int(levels.size()) - 1; }
};

/// Extraction for orthonormal real levels.  Inner products are taken by
/// rewriting in (z, zbar) against the moment table.
inline RealRecurrenceData extract_real_three_term(const RealBasisSet& rbs, double tol = 1e-9,
                                                  int check_points = 50, uint64_t seed = 42) {
  const int N = rbs.degree();
  if (N < 1) throw Error("extract_real_three_term: need at least levels 0 and 1");
  if (rbs.norm != Normalization::orthonormal)
    throw Error("extract_real_three_term: levels must be orthonormal");
  const WeightSpec& w = rbs.weight;

  std::vector<std::vector<CPoly>> zlv(N + 1);
  for (int m = 0; m <= N; ++m)
    for (const auto& p : rbs.levels[m]) zlv[m].push_back(to_complex_vars(p));

  RealRecurrenceData out;
  for (int n = 0; n + 1 <= N; ++n) {
    auto project = [&](int da, int db, const std::vector<CPoly>& target) {
      // multiply level n by x (da=1) or y (db=1) in (z, zbar) variables:
      // x = (z + zbar)/2, y = (z - zbar)/(2i)
      std::vector<CPoly> lhs;
      for (const auto& q : zlv[n]) {
        CPoly m;
        if (da) {
          m = q.shifted(1, 0) * 0.5 + q.shifted(0, 1) * 0.5;
        } else {
          m = q.shifted(1, 0) * Complex(0, -0.5) + q.shifted(0, 1) * Complex(0, 0.5);
        }
        lhs.push_back(std::move(m));
      }
      (void)db;
      return gram(w, lhs, target);
    };
    RealLevelCoeffs lc;
    const auto real_of = [](const Eigen::MatrixXcd& m, const char* what) {
      if (m.imag().cwiseAbs().maxCoeff() > 1e-9 * std::max(1.0, m.cwiseAbs().maxCoeff()))
        throw Error(std::string("extract_real_three_term: ") + what + " not real");
      return Eigen::MatrixXd(m.real());
    };
    lc.A1 = real_of(project(1, 0, zlv[n + 1]), "A1");
    lc.A2 = real_of(project(0, 1, zlv[n + 1]), "A2");
    lc.B1 = real_of(project(1, 0, zlv[n]), "B1");
    lc.B2 = real_of(project(0, 1, zlv[n]), "B2");
    out.levels.push_back(std::move(lc));
  }

  const auto pts = sample_points(w, check_points, seed);
  double res = 0.0;
  for (const Complex& z : pts) {
    std::vector<Eigen::VectorXd> vals;
    for (int m = 0; m <= N; ++m) vals.push_back(eval_real_level(rbs.levels[m], z.real(), z.imag()));
    for (int n = 0; n + 1 <= N; ++n) {
      for (int axis = 0; axis < 2; ++axis) {
        const double xi = axis == 0 ? z.real() : z.imag();
        const Eigen::MatrixXd& A = axis == 0 ? out.levels[n].A1 : out.levels[n].A2;
        const Eigen::MatrixXd& B = axis == 0 ? out.levels[n].B1 : out.levels[n].B2;
        Eigen::VectorXd rhs = A * vals[n + 1] + B * vals[n];
        if (n >= 1) {
          const Eigen::MatrixXd& Ap = axis == 0 ? out.levels[n - 1].A1 : out.levels[n - 1].A2;
          rhs += Ap.transpose() * vals[n - 1];
        }
        const double scale = std::max(1.0, vals[n].cwiseAbs().maxCoeff() * std::abs(xi));
        res = std::max(res, (xi * vals[n] - rhs).cwiseAbs().maxCoeff() / scale);
      }
    }
  }
  out.residual = res;
  if (res > tol)
    throw Error("real three-term extraction: reconstruction residual " + std::to_string(res) +
                " exceeds tolerance");
  return out;
}

/// Complex coefficients from real ones: alpha_n = L_n (A1 + i A2) L_{n+1}^*,
/// beta_n = L_n (B1 + i B2) L_n^*.
inline std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> translate_coeffs(const RealLevelCoeffs& rc,
                                                                      int n) {
  const Eigen::MatrixXcd Ln = build_L(n), Lnp = build_L(n + 1);
  const Eigen::MatrixXcd M = rc.A1.cast<Complex>() + Complex(0, 1) * rc.A2.cast<Complex>();
  const Eigen::MatrixXcd B = rc.B1.cast<Complex>() + Complex(0, 1) * rc.B2.cast<Complex>();
  return {Ln * M * Lnp.adjoint(), Ln * B * Ln.adjoint()};
}

/// Inverse of translate_coeffs: split alpha (or beta) back into the two real
/// coefficient matrices.
inline std::pair<Eigen::MatrixXd, Eigen::MatrixXd> split_coeffs(const Eigen::MatrixXcd& alpha,
                                                                int n, bool is_beta = false) {
  const Eigen::MatrixXcd Ln = build_L(n);
  const Eigen::MatrixXcd R = is_beta ? build_L(n) : build_L(n + 1);
  const Eigen::MatrixXcd M = Ln.adjoint() * alpha * R;
  return {Eigen::MatrixXd(M.real()), Eigen::MatrixXd(M.imag())};
}

struct FavardReport {
  int rank_plus = 0, rank_minus = 0, rank_stacked = 0;
  int expect_rows = 0, expect_cols = 0;
  bool pass = false;
};

/// Rank conditions on alpha_n required for a genuine orthogonality measure:
/// alpha + vee(alpha) and alpha - vee(alpha) must have full row rank n+1, and
/// the stacked pair must have full column rank n+2.
inline FavardReport favard_rank_check(const Eigen::MatrixXcd& alpha, double rel_tol = 1e-10) {
  const auto rank_of = [&](const Eigen::MatrixXcd& m) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv(i) > rel_tol * sv(0)) ++r;
    return r;
  };
  const Eigen::MatrixXcd av = vee(alpha);
  FavardReport rep;
  rep.expect_rows = int(alpha.rows());
  rep.expect_cols = int(alpha.cols());
  rep.rank_plus = rank_of(alpha + av);
  rep.rank_minus = rank_of(alpha - av);
  Eigen::MatrixXcd stacked(2 * alpha.rows(), alpha.cols());
  stacked << alpha, av;
  rep.rank_stacked = rank_of(stacked);
  rep.pass = rep.rank_plus == rep.expect_rows && rep.rank_minus == rep.expect_rows &&
             rep.rank_stacked == rep.expect_cols;
  return rep;
}

/// Residuals of the three block identities equivalent to commutativity of the
/// truncated multiplication operators by z and zbar.  All vanish for
/// coefficients extracted from a genuine orthonormal basis.
inline std::array<double, 3> commuting_check(const RecurrenceData& rd) {
  std::array<double, 3> res{0.0, 0.0, 0.0};
  const int N = rd.degree();
  for (int n = 0; n <= N; ++n) {
    const auto& a_n = rd.levels[n].alpha;
    const auto& b_n = rd.levels[n].beta;
    if (n + 1 <= N) {
      const auto& a_n1 = rd.levels[n + 1].alpha;
      const auto& b_n1 = rd.levels[n + 1].beta;
      res[0] = std::max(res[0],
                        (a_n * vee(a_n1) - vee(a_n) * a_n1).cwiseAbs().maxCoeff());
      res[1] = std::max(res[1], (a_n * vee(b_n1) + b_n * vee(a_n) - vee(b_n) * a_n -
                                 vee(a_n) * b_n1)
                                    .cwiseAbs()
                                    .maxCoeff());
    }
    if (n >= 1) {
      const auto& a_p = rd.levels[n - 1].alpha;
      const Eigen::MatrixXcd lhs = a_n * a_n.adjoint() + b_n * vee(b_n) +
                                   vee(a_p.adjoint()) * vee(a_p);
      const Eigen::MatrixXcd rhs = vee(a_n) * vee(a_n).adjoint() + vee(b_n) * b_n +
                                   a_p.adjoint() * a_p;
      res[2] = std::max(res[2], (lhs - rhs).cwiseAbs().maxCoeff());
    }
  }
  return res;
}

}  // namespace ortho2c
