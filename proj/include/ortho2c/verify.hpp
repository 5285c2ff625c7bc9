#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ortho2c/basis.hpp"
#include "ortho2c/bridge.hpp"
#include "ortho2c/families.hpp"
#include "ortho2c/kernel.hpp"
#include "ortho2c/recurrence.hpp"
#include "ortho2c/sampling.hpp"
#include "ortho2c/zeros.hpp"

namespace ortho2c {

struct CheckResult {
  std::string name;
  bool pass = false;
  double value = 0.0;  // worst residual or count, depending on the check
  std::string detail;
};

namespace detail {

inline void run_check(std::vector<CheckResult>& out, const std::string& name,
                      const std::function<CheckResult()>& body) {
  try {
    CheckResult r = body();
    r.name = name;
    out.push_back(std::move(r));
  } catch (const std::exception& e) {
    out.push_back({name, false, 0.0, e.what()});
  }
}

}  // namespace detail

/// Runs the full invariant suite for one weight.  `tol` is the base
/// orthogonality tolerance (deltoid checks are relaxed to 1e-6 because their
/// moments come from adaptive quadrature).
inline std::vector<CheckResult> verify_weight(const WeightSpec& w, int max_degree,
                                              double tol = 1e-9, uint64_t seed = 42) {
  std::vector<CheckResult> out;
  int nv = max_degree;
  if (w.kind() == WeightKind::custom) nv = std::min(nv, w.table().max_degree / 2);
  if (nv < 1) {
    out.push_back({"setup", false, 0.0, "weight supports no usable degree (moment table too shallow)"});
    return out;
  }
  const double tol_w = w.is_deltoid() ? std::max(tol, 1e-6) : tol;
  const double struct_tol = w.is_deltoid() ? std::max(tol, 1e-6) : 1e-10;

  detail::run_check(out, "moment-matrix", [&] {
    MomentMatrix M = moment_matrix(w, nv);
    return CheckResult{"", true, M.min_eig,
                       "hermitian, conjugation-symmetric, positive definite (min eig " +
                           std::to_string(M.min_eig) + ")"};
  });

  BasisSet monic = build_basis(w, nv, Normalization::monic);
  BasisSet ortho = build_basis(w, nv, Normalization::orthonormal);

  detail::run_check(out, "monic-structure", [&] {
    double worst = 0.0;
    for (int n = 0; n <= nv; ++n)
      for (int k = 0; k <= n; ++k) {
        const CPoly& q = monic.level(n).polys[k];
        worst = std::max(worst, std::abs(q.coeff(n - k, k) - 1.0));
        for (int s = 0; s <= n; ++s)
          if (s != k) worst = std::max(worst, std::abs(q.coeff(n - s, s)));
      }
    return CheckResult{"", worst <= 1e-10, worst, "leading term z^{n-k} zbar^k with coefficient 1"};
  });

  detail::run_check(out, "monic-orthogonality", [&] {
    double worst = 0.0;
    for (int n = 1; n <= nv; ++n)
      for (int m = 0; m < n; ++m) {
        const Eigen::MatrixXcd G = gram(w, monic.level(n).polys, monic.level(m).polys);
        for (int k = 0; k <= n; ++k)
          for (int l = 0; l <= m; ++l) {
            const double scale =
                std::sqrt(std::abs(monic.level(n).gram(k, k) * monic.level(m).gram(l, l)));
            worst = std::max(worst, std::abs(G(k, l)) / std::max(1.0, scale));
          }
      }
    return CheckResult{"", worst <= tol_w, worst, "lower-degree inner products vanish"};
  });

  detail::run_check(out, "conjugation-symmetry", [&] {
    double worst = 0.0;
    for (const BasisSet* bs : {&monic, &ortho})
      for (int n = 0; n <= nv; ++n)
        for (int k = 0; k <= n; ++k) {
          CPoly d = conj_poly(bs->level(n).polys[k]);
          d -= bs->level(n).polys[n - k];
          worst = std::max(worst, d.max_abs_coeff());
        }
    return CheckResult{"", worst <= struct_tol, worst,
                       "conjugating the k-th polynomial gives the (n-k)-th"};
  });

  detail::run_check(out, "orthonormal-gram", [&] {
    double worst = 0.0;
    for (int n = 0; n <= nv; ++n) {
      const Eigen::MatrixXcd G = gram(w, ortho.level(n).polys, ortho.level(n).polys);
      worst = std::max(worst, (G - Eigen::MatrixXcd::Identity(n + 1, n + 1)).cwiseAbs().maxCoeff());
      for (int m = 0; m < n; ++m) {
        const Eigen::MatrixXcd C = gram(w, ortho.level(n).polys, ortho.level(m).polys);
        worst = std::max(worst, C.cwiseAbs().maxCoeff());
      }
    }
    return CheckResult{"", worst <= tol_w, worst, "measured Gram matrices are identities"};
  });

  detail::run_check(out, "bridge-unitary", [&] {
    double worst = 0.0;
    for (int n = 0; n <= nv + 1; ++n) {
      const Eigen::MatrixXcd L = build_L(n);
      worst = std::max(
          worst,
          (L * L.adjoint() - Eigen::MatrixXcd::Identity(n + 1, n + 1)).cwiseAbs().maxCoeff());
      Eigen::MatrixXcd LLt = L * L.transpose();
      for (int i = 0; i <= n; ++i) LLt(i, n - i) -= 1.0;
      worst = std::max(worst, LLt.cwiseAbs().maxCoeff());
    }
    return CheckResult{"", worst <= 1e-14, worst, "L L* = I and L L^t = J"};
  });

  RealBasisSet rbs = real_basis(ortho);

  detail::run_check(out, "real-levels", [&] {
    double worst = 0.0;
    for (int n = 0; n <= nv; ++n) {
      std::vector<CPoly> zp;
      for (const auto& p : rbs.levels[n]) zp.push_back(to_complex_vars(p));
      const Eigen::MatrixXcd G = gram(w, zp, zp);
      worst = std::max(worst, (G - Eigen::MatrixXcd::Identity(n + 1, n + 1)).cwiseAbs().maxCoeff());
    }
    return CheckResult{"", worst <= tol_w, worst,
                       "bridged real polynomials are real and orthonormal"};
  });

  RecurrenceData rd = w.kind() == WeightKind::deltoid_second
                          ? deltoid_u_recurrence(nv - 1)
                          : extract_complex_three_term(ortho, tol_w * 10, 40, seed);

  detail::run_check(out, "recurrence-residual", [&] {
    return CheckResult{"", rd.residual <= tol_w * 10, rd.residual,
                       "z Q_n reconstructed from neighbor levels at sample points"};
  });

  detail::run_check(out, "gamma-alpha", [&] {
    std::vector<Eigen::MatrixXcd> grams;
    for (int m = 0; m <= nv; ++m) grams.push_back(Eigen::MatrixXcd::Identity(m + 1, m + 1));
    const double r = check_gamma_alpha(rd, grams);
    return CheckResult{"", r <= struct_tol, r, "down coefficient is the flipped up coefficient"};
  });

  if (w.centrally_symmetric()) {
    detail::run_check(out, "beta-zero", [&] {
      double worst = 0.0;
      for (const auto& lc : rd.levels) worst = std::max(worst, lc.beta.cwiseAbs().maxCoeff());
      return CheckResult{"", worst <= 1e-10, worst,
                         "central symmetry forces vanishing diagonal coefficients"};
    });
  }

  detail::run_check(out, "favard-ranks", [&] {
    bool all = true;
    for (const auto& lc : rd.levels) all = all && favard_rank_check(lc.alpha).pass;
    return CheckResult{"", all, all ? 1.0 : 0.0,
                       "alpha +- flip full row rank, stacked pair full column rank"};
  });

  detail::run_check(out, "commuting", [&] {
    const auto res = commuting_check(rd);
    const double worst = std::max({res[0], res[1], res[2]});
    return CheckResult{"", worst <= tol_w * 10, worst,
                       "multiplication-operator commutation residuals"};
  });

  detail::run_check(out, "cd-kernel-match", [&] {
    double worst = 0.0;
    const auto pts = sample_points(w, 12, seed + 1);
    const auto pts2 = sample_points(w, 12, seed + 2);
    for (int n = 0; n + 1 <= std::min(nv, rd.degree() + 1); ++n)
      for (std::size_t i = 0; i < pts.size(); ++i) {
        if (std::abs(pts[i] - pts2[i]) < 1e-6) continue;
        const Complex a = kernel_complex(ortho, n, pts[i], pts2[i]);
        const Complex b = cd_kernel_complex(ortho, rd.levels[n].alpha, n, pts[i], pts2[i]);
        worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(a)));
      }
    return CheckResult{"", worst <= tol_w * 10, worst,
                       "two-level kernel formula matches the summed kernel"};
  });

  detail::run_check(out, "kernel-hermitian", [&] {
    double worst = 0.0;
    const auto pts = sample_points(w, 10, seed + 3);
    const auto pts2 = sample_points(w, 10, seed + 4);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Complex a = kernel_complex(ortho, nv, pts[i], pts2[i]);
      const Complex b = kernel_complex(ortho, nv, pts2[i], pts[i]);
      worst = std::max(worst, std::abs(a - std::conj(b)) / std::max(1.0, std::abs(a)));
      const Complex d = kernel_complex(ortho, nv, pts[i], pts[i]);
      if (d.real() <= 0.0) worst = std::max(worst, 1.0);
      worst = std::max(worst, std::abs(d.imag()) / std::max(1.0, std::abs(d)));
    }
    return CheckResult{"", worst <= tol_w * 10, worst,
                       "K(z,zeta) = conj(K(zeta,z)) and K(z,z) > 0"};
  });

  detail::run_check(out, "translate-roundtrip", [&] {
    RealRecurrenceData rrd = extract_real_three_term(rbs, tol_w * 10, 40, seed);
    double worst = 0.0;
    for (int n = 0; n <= std::min(rd.degree(), rrd.degree()); ++n) {
      const auto [alpha, beta] = translate_coeffs(rrd.levels[n], n);
      worst = std::max(worst, (alpha - rd.levels[n].alpha).cwiseAbs().maxCoeff());
      worst = std::max(worst, (beta - rd.levels[n].beta).cwiseAbs().maxCoeff());
      const auto [A1, A2] = split_coeffs(rd.levels[n].alpha, n);
      worst = std::max(worst, (A1 - rrd.levels[n].A1).cwiseAbs().maxCoeff());
      worst = std::max(worst, (A2 - rrd.levels[n].A2).cwiseAbs().maxCoeff());
    }
    return CheckResult{"", worst <= tol_w * 100, worst,
                       "real and complex coefficient matrices translate into each other"};
  });

  if (w.centrally_symmetric()) {
    detail::run_check(out, "zeros-parity", [&] {
      bool ok = true;
      std::string note;
      for (int n = 1; n <= std::min(nv, 5); ++n) {
        const auto zs = common_zeros(ortho, n, rd);
        if (n % 2 == 0) {
          if (!zs.empty()) { ok = false; note += " even n=" + std::to_string(n) + " nonempty;"; }
        } else {
          if (zs.size() != 1 || std::abs(zs[0]) > 1e-8) {
            ok = false;
            note += " odd n=" + std::to_string(n) + " not {0};";
          }
        }
      }
      return CheckResult{"", ok, double(ok), "even degrees none, odd degrees exactly the origin" + note};
    });
    detail::run_check(out, "cubature-absent", [&] {
      const auto mz = max_zero_condition(rd.levels[std::min(2, rd.degree())].alpha);
      return CheckResult{"", !mz.satisfied, mz.residual,
                         "maximal-zero criterion correctly fails"};
    });
  }

  if (w.kind() == WeightKind::deltoid_second) {
    detail::run_check(out, "zeros-count", [&] {
      bool ok = true;
      std::string note;
      for (int n = 2; n <= std::min(nv, 5); ++n) {
        const auto zs = common_zeros(ortho, n, deltoid_u_recurrence(n));
        if (int(zs.size()) != n * (n + 1) / 2) {
          ok = false;
          note += " n=" + std::to_string(n) + " count=" + std::to_string(zs.size()) + ";";
        }
      }
      return CheckResult{"", ok, double(ok), "maximal zero count n(n+1)/2" + note};
    });
    detail::run_check(out, "cubature", [&] {
      const int n = std::min(nv, 3);
      CubatureRule rule = gaussian_cubature(w, n, 1e-6);
      const double mass_err = std::abs(rule.total_mass - moment(w, 0, 0).real());
      return CheckResult{"", mass_err <= 1e-6, mass_err,
                         "degree-" + std::to_string(2 * n - 1) + " rule, " +
                             std::to_string(rule.nodes.size()) + " nodes, positive weights"};
    });
  }

  if (w.kind() == WeightKind::deltoid_first) {
    detail::run_check(out, "cubature-absent", [&] {
      const auto mz = max_zero_condition(rd.levels[std::min(2, rd.degree())].alpha);
      return CheckResult{"", !mz.satisfied, mz.residual,
                         "maximal-zero criterion correctly fails for the first-kind weight"};
    });
  }

  return out;
}

}  // namespace ortho2c
