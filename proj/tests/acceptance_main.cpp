// Acceptance gate: one line per shipped guarantee, with the tolerance pinned
// next to the measurement.  Exit status is the number of failed lines.
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ortho2c/ortho2c.hpp"

using namespace ortho2c;

namespace {

int failures = 0;

void report(int idx, const char* name, bool pass, const std::string& detail) {
  if (!pass) ++failures;
  std::printf("[%s] %02d %-34s %s\n", pass ? "PASS" : "FAIL", idx, name, detail.c_str());
  std::fflush(stdout);
}

void criterion(int idx, const char* name, const std::function<std::pair<bool, std::string>()>& f) {
  try {
    auto [pass, detail] = f();
    report(idx, name, pass, detail);
  } catch (const std::exception& e) {
    report(idx, name, false, std::string("exception: ") + e.what());
  }
}

std::string fmt(double v) {
  std::ostringstream ss;
  ss.precision(3);
  ss << std::scientific << v;
  return ss.str();
}

double coeff_distance(const CPoly& p, const CPoly& q) {
  return (p - q).max_abs_coeff() / std::max(1.0, std::max(p.max_abs_coeff(), q.max_abs_coeff()));
}

// ---- 01: moment matrices are Hermitian, conjugation-flip symmetric and
// positive definite through degree 8 (structure residuals vs 1e-12 relative).
std::pair<bool, std::string> c01() {
  const double tol = 1e-12;
  double worst = 0.0, min_rel_eig = 1e300;
  for (WeightSpec w : {WeightSpec::hermite(), WeightSpec::disk(0.0), WeightSpec::disk(1.5)}) {
    MomentMatrix M = moment_matrix(w, 8);  // throws if any structure check fails
    const double scale = M.mat.cwiseAbs().maxCoeff();
    worst = std::max(worst, (M.mat - M.mat.adjoint()).cwiseAbs().maxCoeff() / scale);
    double jres = 0.0;
    const int n = M.n;
    for (int k = 0; k <= n; ++k)
      for (int s = 0; s <= k; ++s)
        for (int j = 0; j <= n; ++j)
          for (int t = 0; t <= j; ++t)
            jres = std::max(jres, std::abs(M.mat(monomial_index(k, s), monomial_index(j, t)) -
                                           std::conj(M.mat(monomial_index(k, k - s),
                                                           monomial_index(j, j - t)))));
    worst = std::max(worst, jres / scale);
    min_rel_eig = std::min(min_rel_eig, M.min_eig / M.max_eig);
  }
  const bool pass = worst < tol && min_rel_eig > 0.0;
  return {pass, "structure residual " + fmt(worst) + " (tol 1e-12), min relative eigenvalue " +
                    fmt(min_rel_eig)};
}

// ---- 02: the moment-solve monic basis matches the bordered-determinant
// construction through degree 4 (1e-8 relative on coefficients).
std::pair<bool, std::string> c02() {
  const double tol = 1e-8;
  double worst = 0.0;
  for (WeightSpec w : {WeightSpec::hermite(), WeightSpec::disk(0.0), WeightSpec::disk(1.5)}) {
    BasisSet bs = monic_basis(w, 4);
    for (int n = 0; n <= 4; ++n)
      for (int k = 0; k <= n; ++k)
        worst = std::max(worst,
                         coeff_distance(determinant_oracle(w, k, n), bs.level(n).polys[k]));
  }
  return {worst < tol, "worst coefficient distance " + fmt(worst) + " (tol 1e-8)"};
}

// ---- 03: closed-form complex hermite / disk families equal the monic basis
// through degree 6 (1e-8), with the predicted squared norms (1e-9 relative).
std::pair<bool, std::string> c03() {
  double worst_coeff = 0.0, worst_norm = 0.0;
  {
    WeightSpec w = WeightSpec::hermite();
    BasisSet bs = monic_basis(w, 6);
    for (int n = 0; n <= 6; ++n)
      for (int k = 0; k <= n; ++k) {
        const CPoly h = hermite_complex(n - k, k);
        worst_coeff = std::max(worst_coeff, coeff_distance(h, bs.level(n).polys[k]));
        const double n2 = hermite_norm2(n - k, k);
        worst_norm =
            std::max(worst_norm, std::abs(inner_product(w, h, h).real() - n2) / n2);
      }
  }
  for (double lam : {0.0, 1.5}) {
    WeightSpec w = WeightSpec::disk(lam);
    BasisSet bs = monic_basis(w, 6);
    for (int n = 0; n <= 6; ++n)
      for (int k = 0; k <= n; ++k) {
        CPoly p = disk_complex(lam, n - k, k);
        const double n2 = disk_norm2(lam, n - k, k);
        worst_norm =
            std::max(worst_norm, std::abs(inner_product(w, p, p).real() - n2) / n2);
        p *= 1.0 / p.coeff(n - k, k);
        worst_coeff = std::max(worst_coeff, coeff_distance(p, bs.level(n).polys[k]));
      }
  }
  const bool pass = worst_coeff < 1e-8 && worst_norm < 1e-9;
  return {pass, "coefficients " + fmt(worst_coeff) + " (tol 1e-8), norms " + fmt(worst_norm) +
                    " (tol 1e-9)"};
}

// ---- 04: the bridge matrices are unitary with L L^t = J through degree 10
// (1e-14); bridged real levels have identity Gram (1e-9); the degree-2
// hermite real level reproduces the classical polar family up to recorded
// signs.
std::pair<bool, std::string> c04() {
  double worst_l = 0.0;
  for (int n = 0; n <= 10; ++n) {
    Eigen::MatrixXcd L = build_L(n);
    Eigen::MatrixXcd J = Eigen::MatrixXcd::Zero(n + 1, n + 1);
    for (int k = 0; k <= n; ++k) J(k, n - k) = 1.0;
    worst_l = std::max(worst_l, (L * L.adjoint() - Eigen::MatrixXcd::Identity(n + 1, n + 1))
                                    .cwiseAbs()
                                    .maxCoeff());
    worst_l = std::max(worst_l, (L * L.transpose() - J).cwiseAbs().maxCoeff());
  }

  double worst_gram = 0.0;
  for (WeightSpec w : {WeightSpec::hermite(), WeightSpec::disk(1.5)}) {
    BasisSet bs = build_basis(w, 6, Normalization::orthonormal);
    RealBasisSet rbs = real_basis(bs);
    for (int n = 0; n <= 6; ++n) {
      std::vector<CPoly> cs;
      for (const auto& p : rbs.levels[n]) cs.push_back(to_complex_vars(p));
      worst_gram = std::max(worst_gram,
                            (gram(w, cs, cs) - Eigen::MatrixXcd::Identity(n + 1, n + 1))
                                .cwiseAbs()
                                .maxCoeff());
    }
  }

  BasisSet b2 = build_basis(WeightSpec::hermite(), 2, Normalization::orthonormal);
  auto lv = real_from_complex(b2.level(2));
  auto oracle = real_family(RealFamily::hermite_polar, 0.0, 2);
  std::string signs;
  double worst_polar = 0.0;
  for (int k = 0; k < 3; ++k) {
    const double dplus = (lv[k] - oracle[k]).max_abs_coeff();
    const double dminus = (lv[k] + oracle[k]).max_abs_coeff();
    signs += dplus <= dminus ? '+' : '-';
    worst_polar = std::max(worst_polar, std::min(dplus, dminus));
  }
  const bool pass = worst_l < 1e-14 && worst_gram < 1e-9 && worst_polar < 1e-9;
  return {pass, "bridge invariants " + fmt(worst_l) + " (tol 1e-14), real grams " +
                    fmt(worst_gram) + " (tol 1e-9), polar match " + fmt(worst_polar) +
                    " with signs " + signs};
}

// ---- 05: complex and real kernel evaluations agree at 100 seeded point
// pairs per weight through degree 6, and the values are real (both 1e-10).
std::pair<bool, std::string> c05() {
  double worst = 0.0, worst_imag = 0.0;
  for (WeightSpec w : {WeightSpec::hermite(), WeightSpec::disk(1.5)}) {
    BasisSet bs = build_basis(w, 6, Normalization::orthonormal);
    RealBasisSet rbs = real_basis(bs);
    auto pts = sample_points(w, 200, 42);
    for (int n = 0; n <= 6; ++n)
      for (int i = 0; i < 100; ++i) {
        const Complex z = pts[2 * i], zeta = pts[2 * i + 1];
        const Complex kc = kernel_complex(bs, n, z, zeta);
        const double kr = kernel_real(rbs, n, z.real(), z.imag(), zeta.real(), zeta.imag());
        const double scale = std::max(1.0, std::abs(kc));
        worst = std::max(worst, std::abs(kc.real() - kr) / scale);
        worst_imag = std::max(worst_imag, std::abs(kc.imag()) / scale);
      }
  }
  const bool pass = worst < 1e-10 && worst_imag < 1e-10;
  return {pass, "real-vs-complex " + fmt(worst) + ", imaginary part " + fmt(worst_imag) +
                    " (both tol 1e-10)"};
}

// ---- 06: the two-level kernel form matches the level sum (1e-9) in both
// variables, the real form agrees along either axis (1e-9), and the starred
// variant demonstrably fails at the degree-0 anchor.
std::pair<bool, std::string> c06() {
  double worst = 0.0;
  for (WeightSpec w : {WeightSpec::hermite(), WeightSpec::disk(1.5)}) {
    BasisSet bs = build_basis(w, 6, Normalization::orthonormal);
    RecurrenceData rd = extract_complex_three_term(bs);
    RealBasisSet rbs = real_basis(bs);
    RealRecurrenceData rrd = extract_real_three_term(rbs);
    auto pts = sample_points(w, 40, 7);
    for (int n = 1; n <= 5; ++n)
      for (int i = 0; i + 1 < 40; i += 2) {
        const Complex z = pts[i], zeta = pts[i + 1];
        const Complex direct = kernel_complex(bs, n, z, zeta);
        const double scale = std::max(1.0, std::abs(direct));
        worst = std::max(worst,
                         std::abs(cd_kernel_complex(bs, rd.levels[n].alpha, n, z, zeta) -
                                  direct) /
                             scale);
        const double k0 = cd_kernel_real(rbs, rrd.levels[n].A1, n, z.real(), z.imag(),
                                         zeta.real(), zeta.imag(), 0);
        const double k1 = cd_kernel_real(rbs, rrd.levels[n].A2, n, z.real(), z.imag(),
                                         zeta.real(), zeta.imag(), 1);
        worst = std::max(worst, std::abs(k0 - direct.real()) / scale);
        worst = std::max(worst, std::abs(k1 - direct.real()) / scale);
      }
  }
  BasisSet bh = build_basis(WeightSpec::hermite(), 1, Normalization::orthonormal);
  RecurrenceData rh = extract_complex_three_term(bh);
  const Complex starred =
      cd_kernel_complex(bh, rh.levels[0].alpha, 0, Complex(0, 1), Complex(0, 0), true);
  const double starred_gap = std::abs(starred - Complex(1.0));  // true kernel value is 1
  const bool pass = worst < 1e-9 && starred_gap > 0.5;
  return {pass, "two-level vs sum " + fmt(worst) + " (tol 1e-9), starred anchor gap " +
                    fmt(starred_gap) + " (must exceed 0.5)"};
}

// ---- 07: three-term data: reconstruction residual < 1e-9, the down
// coefficients are the flipped conjugate adjoints of the up ones (1e-10),
// beta vanishes for the centrally symmetric weights (1e-10), the rank
// conditions hold for every built-in weight, the commuting identities hold to
// 1e-9 through degree 5, and real-to-complex coefficient translation matches
// direct extraction (1e-9).
std::pair<bool, std::string> c07() {
  double worst_res = 0.0, worst_ga = 0.0, worst_beta = 0.0, worst_comm = 0.0,
         worst_translate = 0.0;
  bool favard_ok = true;

  for (WeightSpec w : {WeightSpec::hermite(), WeightSpec::disk(0.0), WeightSpec::disk(1.5)}) {
    BasisSet bs = build_basis(w, 6, Normalization::orthonormal);
    RecurrenceData rd = extract_complex_three_term(bs);
    worst_res = std::max(worst_res, rd.residual);
    for (int n = 1; n <= rd.degree(); ++n)
      worst_ga = std::max(worst_ga, (rd.levels[n].gamma -
                                     vee(Eigen::MatrixXcd(rd.levels[n - 1].alpha.adjoint())))
                                        .cwiseAbs()
                                        .maxCoeff());
    for (const auto& lc : rd.levels) {
      worst_beta = std::max(worst_beta, lc.beta.cwiseAbs().maxCoeff());
      favard_ok = favard_ok && favard_rank_check(lc.alpha).pass;
    }
    const auto comm = commuting_check(rd);
    worst_comm = std::max({worst_comm, comm[0], comm[1], comm[2]});

    RealRecurrenceData rrd = extract_real_three_term(real_basis(bs));
    worst_res = std::max(worst_res, rrd.residual);
    for (int n = 0; n <= rrd.degree(); ++n) {
      auto [alpha, beta] = translate_coeffs(rrd.levels[n], n);
      worst_translate = std::max(
          worst_translate, (alpha - rd.levels[n].alpha).cwiseAbs().maxCoeff());
      worst_translate = std::max(worst_translate,
                                 (beta - rd.levels[n].beta).cwiseAbs().maxCoeff());
    }
  }

  // deltoid families: exact blocks for the second kind, extraction for the first
  RecurrenceData du = deltoid_u_recurrence(5);
  for (const auto& lc : du.levels) favard_ok = favard_ok && favard_rank_check(lc.alpha).pass;
  const auto ducomm = commuting_check(du);
  worst_comm = std::max({worst_comm, ducomm[0], ducomm[1], ducomm[2]});

  BasisSet bt = build_basis(WeightSpec::deltoid_t(), 4, Normalization::orthonormal);
  RecurrenceData rt = extract_complex_three_term(bt, 1e-6);
  for (const auto& lc : rt.levels) favard_ok = favard_ok && favard_rank_check(lc.alpha).pass;

  const bool pass = worst_res < 1e-9 && worst_ga < 1e-10 && worst_beta < 1e-10 &&
                    favard_ok && worst_comm < 1e-9 && worst_translate < 1e-9;
  return {pass, "residual " + fmt(worst_res) + " (1e-9), down-up link " + fmt(worst_ga) +
                    " (1e-10), beta " + fmt(worst_beta) + " (1e-10), ranks " +
                    (favard_ok ? "full" : "DEFICIENT") + ", commuting " + fmt(worst_comm) +
                    " (1e-9), translation " + fmt(worst_translate) + " (1e-9)"};
}

// ---- 08: common zeros: centrally symmetric weights give the empty set at
// even degrees <= 6 and exactly the origin at odd degrees <= 7 (residual
// 1e-8); the second-kind deltoid attains the maximal count n(n+1)/2 for
// n in {2,3,4,5}; the maximal-zero criterion separates it from the others.
std::pair<bool, std::string> c08() {
  bool ok = true;
  std::ostringstream note;
  for (WeightSpec w : {WeightSpec::hermite(), WeightSpec::disk(1.5)}) {
    for (int n = 1; n <= 7; ++n) {
      if (n > 6 && n % 2 == 0) continue;
      auto zs = common_zeros(w, n);
      const bool good = (n % 2 == 0) ? zs.empty() : (zs.size() == 1 && std::abs(zs[0]) < 1e-8);
      if (!good) {
        ok = false;
        note << " " << w.name() << " degree " << n << " gave " << zs.size() << " zeros;";
      }
    }
  }
  for (int n = 2; n <= 5; ++n) {
    auto zs = common_zeros(WeightSpec::deltoid_u(), n);
    if (int(zs.size()) != n * (n + 1) / 2) {
      ok = false;
      note << " second-kind deltoid degree " << n << " gave " << zs.size() << " of "
           << n * (n + 1) / 2 << ";";
    }
  }

  const auto alpha_of = [](const WeightSpec& w, int n) {
    BasisSet bs = build_basis(w, n + 1, Normalization::orthonormal);
    return extract_complex_three_term(bs, w.is_deltoid() ? 1e-6 : 1e-9).levels[n].alpha;
  };
  const bool crit_u = max_zero_condition(deltoid_u_recurrence(2).levels[1].alpha).satisfied;
  const bool crit_h = max_zero_condition(alpha_of(WeightSpec::hermite(), 1)).satisfied;
  const bool crit_d = max_zero_condition(alpha_of(WeightSpec::disk(1.5), 2)).satisfied;
  const bool crit_t = max_zero_condition(alpha_of(WeightSpec::deltoid_t(), 1)).satisfied;
  if (!(crit_u && !crit_h && !crit_d && !crit_t)) {
    ok = false;
    note << " maximal-zero criterion pattern wrong (u/h/d/t = " << crit_u << crit_h << crit_d
         << crit_t << ");";
  }
  return {ok, ok ? "zero sets, counts and criterion as predicted" : note.str()};
}

// ---- 09: Gaussian cubature on the second-kind deltoid for n in {2,3,4,5}:
// strictly positive weights, unit total mass (1e-6) and exactness on all
// monomials of degree <= 2n-1 (1e-6).
std::pair<bool, std::string> c09() {
  double worst_mass = 0.0, worst_exact = 0.0;
  bool positive = true;
  WeightSpec w = WeightSpec::deltoid_u();
  for (int n = 2; n <= 5; ++n) {
    CubatureRule rule = gaussian_cubature(w, n);
    for (double wt : rule.weights) positive = positive && wt > 0.0;
    worst_mass = std::max(worst_mass, std::abs(rule.total_mass - 1.0));
    worst_exact = std::max(worst_exact, cubature_exactness(w, rule, 2 * n - 1));
  }
  const bool pass = positive && worst_mass < 1e-6 && worst_exact < 1e-6;
  return {pass, std::string("weights ") + (positive ? "positive" : "NONPOSITIVE") +
                    ", mass error " + fmt(worst_mass) + ", moment error " + fmt(worst_exact) +
                    " (both tol 1e-6)"};
}

// ---- 10: the one-dimensional Gegenbauer average reproduces the degree-n
// slice of the disk kernel (1e-6) for lambda in {0.5, 1} through degree 4.
std::pair<bool, std::string> c10() {
  double worst = 0.0;
  for (double lam : {0.5, 1.0}) {
    WeightSpec w = WeightSpec::disk(lam);
    BasisSet bs = build_basis(w, 4, Normalization::orthonormal);
    auto pts = sample_points(w, 40, 13);
    for (int n = 0; n <= 4; ++n)
      for (int i = 0; i + 1 < 40; i += 2) {
        const Complex z = pts[i], zeta = pts[i + 1];
        const double slice = kernel_complex(bs, n, z, zeta).real() -
                             (n > 0 ? kernel_complex(bs, n - 1, z, zeta).real() : 0.0);
        worst = std::max(worst, std::abs(disk_kernel_gegenbauer(lam, n, z, zeta) - slice) /
                                    std::max(1.0, std::abs(slice)));
      }
  }
  return {worst < 1e-6, "slice mismatch " + fmt(worst) + " (tol 1e-6)"};
}

}  // namespace

int main() {
  criterion(1, "moment-matrix-structure", c01);
  criterion(2, "monic-vs-determinant-oracle", c02);
  criterion(3, "closed-form-families", c03);
  criterion(4, "bridge-unitarity-and-real-grams", c04);
  criterion(5, "kernel-real-complex-agreement", c05);
  criterion(6, "two-level-kernel-forms", c06);
  criterion(7, "three-term-coefficient-suite", c07);
  criterion(8, "common-zero-sets", c08);
  criterion(9, "gaussian-cubature", c09);
  criterion(10, "gegenbauer-kernel-slice", c10);
  if (failures == 0) std::printf("all acceptance checks passed\n");
  return failures;
}
