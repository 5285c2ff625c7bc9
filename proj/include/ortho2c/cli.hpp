#pragma once

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ortho2c/jsonio.hpp"
#include "ortho2c/verify.hpp"

namespace ortho2c {

namespace detail {

inline Complex parse_complex_arg(const std::string& s, const char* flag) {
  double re = 0.0, im = 0.0;
  if (std::sscanf(s.c_str(), "%lf,%lf", &re, &im) == 2) return {re, im};
  if (std::sscanf(s.c_str(), "%lf", &re) == 1) return {re, 0.0};
  throw Error(std::string(flag) + ": expected 're,im' or 're', got '" + s + "'");
}

inline void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot open output file '" + path + "'");
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open input file '" + path + "'");
  Json j;
  in >> j;
  return j;
}

struct WeightArgs {
  std::string weight = "hermite";
  double lambda = 0.0;
  std::string moments_file;

  WeightSpec make() const {
    if (weight == "hermite") return WeightSpec::hermite();
    if (weight == "disk") return WeightSpec::disk(lambda);
    if (weight == "deltoid-t") return WeightSpec::deltoid_t();
    if (weight == "deltoid-u") return WeightSpec::deltoid_u();
    if (weight == "custom") {
      if (moments_file.empty()) throw Error("custom weight requires --moments-file");
      return moment_table_from_json(read_json_file(moments_file));
    }
    throw Error("unknown weight '" + weight + "'");
  }

  void add_flags(CLI::App* sub) {
    sub->add_option("--weight,-w", weight, "hermite | disk | deltoid-t | deltoid-u | custom")
        ->check(CLI::IsMember({"hermite", "disk", "deltoid-t", "deltoid-u", "custom"}));
    sub->add_option("--lambda", lambda, "disk weight exponent (> -1)");
    sub->add_option("--moments-file", moments_file, "moment table JSON for --weight custom");
  }
};

inline RecurrenceData recurrence_for(const WeightSpec& w, const BasisSet& bs, double tol,
                                     uint64_t seed) {
  if (w.kind() == WeightKind::deltoid_second) return deltoid_u_recurrence(bs.degree() - 1);
  return extract_complex_three_term(bs, w.is_deltoid() ? std::max(tol, 1e-5) : tol, 50, seed);
}

}  // namespace detail

/// Entry point shared by the binary and the test-suite; args excludes argv[0].
/// Exit codes: 0 success, 1 computational failure, 2 usage error.
inline int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"construct, convert and diagnose bivariate orthogonal polynomials"};
  app.require_subcommand(1);

  double tol = 1e-9;
  uint64_t seed = 42;
  app.add_option("--tol", tol, "base tolerance for diagnostics")
      ->envname("ORTHO2C_TOL")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "random seed for sampled checks");

  detail::WeightArgs wa_basis, wa_rec, wa_kernel, wa_zeros, wa_cub, wa_mom, wa_verify;
  std::string output, input, normalization = "orthonormal", to, method = "sum";
  std::string zs = "0,0", zetas = "0,0", form = "complex";
  int degree = 4, kn = 2, max_degree = 6;

  CLI::App* basis = app.add_subcommand("basis", "build a basis and emit its JSON");
  wa_basis.add_flags(basis);
  basis->add_option("--degree,-n", degree, "highest level")->check(CLI::Range(0, 12));
  basis->add_option("--normalization", normalization, "monic | orthonormal")
      ->check(CLI::IsMember({"monic", "orthonormal"}));
  basis->add_option("--output,-o", output, "output path (default stdout)");

  CLI::App* convert = app.add_subcommand("convert", "re-express a basis JSON across the bridge");
  convert->add_option("--input,-i", input, "basis JSON to convert")->required();
  convert->add_option("--to", to, "real | complex")
      ->required()
      ->check(CLI::IsMember({"real", "complex"}));
  convert->add_option("--output,-o", output, "output path (default stdout)");

  CLI::App* rec = app.add_subcommand("recurrence",
                                     "emit three-term coefficients as CSV plus diagnostics");
  wa_rec.add_flags(rec);
  rec->add_option("--degree,-n", degree, "highest level")->check(CLI::Range(1, 12));
  rec->add_option("--form", form, "complex | real")->check(CLI::IsMember({"complex", "real"}));
  rec->add_option("--output,-o", output, "output path (default stdout)");

  CLI::App* kernel = app.add_subcommand("kernel", "evaluate reproducing kernels");
  wa_kernel.add_flags(kernel);
  kernel->add_option("--n", kn, "kernel degree")->check(CLI::Range(0, 12));
  kernel->add_option("--z", zs, "first point as re,im");
  kernel->add_option("--zeta", zetas, "second point as re,im");
  kernel->add_option("--method", method, "sum | cd | cd-starred | real | gegenbauer")
      ->check(CLI::IsMember({"sum", "cd", "cd-starred", "real", "gegenbauer"}));
  kernel->add_option("--output,-o", output, "output path (default stdout)");

  CLI::App* zeros = app.add_subcommand("zeros", "common zeros of the degree-n level");
  wa_zeros.add_flags(zeros);
  zeros->add_option("--degree,-n", degree, "level degree")->check(CLI::Range(1, 12));
  zeros->add_option("--output,-o", output, "output path (default stdout)");

  CLI::App* cub = app.add_subcommand("cubature", "Gaussian cubature rule from common zeros");
  wa_cub.add_flags(cub);
  cub->add_option("--degree,-n", degree, "level degree")->check(CLI::Range(1, 12));
  cub->add_option("--output,-o", output, "output path (default stdout)");

  CLI::App* mom = app.add_subcommand("moments", "emit the moment table JSON");
  wa_mom.add_flags(mom);
  mom->add_option("--max-degree", max_degree, "largest total degree")->check(CLI::Range(0, 24));
  mom->add_option("--output,-o", output, "output path (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suite for a weight");
  wa_verify.add_flags(verify);
  verify->add_option("--max-degree", max_degree, "highest level to check")
      ->check(CLI::Range(1, 12));

  std::vector<const char*> argv;
  argv.push_back("ortho2c");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (app.got_subcommand(basis)) {
      const WeightSpec w = wa_basis.make();
      const Normalization norm =
          normalization == "monic" ? Normalization::monic : Normalization::orthonormal;
      BasisSet bs = build_basis(w, degree, norm);
      detail::write_output(output, basis_to_json(bs).dump(2));
    } else if (app.got_subcommand(convert)) {
      const Json j = detail::read_json_file(input);
      if (j.at("normalization").get<std::string>() != "orthonormal")
        throw Error("convert: only orthonormal bases cross the bridge");
      if (to == "real") {
        BasisSet bs = basis_from_json(j);
        detail::write_output(output, real_basis_to_json(real_basis(bs)).dump(2));
      } else {
        RealBasisSet rbs = real_basis_from_json(j);
        BasisSet bs{rbs.weight, rbs.norm, {}};
        for (std::size_t m = 0; m < rbs.levels.size(); ++m)
          bs.levels.push_back(complex_from_real(rbs.levels[m], int(m), rbs.norm));
        detail::write_output(output, basis_to_json(bs).dump(2));
      }
    } else if (app.got_subcommand(rec)) {
      const WeightSpec w = wa_rec.make();
      BasisSet bs = build_basis(w, degree, Normalization::orthonormal);
      RecurrenceData rd = detail::recurrence_for(w, bs, tol, seed);
      if (form == "real") {
        RealRecurrenceData rrd = extract_real_three_term(
            real_basis(bs), w.is_deltoid() ? std::max(tol, 1e-5) : tol, 50, seed);
        detail::write_output(output, real_recurrence_csv(rrd));
      } else {
        detail::write_output(output, recurrence_csv(rd));
      }
      std::vector<Eigen::MatrixXcd> grams;
      for (int m = 0; m <= bs.degree(); ++m)
        grams.push_back(Eigen::MatrixXcd::Identity(m + 1, m + 1));
      std::cerr << "reconstruction residual: " << rd.residual << '\n';
      std::cerr << "gamma-alpha residual:    " << check_gamma_alpha(rd, grams) << '\n';
      bool favard = true;
      for (const auto& lc : rd.levels) favard = favard && favard_rank_check(lc.alpha).pass;
      std::cerr << "favard ranks:            " << (favard ? "full" : "DEFICIENT") << '\n';
      const auto cres = commuting_check(rd);
      std::cerr << "commuting residuals:     " << cres[0] << ' ' << cres[1] << ' ' << cres[2]
                << '\n';
      if (w.centrally_symmetric()) {
        double bmax = 0.0;
        for (const auto& lc : rd.levels) bmax = std::max(bmax, lc.beta.cwiseAbs().maxCoeff());
        std::cerr << "beta-zero residual:      " << bmax << '\n';
      }
    } else if (app.got_subcommand(kernel)) {
      const WeightSpec w = wa_kernel.make();
      const Complex z = detail::parse_complex_arg(zs, "--z");
      const Complex zeta = detail::parse_complex_arg(zetas, "--zeta");
      Complex value;
      if (method == "gegenbauer") {
        if (w.kind() != WeightKind::disk)
          throw Error("kernel: gegenbauer method applies to the disk weight only");
        double acc = 0.0;
        for (int m = 0; m <= kn; ++m) acc += disk_kernel_gegenbauer(w.lambda(), m, z, zeta);
        value = acc;
      } else if (method == "real") {
        BasisSet bs = build_basis(w, kn, Normalization::orthonormal);
        value = kernel_real(real_basis(bs), kn, z.real(), z.imag(), zeta.real(), zeta.imag());
      } else if (method == "sum") {
        BasisSet bs = build_basis(w, kn, Normalization::orthonormal);
        value = kernel_complex(bs, kn, z, zeta);
      } else {  // cd | cd-starred
        BasisSet bs = build_basis(w, kn + 1, Normalization::orthonormal);
        RecurrenceData rd = detail::recurrence_for(w, bs, tol, seed);
        value = cd_kernel_complex(bs, rd.levels[kn].alpha, kn, z, zeta, method == "cd-starred");
      }
      detail::write_output(output, kernel_line(kn, z, zeta, value, method));
    } else if (app.got_subcommand(zeros)) {
      const WeightSpec w = wa_zeros.make();
      const auto zsr = common_zeros(w, degree, ZeroOptions{}, seed);
      detail::write_output(output, zeros_to_json(degree, zsr).dump(2));
    } else if (app.got_subcommand(cub)) {
      const WeightSpec w = wa_cub.make();
      try {
        CubatureRule rule = gaussian_cubature(w, degree, 1e-7, ZeroOptions{}, seed);
        detail::write_output(output, rule_to_json(rule).dump(2));
      } catch (const Error& e) {
        throw Error("no Gaussian cubature at this degree: " + std::string(e.what()));
      }
    } else if (app.got_subcommand(mom)) {
      const WeightSpec w = wa_mom.make();
      detail::write_output(output, moment_table_to_json(w, max_degree).dump(2));
    } else if (app.got_subcommand(verify)) {
      const WeightSpec w = wa_verify.make();
      const auto results = verify_weight(w, max_degree, tol, seed);
      bool all = true;
      for (const auto& r : results) {
        all = all && r.pass;
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << "  (" << r.value << ")  "
                  << r.detail << '\n';
      }
      if (!all) {
        std::cout << "failure manifest:";
        for (const auto& r : results)
          if (!r.pass) std::cout << ' ' << r.name;
        std::cout << '\n';
        return 1;
      }
      std::cout << "all checks passed for weight " << w.name() << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace ortho2c
