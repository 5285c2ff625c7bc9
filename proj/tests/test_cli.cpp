#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ortho2c/cli.hpp"

using namespace ortho2c;
using Catch::Approx;

namespace {

int run(const std::vector<std::string>& args, std::string* out = nullptr,
        std::string* err = nullptr) {
  std::ostringstream cout_buf, cerr_buf;
  std::streambuf* old_out = std::cout.rdbuf(cout_buf.rdbuf());
  std::streambuf* old_err = std::cerr.rdbuf(cerr_buf.rdbuf());
  const int rc = run_cli(args);
  std::cout.rdbuf(old_out);
  std::cerr.rdbuf(old_err);
  if (out) *out = cout_buf.str();
  if (err) *err = cerr_buf.str();
  return rc;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("help and usage errors") {
  std::string out, err;
  CHECK(run({"--help"}, &out, &err) == 0);
  CHECK(out.find("basis") != std::string::npos);
  CHECK(out.find("cubature") != std::string::npos);

  CHECK(run({"frobnicate"}, &out, &err) == 2);
  CHECK(err.find("usage error") != std::string::npos);

  CHECK(run({"convert"}, &out, &err) == 2);  // missing required options
  CHECK(run({"basis", "--weight", "pentagon"}, &out, &err) == 2);
  CHECK(run({"basis", "--degree", "99"}, &out, &err) == 2);
}

TEST_CASE("basis subcommand emits parseable json") {
  std::string out, err;
  REQUIRE(run({"basis", "--weight", "hermite", "--degree", "3"}, &out, &err) == 0);
  Json j = Json::parse(out);
  CHECK(j.at("normalization").get<std::string>() == "orthonormal");
  CHECK(j.at("weight").at("kind").get<std::string>() == "hermite");
  REQUIRE(j.at("levels").size() == 4);
  CHECK(j.at("levels")[2].at("polys").size() == 3);

  const std::string path = "/tmp/o2c_cli_monic.json";
  REQUIRE(run({"basis", "--weight", "disk", "--lambda", "1.5", "--degree", "2",
               "--normalization", "monic", "-o", path}, &out, &err) == 0);
  Json jm = Json::parse(slurp(path));
  CHECK(jm.at("normalization").get<std::string>() == "monic");
  CHECK(jm.at("weight").at("lambda").get<double>() == 1.5);
  std::remove(path.c_str());
}

TEST_CASE("moments export feeds the custom weight") {
  const std::string mpath = "/tmp/o2c_cli_moments.json";
  std::string out, err;
  REQUIRE(run({"moments", "--weight", "hermite", "--max-degree", "8", "-o", mpath}, &out,
              &err) == 0);

  std::string direct, via_table;
  REQUIRE(run({"basis", "--weight", "hermite", "--degree", "3", "--normalization", "monic"},
              &direct, &err) == 0);
  REQUIRE(run({"basis", "--weight", "custom", "--moments-file", mpath, "--degree", "3",
               "--normalization", "monic"}, &via_table, &err) == 0);
  Json ja = Json::parse(direct), jb = Json::parse(via_table);
  CHECK(ja.at("levels") == jb.at("levels"));  // identical polynomials and grams
  std::remove(mpath.c_str());

  CHECK(run({"basis", "--weight", "custom", "--degree", "2"}, &out, &err) == 1);
  CHECK(err.find("--moments-file") != std::string::npos);
}

TEST_CASE("convert crosses the bridge and back") {
  const std::string cpath = "/tmp/o2c_cli_basis.json";
  const std::string rpath = "/tmp/o2c_cli_real.json";
  const std::string bpath = "/tmp/o2c_cli_back.json";
  std::string out, err;
  REQUIRE(run({"basis", "--weight", "disk", "--lambda", "0.5", "--degree", "3", "-o", cpath},
              &out, &err) == 0);
  REQUIRE(run({"convert", "-i", cpath, "--to", "real", "-o", rpath}, &out, &err) == 0);
  Json jr = Json::parse(slurp(rpath));
  CHECK(jr.at("levels")[1].at("polys")[0].at("kind").get<std::string>() == "rpoly");
  REQUIRE(run({"convert", "-i", rpath, "--to", "complex", "-o", bpath}, &out, &err) == 0);

  BasisSet orig = basis_from_json(Json::parse(slurp(cpath)));
  BasisSet back = basis_from_json(Json::parse(slurp(bpath)));
  REQUIRE(back.degree() == orig.degree());
  for (int m = 0; m <= orig.degree(); ++m)
    for (int k = 0; k <= m; ++k) {
      const double d = (back.level(m).polys[k] - orig.level(m).polys[k]).max_abs_coeff();
      CHECK(d < 1e-12 * std::max(1.0, orig.level(m).polys[k].max_abs_coeff()));
    }
  std::remove(cpath.c_str());
  std::remove(rpath.c_str());
  std::remove(bpath.c_str());
}

TEST_CASE("convert refuses monic input") {
  const std::string path = "/tmp/o2c_cli_monic_reject.json";
  std::string out, err;
  REQUIRE(run({"basis", "--degree", "2", "--normalization", "monic", "-o", path}, &out, &err) ==
          0);
  CHECK(run({"convert", "-i", path, "--to", "real"}, &out, &err) == 1);
  CHECK(err.find("only orthonormal bases cross the bridge") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("recurrence subcommand: csv on stdout, diagnostics on stderr") {
  std::string out, err;
  REQUIRE(run({"recurrence", "--weight", "hermite", "--degree", "4"}, &out, &err) == 0);
  CHECK(out.rfind("n,matrix,row,col,re,im", 0) == 0);
  CHECK(out.find(",gamma,") != std::string::npos);
  CHECK(err.find("reconstruction residual") != std::string::npos);
  CHECK(err.find("favard ranks:            full") != std::string::npos);
  CHECK(err.find("beta-zero residual") != std::string::npos);

  REQUIRE(run({"recurrence", "--weight", "disk", "--lambda", "1.0", "--degree", "3", "--form",
               "real"}, &out, &err) == 0);
  CHECK(out.find(",A1,") != std::string::npos);
  CHECK(out.find(",B2,") != std::string::npos);
}

TEST_CASE("kernel methods agree where they should") {
  const std::vector<std::string> base = {"kernel", "--weight", "disk", "--lambda", "1.0",
                                         "--n", "3", "--z", "0.3,0.2", "--zeta", "-0.1,0.4"};
  auto value_of = [&](const std::string& method) {
    std::vector<std::string> args = base;
    args.push_back("--method");
    args.push_back(method);
    std::string out, err;
    REQUIRE(run(args, &out, &err) == 0);
    Json j = Json::parse(out);
    REQUIRE(j.at("method").get<std::string>() == method);
    return Complex(j.at("value")[0].get<double>(), j.at("value")[1].get<double>());
  };
  const Complex sum = value_of("sum");
  CHECK(std::abs(value_of("cd") - sum) < 1e-9);
  CHECK(std::abs(value_of("real") - sum) < 1e-9);
  CHECK(std::abs(value_of("gegenbauer") - sum) < 1e-6);
  CHECK(std::abs(sum.imag()) < 1e-10);
}

TEST_CASE("starred kernel variant disagrees by design") {
  std::string out, err;
  REQUIRE(run({"kernel", "--n", "0", "--method", "cd-starred", "--z", "0,1", "--zeta", "0,0"},
              &out, &err) == 0);
  Json j = Json::parse(out);
  CHECK(j.at("value")[0].get<double>() == Approx(-1.0).margin(1e-10));

  CHECK(run({"kernel", "--z", "nonsense"}, &out, &err) == 1);
  CHECK(err.find("expected 're,im'") != std::string::npos);

  CHECK(run({"kernel", "--method", "gegenbauer", "--weight", "hermite"}, &out, &err) == 1);
  CHECK(err.find("disk weight only") != std::string::npos);
}

TEST_CASE("zeros subcommand counts") {
  std::string out, err;
  REQUIRE(run({"zeros", "--weight", "deltoid-u", "--degree", "3"}, &out, &err) == 0);
  Json j = Json::parse(out);
  CHECK(j.at("count").get<int>() == 6);
  CHECK(j.at("zeros").size() == 6);

  REQUIRE(run({"zeros", "--weight", "hermite", "--degree", "2"}, &out, &err) == 0);
  CHECK(Json::parse(out).at("count").get<int>() == 0);
}

TEST_CASE("cubature subcommand: valid rule on the second-kind deltoid, refusal elsewhere") {
  std::string out, err;
  REQUIRE(run({"cubature", "--weight", "deltoid-u", "--degree", "2"}, &out, &err) == 0);
  Json j = Json::parse(out);
  CHECK(j.at("degree").get<int>() == 3);
  REQUIRE(j.at("weights").size() == 3);
  for (const auto& wt : j.at("weights")) CHECK(wt.get<double>() > 0.0);
  CHECK(j.at("mass").get<double>() == Approx(1.0).margin(1e-6));

  CHECK(run({"cubature", "--weight", "hermite", "--degree", "4"}, &out, &err) == 1);
  CHECK(err.find("no Gaussian cubature at this degree") != std::string::npos);
}

TEST_CASE("verify subcommand prints one line per check") {
  std::string out, err;
  REQUIRE(run({"verify", "--weight", "hermite", "--max-degree", "3"}, &out, &err) == 0);
  CHECK(out.find("PASS moment-matrix") != std::string::npos);
  CHECK(out.find("FAIL") == std::string::npos);
  CHECK(out.find("all checks passed for weight hermite") != std::string::npos);
}

TEST_CASE("tolerance flag and environment variable are honored") {
  std::string out, err;
  CHECK(run({"--tol", "1e-8", "verify", "--weight", "hermite", "--max-degree", "2"}, &out,
            &err) == 0);
  CHECK(run({"--tol", "-1"}, &out, &err) == 2);

  setenv("ORTHO2C_TOL", "1e-8", 1);
  CHECK(run({"recurrence", "--weight", "hermite", "--degree", "2"}, &out, &err) == 0);
  unsetenv("ORTHO2C_TOL");
}
