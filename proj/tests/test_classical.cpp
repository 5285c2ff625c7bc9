#include <catch2/catch_amalgamated.hpp>

#include "ortho2c/classical.hpp"

using namespace ortho2c;
using Catch::Approx;

// Reference values frozen from an independent special-function library.

TEST_CASE("generalized Laguerre values") {
  CHECK(laguerre_eval(0, 1.5, 0.7) == Approx(1.0));
  CHECK(laguerre_eval(1, 1.5, 0.7) == Approx(2.5 - 0.7));
  CHECK(laguerre_eval(3, 1.5, 0.7) == Approx(2.0953333333333335).epsilon(1e-13));
  CHECK(laguerre_eval(5, 0.0, 2.3) == Approx(0.9653255833333332).epsilon(1e-13));
}

TEST_CASE("Jacobi values") {
  CHECK(jacobi_eval(0, 1.5, 0.0, 0.3) == Approx(1.0));
  CHECK(jacobi_eval(4, 1.5, 0.0, 0.3) == Approx(-0.6953225097656253).epsilon(1e-13));
  CHECK(jacobi_eval(3, 0.5, 2.0, -0.6) == Approx(-1.3225).epsilon(1e-13));
}

TEST_CASE("Gegenbauer values") {
  CHECK(gegenbauer_eval(4, 1.0, 0.3) == Approx(0.04959999999999978).margin(1e-13));
  CHECK(gegenbauer_eval(5, 1.5, -0.2) == Approx(-2.022719999999999).epsilon(1e-13));
  CHECK_THROWS_AS(gegenbauer_eval(2, 0.0, 0.5), Error);
}

TEST_CASE("Hermite (physicists') values") {
  CHECK(hermite1d_eval(4, 0.5) == Approx(1.0).margin(1e-12));
  CHECK(hermite1d_eval(6, -1.1) == Approx(161.81190399999994).epsilon(1e-12));
  CHECK(hermite1d_eval(0, 3.0) == Approx(1.0));
  CHECK(hermite1d_eval(1, 3.0) == Approx(6.0));
}

TEST_CASE("coefficient tables agree with direct evaluation") {
  for (double t : {-0.8, 0.1, 1.7}) {
    for (int n : {0, 1, 2, 4, 6}) {
      auto horner = [&](const std::vector<double>& c) {
        double s = 0.0, tp = 1.0;
        for (double ci : c) {
          s += ci * tp;
          tp *= t;
        }
        return s;
      };
      CHECK(horner(laguerre_coeffs(n, 1.5)) == Approx(laguerre_eval(n, 1.5, t)).margin(1e-10));
      CHECK(horner(jacobi_coeffs(n, 0.5, 2.0)) == Approx(jacobi_eval(n, 0.5, 2.0, t)).margin(1e-9));
      CHECK(horner(hermite1d_coeffs(n)) == Approx(hermite1d_eval(n, t)).margin(1e-9));
    }
  }
}

TEST_CASE("dispatcher covers every kind") {
  CHECK(classical_eval(Classical::laguerre, 3, 1.5, 0.0, 0.7) == Approx(laguerre_eval(3, 1.5, 0.7)));
  CHECK(classical_eval(Classical::jacobi, 3, 0.5, 2.0, -0.6) ==
        Approx(jacobi_eval(3, 0.5, 2.0, -0.6)));
  CHECK(classical_eval(Classical::gegenbauer, 4, 1.0, 0.0, 0.3) ==
        Approx(gegenbauer_eval(4, 1.0, 0.3)));
  CHECK(classical_eval(Classical::hermite1d, 4, 0.0, 0.0, 0.5) == Approx(hermite1d_eval(4, 0.5)));
}
