#pragma once

// Umbrella header: bivariate orthogonal polynomials in real (x, y) and
// complex (z, zbar) form — moment-based construction, the unitary bridge
// between the two representations, three-term recurrences with rank and
// commutation diagnostics, reproducing kernels, and Gaussian cubature from
// common zeros.

#include "ortho2c/poly.hpp"
#include "ortho2c/classical.hpp"
#include "ortho2c/gauss.hpp"
#include "ortho2c/deltoid.hpp"
#include "ortho2c/weight.hpp"
#include "ortho2c/basis.hpp"
#include "ortho2c/families.hpp"
#include "ortho2c/bridge.hpp"
#include "ortho2c/sampling.hpp"
#include "ortho2c/recurrence.hpp"
#include "ortho2c/kernel.hpp"
#include "ortho2c/zeros.hpp"
#include "ortho2c/jsonio.hpp"
#include "ortho2c/verify.hpp"
