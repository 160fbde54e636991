#pragma once

#include "hulthen/errors.hpp"
#include "hulthen/format.hpp"
#include "hulthen/hypergeom.hpp"
#include "hulthen/ladder.hpp"
#include "hulthen/oracle.hpp"
#include "hulthen/polynomial.hpp"
#include "hulthen/quadrature.hpp"
#include "hulthen/rational.hpp"
#include "hulthen/rational_function.hpp"
#include "hulthen/spectrum.hpp"
#include "hulthen/symbolic_norm.hpp"
#include "hulthen/tolerances.hpp"
#include "hulthen/verify.hpp"
#include "hulthen/wavefunction.hpp"
