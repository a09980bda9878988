#pragma once

#include "detrep/lin1.hpp"
#include "detrep/lin2.hpp"
#include "detrep/pencil.hpp"
#include "detrep/polynomial.hpp"
#include "detrep/solver.hpp"
#include "detrep/substitution.hpp"
#include "detrep/twopar.hpp"
#include "detrep/univariate.hpp"
