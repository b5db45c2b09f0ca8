#pragma once

#include "bicomplex/algebra.hpp"
#include "bicomplex/error.hpp"
#include "bicomplex/expr.hpp"
#include "bicomplex/function.hpp"
#include "bicomplex/grid.hpp"
#include "bicomplex/harmonic.hpp"
#include "bicomplex/literal.hpp"
#include "bicomplex/piecewise.hpp"
#include "bicomplex/poisson.hpp"
#include "bicomplex/quadrature.hpp"
#include "bicomplex/standard_form.hpp"
