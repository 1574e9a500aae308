#pragma once

#include "dunkl/errors.hpp"
#include "dunkl/scalar.hpp"
#include "dunkl/partitions.hpp"
#include "dunkl/gamma.hpp"
#include "dunkl/polyring.hpp"
#include "dunkl/jack.hpp"
#include "dunkl/operators.hpp"
#include "dunkl/bessel.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/integrals.hpp"
#include "dunkl/riesz.hpp"
#include "dunkl/report.hpp"
#include "dunkl/suites.hpp"
