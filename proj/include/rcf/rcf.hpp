#pragma once

// Umbrella header for the Reverse continued fraction library.

#include "rcf/bounds.hpp"
#include "rcf/cylinder.hpp"
#include "rcf/density.hpp"
#include "rcf/dfield.hpp"
#include "rcf/directive.hpp"
#include "rcf/exact.hpp"
#include "rcf/geometry.hpp"
#include "rcf/language.hpp"
#include "rcf/quadrature.hpp"
#include "rcf/reverse_map.hpp"
#include "rcf/rng.hpp"
#include "rcf/sadic_checks.hpp"
#include "rcf/sorted.hpp"
#include "rcf/spectrum.hpp"
#include "rcf/substitution.hpp"
#include "rcf/version.hpp"
