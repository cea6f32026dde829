#pragma once

// Umbrella header: the r-regular Ulam metric on multipermutations, exact
// sphere-size computation, and the resulting code-size bounds.

#include "mpulam/bigint.hpp"
#include "mpulam/bounds.hpp"
#include "mpulam/core.hpp"
#include "mpulam/enumerate.hpp"
#include "mpulam/metric.hpp"
#include "mpulam/parallel.hpp"
#include "mpulam/rng.hpp"
#include "mpulam/space.hpp"
#include "mpulam/spheres.hpp"
#include "mpulam/tableaux.hpp"
#include "mpulam/verify.hpp"
