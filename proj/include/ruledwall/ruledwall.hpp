#pragma once

// Umbrella header for the library (the CLI lives in cli.hpp).

#include "chern.hpp"
#include "criteria.hpp"
#include "fixtures.hpp"
#include "poly.hpp"
#include "rational.hpp"
#include "strata.hpp"
#include "surface.hpp"
#include "wallcross.hpp"
#include "walls.hpp"
