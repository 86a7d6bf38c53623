#pragma once

/// Umbrella header for the core library (the CLI and JSON formats live in
/// cli.hpp and json_io.hpp and additionally need the vendored single-header
/// dependencies on the include path).

#include "projgenus/bigmonoid.hpp"
#include "projgenus/decomp.hpp"
#include "projgenus/diophantine.hpp"
#include "projgenus/extnat.hpp"
#include "projgenus/genus.hpp"
#include "projgenus/order.hpp"
#include "projgenus/profile.hpp"
#include "projgenus/traces.hpp"
