#pragma once

// Umbrella header.

#include "birack/census.hpp"
#include "birack/cocycle.hpp"
#include "birack/diagram.hpp"
#include "birack/errors.hpp"
#include "birack/files.hpp"
#include "birack/finite_birack.hpp"
#include "birack/hom.hpp"
#include "birack/invariants.hpp"
#include "birack/labeling.hpp"
#include "birack/polynomial.hpp"
