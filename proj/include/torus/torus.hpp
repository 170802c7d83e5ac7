#pragma once
// Umbrella header.

#include "torus/bump.hpp"
#include "torus/commutator.hpp"
#include "torus/common.hpp"
#include "torus/cutoffs.hpp"
#include "torus/exponents.hpp"
#include "torus/families.hpp"
#include "torus/field.hpp"
#include "torus/grid.hpp"
#include "torus/harness.hpp"
#include "torus/kernels.hpp"
#include "torus/multiplier.hpp"
#include "torus/norms.hpp"
#include "torus/product.hpp"
#include "torus/reports.hpp"
#include "torus/transference.hpp"
#include "torus/version.hpp"
