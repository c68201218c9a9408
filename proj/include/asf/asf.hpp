#pragma once

// Umbrella header: the whole library in one include.

#include "asf/errors.hpp"
#include "asf/exponent.hpp"
#include "asf/expansion.hpp"
#include "asf/frames.hpp"
#include "asf/generators.hpp"
#include "asf/linear_map.hpp"
#include "asf/norms.hpp"
#include "asf/rank.hpp"
#include "asf/rng.hpp"
#include "asf/scalar.hpp"
#include "asf/sequence_spaces.hpp"
#include "asf/serialization.hpp"
#include "asf/solve.hpp"
#include "asf/tolerances.hpp"
#include "asf/vectors.hpp"
