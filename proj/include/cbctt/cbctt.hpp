#pragma once

// Umbrella header: the whole library in one include.

#include "cbctt/construction.hpp"
#include "cbctt/cost.hpp"
#include "cbctt/harness.hpp"
#include "cbctt/hsa.hpp"
#include "cbctt/instance.hpp"
#include "cbctt/matrices.hpp"
#include "cbctt/memory.hpp"
#include "cbctt/rng.hpp"
#include "cbctt/solution_io.hpp"
#include "cbctt/timetable.hpp"
