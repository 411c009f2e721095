#pragma once

#include "tverberg/cycle.hpp"
#include "tverberg/error.hpp"
#include "tverberg/generate.hpp"
#include "tverberg/geom.hpp"
#include "tverberg/graph.hpp"
#include "tverberg/highdim.hpp"
#include "tverberg/point_io.hpp"
#include "tverberg/simplex.hpp"
#include "tverberg/solver.hpp"
#include "tverberg/svg.hpp"
#include "tverberg/verify.hpp"
#include "tverberg/version.hpp"
