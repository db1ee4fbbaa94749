#pragma once

// Umbrella header: the whole library in one include.

#include "posetdim/digraph.hpp"
#include "posetdim/errors.hpp"
#include "posetdim/generators.hpp"
#include "posetdim/io.hpp"
#include "posetdim/poset.hpp"
#include "posetdim/realizer.hpp"
#include "posetdim/solvers.hpp"
#include "posetdim/theorem6.hpp"
#include "posetdim/transforms.hpp"
#include "posetdim/util.hpp"
