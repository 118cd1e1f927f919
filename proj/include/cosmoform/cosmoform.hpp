#pragma once

// Umbrella header: pulls in the whole library.

#include "cosmoform/rational.hpp"
#include "cosmoform/matrix.hpp"
#include "cosmoform/linprog.hpp"
#include "cosmoform/polynomial.hpp"
#include "cosmoform/graph.hpp"
#include "cosmoform/tubing.hpp"
#include "cosmoform/polytope.hpp"
#include "cosmoform/triangulation.hpp"
#include "cosmoform/volume.hpp"
#include "cosmoform/canonical.hpp"
#include "cosmoform/serialize.hpp"
#include "cosmoform/verify.hpp"
