#pragma once

// Umbrella header: SL(2,C) character enumeration and Reidemeister torsion
// for homology spheres from 1/n surgery on the figure-eight knot.

#include "fig8/complex.hpp"
#include "fig8/engine.hpp"
#include "fig8/enumerate.hpp"
#include "fig8/numeric.hpp"
#include "fig8/oracle.hpp"
#include "fig8/poly.hpp"
#include "fig8/rational.hpp"
#include "fig8/report.hpp"
#include "fig8/repvariety.hpp"
#include "fig8/resultant.hpp"
#include "fig8/roots.hpp"
#include "fig8/torsion.hpp"
#include "fig8/words.hpp"
