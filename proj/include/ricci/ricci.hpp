#pragma once

// Exact Ollivier-Ricci curvature of graphs and polyhedral surfaces:
// rational-arithmetic Wasserstein transport with verifiable optimality
// certificates, curvature tables, tilings, Myers bounds, and
// Laplacian-weighted walks.

#include "ricci/cli.hpp"
#include "ricci/complex.hpp"
#include "ricci/curvature.hpp"
#include "ricci/error.hpp"
#include "ricci/generators.hpp"
#include "ricci/io.hpp"
#include "ricci/laplacian.hpp"
#include "ricci/measure.hpp"
#include "ricci/metric.hpp"
#include "ricci/rational.hpp"
#include "ricci/transport.hpp"
