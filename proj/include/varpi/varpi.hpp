#pragma once

#include "varpi/errors.hpp"
#include "varpi/rank.hpp"
#include "varpi/pi_radix.hpp"
#include "varpi/permutation.hpp"
#include "varpi/codec.hpp"
#include "varpi/orbits.hpp"
#include "varpi/symmetry.hpp"
#include "varpi/overlap_graph.hpp"
