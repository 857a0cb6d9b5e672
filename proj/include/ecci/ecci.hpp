#pragma once

// Umbrella header: the whole library.

#include "ecci/bounds.hpp"
#include "ecci/edge_list.hpp"
#include "ecci/enumerate.hpp"
#include "ecci/errors.hpp"
#include "ecci/families.hpp"
#include "ecci/graph.hpp"
#include "ecci/indices.hpp"
#include "ecci/product.hpp"
#include "ecci/random_graphs.hpp"
#include "ecci/rational.hpp"
#include "ecci/transforms.hpp"
#include "ecci/tree_ecc.hpp"
