#pragma once

#include "edgewise/combinatorics.hpp"
#include "edgewise/common.hpp"
#include "edgewise/complex.hpp"
#include "edgewise/links.hpp"
#include "edgewise/poset.hpp"
#include "edgewise/serialize.hpp"
#include "edgewise/shelling.hpp"
#include "edgewise/star_cluster.hpp"
#include "edgewise/subdivision.hpp"
