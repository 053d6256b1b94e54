#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "pmap/planar_map.hpp"
#include "pmap/rational.hpp"

namespace pmap {

// normalized frequencies keyed by canonical neighbourhood codes
using Census = std::map<std::vector<int>, double>;

// U_r at every corner of one map
Census neighborhood_census(const PlanarMap& m, int r);

// law of U_r at the root corner over a list of equally likely maps
Census root_census(const std::vector<PlanarMap>& maps, int r);

// exact root law over all rooted maps with n edges (exhaustive catalog)
Census exact_root_census(int edges, int r);

// root law over `count` sampled maps with n edges at tilt t
Census sampled_root_census(const Rational& t, int edges, int r, int count, uint64_t seed);

double tv_distance(const Census& a, const Census& b);

}  // namespace pmap
