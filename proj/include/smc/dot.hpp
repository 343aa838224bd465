// Graphviz export of a matching digraph: grid-positioned nodes, arcs only
// between preference-adjacent live vertices (longer arcs are implied by
// transitivity), colored by search mark.
#pragma once

#include <ostream>

#include "smc/digraph.hpp"

namespace smc {

void write_dot(std::ostream& os, const MatchingDigraph& d);

}  // namespace smc
