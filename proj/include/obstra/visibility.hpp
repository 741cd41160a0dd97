#pragma once

#include "obstra/drawing.hpp"
#include "obstra/graph.hpp"

namespace obstra {

// Does the closed segment between points i and j of the scene stay visible?
// Plain scenes: visible iff no obstacle is hit (boundary contact blocks).
// Enclosure scenes: additionally the segment must lie strictly inside one of
// the enclosure obstacles' interiors.
bool pair_visible(const Scene& s, int i, int j);

// Validates the scene, then connects every mutually visible point pair.
Graph visibility_graph(const Scene& s);

struct RepCheck {
    bool yes = true;
    Edge witness{-1, -1}; // offending pair when yes == false
    bool missing_edge = false; // true: blocked edge of g; false: unblocked non-edge
};

// Yes iff visibility_graph(s) equals g edge-for-edge under the given labeling.
RepCheck is_obstacle_representation(const Scene& s, const Graph& g);

} // namespace obstra
