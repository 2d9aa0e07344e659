#ifndef GRAPHHOM_ENUMERATE_HPP
#define GRAPHHOM_ENUMERATE_HPP

#include <vector>

#include "graphhom/graph.hpp"

namespace graphhom {

struct Caps {
    int max_rank = 4;
    int max_gb = 15; // bound on 6g+3b for ribbon enumeration

    /// Reads overrides from the GRAPHHOM_CAPS environment variable,
    /// e.g. "rank=5,gb=18".
    static Caps from_env();
};

/// All isomorphism classes of connected graphs with every valence >= 3 and
/// first Betti number n, as canonical half-edge graphs in a deterministic
/// order. Throws OutOfScope when n exceeds caps.max_rank.
std::vector<HalfEdgeGraph> enumerate_graphs(int n, const Caps& caps = Caps());

/// All isomorphism classes of connected ribbon graphs with invariants
/// (genus, boundary). In labeled mode boundary cycles carry labels
/// 0..boundary-1 and isomorphisms must preserve them.
std::vector<HalfEdgeGraph> enumerate_ribbon_graphs(int genus, int boundary, bool labeled,
                                                   const Caps& caps = Caps());

} // namespace graphhom

#endif
