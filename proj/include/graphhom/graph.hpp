#ifndef GRAPHHOM_GRAPH_HPP
#define GRAPHHOM_GRAPH_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graphhom/sparse.hpp"

namespace graphhom {

/// Bijection on half-edge ids (old id -> new id). Vertex and edge maps are
/// derived from it.
using GraphIso = std::vector<int>;

/// Connected multigraph encoded by half-edges, a fixed-point-free pairing
/// and a partition of half-edges into vertices. Loops and parallel edges
/// are first-class. An optional ribbon structure stores the cyclic order
/// of half-edges at each vertex as a `next` permutation; labeled ribbon
/// graphs additionally carry one label per boundary cycle.
struct HalfEdgeGraph {
    int n_half = 0;
    int n_vertices = 0;
    std::vector<int> pairing;   // involution on 0..n_half-1
    std::vector<int> vertex_of; // half-edge -> vertex
    std::vector<int> ribbon_next; // empty when not a ribbon graph
    std::vector<int> face_label;  // empty unless labeled ribbon mode

    bool has_ribbon() const { return !ribbon_next.empty(); }
    bool has_labels() const { return !face_label.empty(); }

    int valence(int v) const;
    std::vector<std::vector<int>> half_edges_by_vertex() const;

    /// Edges as (h, pairing[h]) with h < pairing[h], ordered by h. For a
    /// canonical graph this order is the canonical edge order.
    std::vector<std::pair<int, int>> edges() const;
    int n_edges() const { return n_half / 2; }
    bool edge_is_loop(int edge_index) const;

    /// First Betti number e - v + 1.
    int rank() const { return n_edges() - n_vertices + 1; }

    /// Throws InvalidGraph unless pairing is a fixed-point-free involution,
    /// all valences are >= 3, the graph is connected, and any ribbon/label
    /// data is consistent.
    void validate() const;

    /// Flat encoding (valences, pairing, ribbon, labels); equal iff equal
    /// as presented (not up to iso). Canonical graphs compare by this.
    std::string encode() const;

    std::string to_json() const;
    static HalfEdgeGraph from_json(const std::string& text);

    bool operator==(const HalfEdgeGraph& o) const { return encode() == o.encode(); }
};

struct CanonResult {
    HalfEdgeGraph graph;
    GraphIso iso; // input half-edge id -> canonical half-edge id
};

/// Lexicographically minimal encoding over all half-edge relabelings
/// (vertex blocks ordered by descending valence with class refinement),
/// plus a witnessing isomorphism. Respects ribbon structure and face
/// labels when present.
CanonResult canonicalize(const HalfEdgeGraph& g);

/// Full automorphism group of g as half-edge bijections g -> g.
std::vector<GraphIso> automorphisms(const HalfEdgeGraph& g);

struct Contraction {
    HalfEdgeGraph graph;          // the contracted graph (not canonicalized)
    std::vector<int> half_map;    // old half-edge -> new id, -1 for the two killed
    int merged_vertex = 0;        // vertex id of the coalesced vertex
};

/// Contract a non-loop edge, coalescing its endpoints. The surviving
/// half-edges keep their relative order; ribbon orders are spliced.
/// Throws LoopContraction if the edge is a loop.
Contraction contract_edge(const HalfEdgeGraph& g, int edge_index);

enum class SpanningTreePolicy { bfs_canonical, dfs_reverse };

struct CycleBasis {
    std::vector<int> tree_edges; // edge indices of the spanning tree
    // one fundamental cycle per non-tree edge (in edge order); each cycle
    // maps edge index -> coefficient, with edges directed h -> pairing[h]
    std::vector<std::map<int, int>> cycles;
};

CycleBasis cycle_basis(const HalfEdgeGraph& g,
                       SpanningTreePolicy policy = SpanningTreePolicy::bfs_canonical);

struct RibbonInvariants {
    int boundary_components = 0;
    int genus = 0;
    std::vector<int> face_of; // half-edge -> face orbit index (orbits ordered by min half-edge)
};

/// Boundary cycles = orbits of next o pairing; genus from g = (n+1-b)/2.
/// Throws InvalidRibbon when n+1-b is odd.
RibbonInvariants boundary_cycles(const HalfEdgeGraph& g);

/// The matrix over Q sending the cycle basis of `src` through the half-edge
/// map `half_map` (with -1 entries allowed for killed half-edges) into the
/// cycle basis of `dst`; used for H1 transport. Square with det +-1 when the
/// map is a contraction or an isomorphism.
SparseMatrix h1_transport(const HalfEdgeGraph& src, const CycleBasis& src_basis,
                          const std::vector<int>& half_map, const HalfEdgeGraph& dst,
                          const CycleBasis& dst_basis);

/// Determinant of a small square sparse matrix (exact).
Rational determinant(const SparseMatrix& m);

} // namespace graphhom

#endif
