#include "graphhom/graph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <queue>
#include <sstream>

#include <json.hpp>

#include "graphhom/errors.hpp"

namespace graphhom {

using nlohmann::json;

int HalfEdgeGraph::valence(int v) const {
    int d = 0;
    for (int x : vertex_of) d += (x == v);
    return d;
}

std::vector<std::vector<int>> HalfEdgeGraph::half_edges_by_vertex() const {
    std::vector<std::vector<int>> out(n_vertices);
    for (int h = 0; h < n_half; ++h) out[vertex_of[h]].push_back(h);
    return out;
}

std::vector<std::pair<int, int>> HalfEdgeGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(n_half / 2);
    for (int h = 0; h < n_half; ++h)
        if (h < pairing[h]) out.emplace_back(h, pairing[h]);
    return out;
}

bool HalfEdgeGraph::edge_is_loop(int edge_index) const {
    auto e = edges()[edge_index];
    return vertex_of[e.first] == vertex_of[e.second];
}

void HalfEdgeGraph::validate() const {
    if ((int)pairing.size() != n_half || (int)vertex_of.size() != n_half)
        throw InvalidGraph("inconsistent array sizes");
    if (n_half % 2 != 0) throw InvalidGraph("odd number of half-edges");
    for (int h = 0; h < n_half; ++h) {
        if (pairing[h] < 0 || pairing[h] >= n_half || pairing[h] == h ||
            pairing[pairing[h]] != h)
            throw InvalidGraph("pairing is not a fixed-point-free involution");
        if (vertex_of[h] < 0 || vertex_of[h] >= n_vertices)
            throw InvalidGraph("half-edge with invalid vertex");
    }
    for (int v = 0; v < n_vertices; ++v)
        if (valence(v) < 3) throw InvalidGraph("vertex of valence < 3");
    // connectivity
    if (n_vertices > 0) {
        std::vector<char> seen(n_vertices, 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        int count = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int h = 0; h < n_half; ++h) {
                if (vertex_of[h] != v) continue;
                int w = vertex_of[pairing[h]];
                if (!seen[w]) {
                    seen[w] = 1;
                    ++count;
                    q.push(w);
                }
            }
        }
        if (count != n_vertices) throw InvalidGraph("graph is not connected");
    }
    if (has_ribbon()) {
        if ((int)ribbon_next.size() != n_half) throw InvalidRibbon("bad next size");
        // next must be a permutation whose cycles are exactly the vertices
        std::vector<char> hit(n_half, 0);
        for (int h = 0; h < n_half; ++h) {
            int nh = ribbon_next[h];
            if (nh < 0 || nh >= n_half || hit[nh]) throw InvalidRibbon("next is not a permutation");
            hit[nh] = 1;
            if (vertex_of[nh] != vertex_of[h]) throw InvalidRibbon("next leaves its vertex");
        }
        std::vector<char> seen(n_half, 0);
        for (int h = 0; h < n_half; ++h) {
            if (seen[h]) continue;
            int len = 0, x = h;
            do {
                seen[x] = 1;
                ++len;
                x = ribbon_next[x];
            } while (x != h);
            if (len != valence(vertex_of[h]))
                throw InvalidRibbon("next cycle does not exhaust its vertex");
        }
    }
    if (has_labels()) {
        if (!has_ribbon()) throw InvalidRibbon("face labels without ribbon structure");
        if ((int)face_label.size() != n_half) throw InvalidRibbon("bad label size");
        for (int h = 0; h < n_half; ++h)
            if (face_label[ribbon_next[pairing[h]]] != face_label[h])
                throw InvalidRibbon("face labels not constant on boundary cycles");
    }
}

std::string HalfEdgeGraph::encode() const {
    std::ostringstream os;
    os << n_vertices << ';';
    for (int h = 0; h < n_half; ++h) os << vertex_of[h] << ',';
    os << ';';
    for (int h = 0; h < n_half; ++h) os << pairing[h] << ',';
    if (has_ribbon()) {
        os << ";r";
        for (int h = 0; h < n_half; ++h) os << ribbon_next[h] << ',';
    }
    if (has_labels()) {
        os << ";l";
        for (int h = 0; h < n_half; ++h) os << face_label[h] << ',';
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// canonical form
// ---------------------------------------------------------------------------

namespace {

// Iso-invariant vertex classes via refinement on the underlying multigraph.
std::vector<std::string> vertex_signatures(const HalfEdgeGraph& g) {
    const int V = g.n_vertices;
    std::vector<int> loops(V, 0);
    std::vector<std::map<int, int>> nbr(V); // neighbor vertex -> multiplicity
    for (auto [a, b] : g.edges()) {
        int u = g.vertex_of[a], w = g.vertex_of[b];
        if (u == w)
            ++loops[u];
        else {
            ++nbr[u][w];
            ++nbr[w][u];
        }
    }
    std::vector<std::string> sig(V);
    for (int v = 0; v < V; ++v) {
        std::ostringstream os;
        os << g.valence(v) << '.' << loops[v];
        sig[v] = os.str();
    }
    for (int round = 0; round < V; ++round) {
        std::vector<std::string> next(V);
        for (int v = 0; v < V; ++v) {
            std::vector<std::string> parts;
            for (auto& [w, mult] : nbr[v]) parts.push_back(sig[w] + "*" + std::to_string(mult));
            std::sort(parts.begin(), parts.end());
            std::string s = sig[v] + "|";
            for (auto& p : parts) s += p + ";";
            next[v] = s;
        }
        if (next == sig) break;
        sig = std::move(next);
    }
    return sig;
}

struct CanonSearch {
    const HalfEdgeGraph& g;
    int H; // number of half-edges

    // slot layout
    std::vector<int> slot_of_pos;    // position -> slot
    std::vector<int> slot_class;     // slot -> class id
    std::vector<std::vector<int>> class_vertices; // class id -> old vertices
    std::vector<int> class_of_vertex;

    // search state
    std::vector<int> pi;        // old half-edge -> position, -1 unset
    std::vector<int> pos_used;  // position -> old half-edge, -1
    std::vector<int> slot_vertex; // slot -> old vertex, -1
    std::vector<int> vertex_slot; // old vertex -> slot, -1
    std::vector<int> code;        // pairing part, -1 unknown

    std::vector<int> best;               // full code (pairing + next + labels)
    std::vector<GraphIso> achievers;

    explicit CanonSearch(const HalfEdgeGraph& graph) : g(graph), H(graph.n_half) {}

    std::vector<int> full_code_of(const std::vector<int>& perm) const {
        std::vector<int> inv(H);
        for (int h = 0; h < H; ++h) inv[perm[h]] = h;
        std::vector<int> out;
        out.reserve(H * 3);
        for (int t = 0; t < H; ++t) out.push_back(perm[g.pairing[inv[t]]]);
        if (g.has_ribbon())
            for (int t = 0; t < H; ++t) out.push_back(perm[g.ribbon_next[inv[t]]]);
        if (g.has_labels())
            for (int t = 0; t < H; ++t) out.push_back(g.face_label[inv[t]]);
        return out;
    }

    // -1: prefix strictly smaller somewhere before any larger entry
    //  0: equal on the known contiguous prefix
    // +1: strictly larger -> prune
    int compare_prefix() const {
        if (best.empty()) return -1;
        for (int t = 0; t < H; ++t) {
            if (pos_used[t] < 0) return 0;
            if (code[t] < best[t]) return -1;
            if (code[t] > best[t]) return +1;
        }
        return 0;
    }

    void run() {
        const int V = g.n_vertices;
        auto sig = vertex_signatures(g);
        // classes ordered by (valence desc, signature asc)
        std::vector<std::pair<std::pair<int, std::string>, int>> keyed;
        std::map<std::pair<int, std::string>, int> class_id;
        class_of_vertex.assign(V, -1);
        for (int v = 0; v < V; ++v) {
            std::pair<int, std::string> key{-g.valence(v), sig[v]};
            auto it = class_id.find(key);
            if (it == class_id.end()) {
                class_id.emplace(key, 0);
            }
        }
        {
            int next_id = 0;
            for (auto& [key, id] : class_id) id = next_id++;
        }
        class_vertices.assign(class_id.size(), {});
        for (int v = 0; v < V; ++v) {
            int c = class_id[{-g.valence(v), sig[v]}];
            class_of_vertex[v] = c;
            class_vertices[c].push_back(v);
        }
        // slots: for each class, one slot per member vertex, consecutive
        slot_of_pos.assign(H, -1);
        int pos = 0;
        for (std::size_t c = 0; c < class_vertices.size(); ++c) {
            int val = g.valence(class_vertices[c][0]);
            for (std::size_t k = 0; k < class_vertices[c].size(); ++k) {
                int s = (int)slot_class.size();
                slot_class.push_back((int)c);
                for (int i = 0; i < val; ++i) slot_of_pos[pos++] = s;
            }
        }
        assert(pos == H);

        pi.assign(H, -1);
        pos_used.assign(H, -1);
        slot_vertex.assign(slot_class.size(), -1);
        vertex_slot.assign(V, -1);
        code.assign(H, -1);
        dfs();
    }

    void place(int t, int h, int u, int p, std::vector<std::pair<int, int>>& undo_binds) {
        pi[h] = t;
        pi[p] = u;
        pos_used[t] = h;
        pos_used[u] = p;
        code[t] = u;
        code[u] = t;
        int bs = slot_of_pos[t];
        if (slot_vertex[bs] < 0) {
            slot_vertex[bs] = g.vertex_of[h];
            vertex_slot[g.vertex_of[h]] = bs;
            undo_binds.emplace_back(bs, g.vertex_of[h]);
        }
        int us = slot_of_pos[u];
        if (slot_vertex[us] < 0) {
            slot_vertex[us] = g.vertex_of[p];
            vertex_slot[g.vertex_of[p]] = us;
            undo_binds.emplace_back(us, g.vertex_of[p]);
        }
    }

    void unplace(int t, int h, int u, int p, const std::vector<std::pair<int, int>>& undo_binds) {
        for (auto& [s, v] : undo_binds) {
            slot_vertex[s] = -1;
            vertex_slot[v] = -1;
        }
        pi[h] = pi[p] = -1;
        pos_used[t] = pos_used[u] = -1;
        code[t] = code[u] = -1;
    }

    void dfs() {
        int t = 0;
        while (t < H && pos_used[t] >= 0) ++t;
        if (t == H) {
            auto full = full_code_of(pi);
            if (best.empty() || full < best) {
                best = full;
                achievers.clear();
                achievers.push_back(pi);
            } else if (full == best) {
                achievers.push_back(pi);
            }
            return;
        }
        int bs = slot_of_pos[t];
        std::vector<int> hs;
        if (slot_vertex[bs] >= 0) {
            int w = slot_vertex[bs];
            for (int h = 0; h < H; ++h)
                if (g.vertex_of[h] == w && pi[h] < 0) hs.push_back(h);
        } else {
            for (int v : class_vertices[slot_class[bs]]) {
                if (vertex_slot[v] >= 0) continue;
                for (int h = 0; h < H; ++h)
                    if (g.vertex_of[h] == v) hs.push_back(h);
            }
        }
        // branches ordered by partner position u (the code entry at t)
        std::vector<std::tuple<int, int, int>> branches; // (u, h, p)
        for (int h : hs) {
            int p = g.pairing[h];
            int pv = g.vertex_of[p];
            for (int u = t + 1; u < H; ++u) {
                if (pos_used[u] >= 0) continue;
                int us = slot_of_pos[u];
                if (slot_vertex[us] >= 0) {
                    if (slot_vertex[us] != pv) continue;
                } else {
                    if (slot_class[us] != class_of_vertex[pv]) continue;
                    if (vertex_slot[pv] >= 0) continue;
                    // h may have just conceptually bound bs to its vertex:
                    // if p's vertex equals h's vertex the slot must match
                    if (pv == g.vertex_of[h] && us != bs) continue;
                }
                if (pv == g.vertex_of[h] && us != bs) continue;
                branches.emplace_back(u, h, p);
            }
        }
        std::sort(branches.begin(), branches.end());
        for (auto& [u, h, p] : branches) {
            std::vector<std::pair<int, int>> undo;
            place(t, h, u, p, undo);
            if (compare_prefix() <= 0) dfs();
            unplace(t, h, u, p, undo);
        }
    }
};

} // namespace

CanonResult canonicalize(const HalfEdgeGraph& g) {
    g.validate();
    CanonSearch search(g);
    search.run();
    assert(!search.achievers.empty());
    const GraphIso& perm = search.achievers.front();
    HalfEdgeGraph out;
    out.n_half = g.n_half;
    out.n_vertices = g.n_vertices;
    out.pairing.assign(g.n_half, -1);
    out.vertex_of.assign(g.n_half, -1);
    std::vector<int> inv(g.n_half);
    for (int h = 0; h < g.n_half; ++h) inv[perm[h]] = h;
    // new vertex ids follow slot order
    std::vector<int> vmap(g.n_vertices, -1);
    int nv = 0;
    for (int t = 0; t < g.n_half; ++t) {
        int v = g.vertex_of[inv[t]];
        if (vmap[v] < 0) vmap[v] = nv++;
        out.vertex_of[t] = vmap[v];
        out.pairing[t] = perm[g.pairing[inv[t]]];
    }
    if (g.has_ribbon()) {
        out.ribbon_next.assign(g.n_half, -1);
        for (int t = 0; t < g.n_half; ++t) out.ribbon_next[t] = perm[g.ribbon_next[inv[t]]];
    }
    if (g.has_labels()) {
        out.face_label.assign(g.n_half, -1);
        for (int t = 0; t < g.n_half; ++t) out.face_label[t] = g.face_label[inv[t]];
    }
    return {std::move(out), perm};
}

std::vector<GraphIso> automorphisms(const HalfEdgeGraph& g) {
    g.validate();
    CanonSearch search(g);
    search.run();
    const GraphIso& pi0 = search.achievers.front();
    std::vector<int> inv0(g.n_half);
    for (int h = 0; h < g.n_half; ++h) inv0[pi0[h]] = h;
    std::vector<GraphIso> out;
    out.reserve(search.achievers.size());
    for (const auto& perm : search.achievers) {
        GraphIso a(g.n_half);
        for (int h = 0; h < g.n_half; ++h) a[h] = inv0[perm[h]];
        out.push_back(std::move(a));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Contraction contract_edge(const HalfEdgeGraph& g, int edge_index) {
    auto es = g.edges();
    if (edge_index < 0 || edge_index >= (int)es.size()) throw Error("edge index out of range");
    auto [h1, h2] = es[edge_index];
    int u = g.vertex_of[h1], w = g.vertex_of[h2];
    if (u == w) throw LoopContraction("cannot contract a loop");

    Contraction out;
    out.half_map.assign(g.n_half, -1);
    int id = 0;
    for (int h = 0; h < g.n_half; ++h)
        if (h != h1 && h != h2) out.half_map[h] = id++;

    HalfEdgeGraph& c = out.graph;
    c.n_half = g.n_half - 2;
    c.n_vertices = g.n_vertices - 1;
    c.pairing.assign(c.n_half, -1);
    c.vertex_of.assign(c.n_half, -1);
    const int keep = std::min(u, w), drop = std::max(u, w);
    out.merged_vertex = keep;
    auto vmap = [&](int v) {
        if (v == u || v == w) return keep;
        return v > drop ? v - 1 : v;
    };
    for (int h = 0; h < g.n_half; ++h) {
        if (out.half_map[h] < 0) continue;
        c.pairing[out.half_map[h]] = out.half_map[g.pairing[h]];
        c.vertex_of[out.half_map[h]] = vmap(g.vertex_of[h]);
    }
    if (g.has_ribbon()) {
        // splice the two cyclic orders at the contracted edge
        std::vector<int> next = g.ribbon_next;
        int pu = -1, pw = -1;
        for (int h = 0; h < g.n_half; ++h) {
            if (next[h] == h1) pu = h;
            if (next[h] == h2) pw = h;
        }
        next[pu] = g.ribbon_next[h2];
        next[pw] = g.ribbon_next[h1];
        c.ribbon_next.assign(c.n_half, -1);
        for (int h = 0; h < g.n_half; ++h)
            if (out.half_map[h] >= 0) c.ribbon_next[out.half_map[h]] = out.half_map[next[h]];
    }
    if (g.has_labels()) {
        c.face_label.assign(c.n_half, -1);
        for (int h = 0; h < g.n_half; ++h)
            if (out.half_map[h] >= 0) c.face_label[out.half_map[h]] = g.face_label[h];
    }
    return out;
}

CycleBasis cycle_basis(const HalfEdgeGraph& g, SpanningTreePolicy policy) {
    auto es = g.edges();
    const int E = (int)es.size();
    CycleBasis out;
    std::vector<int> parent_edge(g.n_vertices, -1); // edge index into es
    std::vector<int> parent_dir(g.n_vertices, 0);   // +1: edge points toward parent->child
    std::vector<char> vseen(g.n_vertices, 0);
    std::vector<char> etree(E, 0);

    auto edge_order = [&](std::vector<int>& idx) {
        idx.resize(E);
        std::iota(idx.begin(), idx.end(), 0);
        if (policy == SpanningTreePolicy::dfs_reverse) std::reverse(idx.begin(), idx.end());
    };
    std::vector<int> order;
    edge_order(order);

    const int root = policy == SpanningTreePolicy::bfs_canonical ? 0 : g.n_vertices - 1;
    vseen[root] = 1;
    if (policy == SpanningTreePolicy::bfs_canonical) {
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int j : order) {
                auto [a, b] = es[j];
                int va = g.vertex_of[a], vb = g.vertex_of[b];
                int other = -1, dir = 0;
                if (va == v && !vseen[vb]) {
                    other = vb;
                    dir = +1;
                } else if (vb == v && !vseen[va]) {
                    other = va;
                    dir = -1;
                }
                if (other >= 0) {
                    vseen[other] = 1;
                    etree[j] = 1;
                    parent_edge[other] = j;
                    parent_dir[other] = dir;
                    q.push(other);
                }
            }
        }
    } else {
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int j : order) {
                auto [a, b] = es[j];
                int va = g.vertex_of[a], vb = g.vertex_of[b];
                int other = -1, dir = 0;
                if (va == v && !vseen[vb]) {
                    other = vb;
                    dir = +1;
                } else if (vb == v && !vseen[va]) {
                    other = va;
                    dir = -1;
                }
                if (other >= 0) {
                    vseen[other] = 1;
                    etree[j] = 1;
                    parent_edge[other] = j;
                    parent_dir[other] = dir;
                    stack.push_back(other);
                }
            }
        }
    }

    for (int j = 0; j < E; ++j)
        if (etree[j]) out.tree_edges.push_back(j);

    // path from v up to the root as edge coefficients
    auto path_to_root = [&](int v, std::map<int, int>& acc, int sgn) {
        while (parent_edge[v] >= 0) {
            int j = parent_edge[v];
            // parent_dir[v] == +1 means edge j is directed parent -> v
            acc[j] += parent_dir[v] == +1 ? -sgn : sgn;
            auto [a, b] = es[j];
            v = parent_dir[v] == +1 ? g.vertex_of[a] : g.vertex_of[b];
            if (acc[j] == 0) acc.erase(j);
        }
    };

    for (int j = 0; j < E; ++j) {
        if (etree[j]) continue;
        auto [a, b] = es[j];
        int va = g.vertex_of[a], vb = g.vertex_of[b];
        std::map<int, int> cyc;
        cyc[j] = 1;
        if (va != vb) {
            // close up: walk from head (vb) to root with +, from tail (va) with -
            path_to_root(vb, cyc, +1);
            path_to_root(va, cyc, -1);
        }
        out.cycles.push_back(std::move(cyc));
    }
    return out;
}

RibbonInvariants boundary_cycles(const HalfEdgeGraph& g) {
    g.validate();
    if (!g.has_ribbon()) throw InvalidRibbon("graph carries no ribbon structure");
    RibbonInvariants out;
    out.face_of.assign(g.n_half, -1);
    int nf = 0;
    for (int h = 0; h < g.n_half; ++h) {
        if (out.face_of[h] >= 0) continue;
        int x = h;
        do {
            out.face_of[x] = nf;
            x = g.ribbon_next[g.pairing[x]];
        } while (x != h);
        ++nf;
    }
    out.boundary_components = nf;
    int n = g.rank();
    if ((n + 1 - nf) % 2 != 0 || n + 1 - nf < 0)
        throw InvalidRibbon("face count inconsistent with rank parity");
    out.genus = (n + 1 - nf) / 2;
    return out;
}

SparseMatrix h1_transport(const HalfEdgeGraph& src, const CycleBasis& src_basis,
                          const std::vector<int>& half_map, const HalfEdgeGraph& dst,
                          const CycleBasis& dst_basis) {
    auto dst_edges = dst.edges();
    std::map<int, int> edge_of_half; // dst half-edge -> dst edge index
    for (int j = 0; j < (int)dst_edges.size(); ++j) {
        edge_of_half[dst_edges[j].first] = j;
        edge_of_half[dst_edges[j].second] = j;
    }
    auto src_edges = src.edges();
    const int n = (int)src_basis.cycles.size();
    if ((int)dst_basis.cycles.size() != n) throw Error("h1_transport: rank mismatch");

    // dst cycle basis as columns over dst edges
    std::vector<Vec> basis_cols;
    for (const auto& cyc : dst_basis.cycles) {
        Vec col(dst_edges.size(), Rational(0));
        for (auto& [j, c] : cyc) col[j] = c;
        basis_cols.push_back(std::move(col));
    }

    SparseMatrix m(n, n);
    for (int k = 0; k < n; ++k) {
        Vec chain(dst_edges.size(), Rational(0));
        for (auto& [j, c] : src_basis.cycles[k]) {
            auto [a, b] = src_edges[j];
            int na = half_map[a], nb = half_map[b];
            if (na < 0 || nb < 0) continue; // killed by contraction
            int dj = edge_of_half.at(na);
            int dir = na < nb ? +1 : -1; // dst edges directed small -> large
            chain[dj] += Rational(c * dir);
        }
        Vec coords = solve_in_basis(basis_cols, chain);
        for (int i = 0; i < n; ++i) m.set(i, k, coords[i]);
    }
    return m;
}

Rational determinant(const SparseMatrix& m) {
    if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
    const int n = m.rows();
    std::vector<Vec> a(n, Vec(n, Rational(0)));
    for (const auto& [rc, v] : m.entries()) a[rc.first][rc.second] = v;
    Rational det(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return Rational(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Rational inv = 1 / a[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rational f = a[r][col] * inv;
            for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

std::string HalfEdgeGraph::to_json() const {
    json j;
    j["half_edges"] = json::array();
    for (int h = 0; h < n_half; ++h) j["half_edges"].push_back(h);
    j["pairing"] = json::array();
    for (auto [a, b] : edges()) j["pairing"].push_back({a, b});
    j["vertex_of"] = json::object();
    for (int h = 0; h < n_half; ++h) j["vertex_of"][std::to_string(h)] = vertex_of[h];
    if (has_ribbon()) {
        j["ribbon_next"] = json::object();
        for (int h = 0; h < n_half; ++h) j["ribbon_next"][std::to_string(h)] = ribbon_next[h];
    }
    if (has_labels()) {
        j["face_labels"] = json::object();
        for (int h = 0; h < n_half; ++h) j["face_labels"][std::to_string(h)] = face_label[h];
    }
    return j.dump();
}

HalfEdgeGraph HalfEdgeGraph::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("graph JSON: ") + e.what());
    }
    HalfEdgeGraph g;
    g.n_half = (int)j.at("half_edges").size();
    g.pairing.assign(g.n_half, -1);
    g.vertex_of.assign(g.n_half, -1);
    for (auto& pr : j.at("pairing")) {
        int a = pr[0].get<int>(), b = pr[1].get<int>();
        if (a < 0 || b < 0 || a >= g.n_half || b >= g.n_half) throw ParseError("pairing id range");
        g.pairing[a] = b;
        g.pairing[b] = a;
    }
    int maxv = -1;
    for (auto& [k, v] : j.at("vertex_of").items()) {
        int h = std::stoi(k);
        g.vertex_of.at(h) = v.get<int>();
        maxv = std::max(maxv, v.get<int>());
    }
    g.n_vertices = maxv + 1;
    if (j.contains("ribbon_next")) {
        g.ribbon_next.assign(g.n_half, -1);
        for (auto& [k, v] : j["ribbon_next"].items()) g.ribbon_next.at(std::stoi(k)) = v.get<int>();
    }
    if (j.contains("face_labels")) {
        g.face_label.assign(g.n_half, -1);
        for (auto& [k, v] : j["face_labels"].items()) g.face_label.at(std::stoi(k)) = v.get<int>();
    }
    g.validate();
    return g;
}

} // namespace graphhom
