#include "graphhom/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

#include "graphhom/errors.hpp"

namespace graphhom {

Caps Caps::from_env() {
    Caps caps;
    const char* e = std::getenv("GRAPHHOM_CAPS");
    if (!e) return caps;
    std::stringstream ss(e);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) continue;
        std::string key = item.substr(0, eq);
        int val = std::atoi(item.c_str() + eq + 1);
        if (key == "rank" && val > 0) caps.max_rank = val;
        if (key == "gb" && val > 0) caps.max_gb = val;
    }
    return caps;
}

namespace {

// Multigraph presented as loop counts + upper-triangular multiplicities.
struct AdjClass {
    int v;
    std::vector<int> cells; // (i,i) then (i,j) i<j, row-major upper triangle

    int& at(int i, int j, int v_) { return cells[idx(i, j, v_)]; }
    static int idx(int i, int j, int v) {
        if (i > j) std::swap(i, j);
        // row-major upper triangle including diagonal
        return i * v - i * (i - 1) / 2 + (j - i);
    }
};

std::vector<int> permuted_cells(const std::vector<int>& cells, int v, const std::vector<int>& p) {
    std::vector<int> out(cells.size());
    for (int i = 0; i < v; ++i)
        for (int j = i; j < v; ++j) out[AdjClass::idx(i, j, v)] = cells[AdjClass::idx(p[i], p[j], v)];
    return out;
}

std::vector<int> canonical_cells(const std::vector<int>& cells, int v) {
    std::vector<int> p(v);
    std::iota(p.begin(), p.end(), 0);
    std::vector<int> best = cells;
    do {
        auto cand = permuted_cells(cells, v, p);
        if (cand < best) best = cand;
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

bool cells_connected(const std::vector<int>& cells, int v) {
    std::vector<char> seen(v, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        for (int b = 0; b < v; ++b) {
            if (b == a || seen[b]) continue;
            if (cells[AdjClass::idx(a, b, v)] > 0) {
                seen[b] = 1;
                ++count;
                stack.push_back(b);
            }
        }
    }
    return count == v;
}

void enumerate_adj(int v, int e, std::vector<std::vector<int>>& out) {
    const int ncells = v * (v + 1) / 2;
    std::vector<int> cells(ncells, 0);
    std::vector<int> degree(v, 0);
    std::set<std::vector<int>> seen;

    // cells in order: all (i,j) with i<=j, grouped by i
    std::vector<std::pair<int, int>> order;
    for (int i = 0; i < v; ++i)
        for (int j = i; j < v; ++j) order.emplace_back(i, j);

    auto rec = [&](auto&& self, std::size_t k, int remaining) -> void {
        if (k == order.size()) {
            if (remaining != 0) return;
            for (int i = 0; i < v; ++i)
                if (degree[i] < 3) return;
            if (!cells_connected(cells, v)) return;
            auto canon = canonical_cells(cells, v);
            if (seen.insert(canon).second) out.push_back(cells);
            return;
        }
        auto [i, j] = order[k];
        // degree deficit that future cells can still fix
        for (int m = 0; m <= remaining; ++m) {
            cells[AdjClass::idx(i, j, v)] = m;
            int dd = (i == j) ? 2 * m : m;
            degree[i] += dd;
            if (i != j) degree[j] += m;
            // prune: once row i is complete, vertex i's degree is final
            bool ok = true;
            if (j == v - 1 && degree[i] < 3) ok = false;
            if (ok) self(self, k + 1, remaining - m);
            degree[i] -= dd;
            if (i != j) degree[j] -= m;
        }
        cells[AdjClass::idx(i, j, v)] = 0;
    };
    rec(rec, 0, e);
}

HalfEdgeGraph cells_to_graph(const std::vector<int>& cells, int v) {
    HalfEdgeGraph g;
    g.n_vertices = v;
    for (int i = 0; i < v; ++i) {
        for (int j = i; j < v; ++j) {
            int m = cells[AdjClass::idx(i, j, v)];
            for (int t = 0; t < m; ++t) {
                int a = g.n_half++, b = g.n_half++;
                g.vertex_of.push_back(i);
                g.vertex_of.push_back(j);
                g.pairing.push_back(b);
                g.pairing.push_back(a);
            }
        }
    }
    return g;
}

} // namespace

std::vector<HalfEdgeGraph> enumerate_graphs(int n, const Caps& caps) {
    if (n < 2) throw Error("enumerate_graphs: rank must be >= 2");
    if (n > caps.max_rank)
        throw OutOfScope("rank " + std::to_string(n) + " exceeds cap " +
                         std::to_string(caps.max_rank));
    std::vector<HalfEdgeGraph> out;
    for (int v = 1; v <= 2 * n - 2; ++v) {
        int e = v + n - 1;
        if (2 * e < 3 * v) continue; // handshake: all valences >= 3
        std::vector<std::vector<int>> classes;
        enumerate_adj(v, e, classes);
        for (const auto& cells : classes) out.push_back(canonicalize(cells_to_graph(cells, v)).graph);
    }
    std::sort(out.begin(), out.end(),
              [](const HalfEdgeGraph& a, const HalfEdgeGraph& b) { return a.encode() < b.encode(); });
    return out;
}

namespace {

// all cyclic orders of hs as next-cycles, first element held fixed
void cyclic_orders(const std::vector<int>& hs, std::vector<std::vector<int>>& out) {
    std::vector<int> rest(hs.begin() + 1, hs.end());
    std::sort(rest.begin(), rest.end());
    do {
        std::vector<int> cyc;
        cyc.push_back(hs[0]);
        for (int x : rest) cyc.push_back(x);
        out.push_back(cyc);
    } while (std::next_permutation(rest.begin(), rest.end()));
}

} // namespace

std::vector<HalfEdgeGraph> enumerate_ribbon_graphs(int genus, int boundary, bool labeled,
                                                   const Caps& caps) {
    if (genus < 0 || boundary < 1 || 2 - 2 * genus - boundary >= 0)
        throw Error("enumerate_ribbon_graphs: need 2-2g-b < 0");
    if (6 * genus + 3 * boundary > caps.max_gb)
        throw OutOfScope("6g+3b = " + std::to_string(6 * genus + 3 * boundary) + " exceeds cap " +
                         std::to_string(caps.max_gb));
    const int n = 2 * genus + boundary - 1;
    Caps rank_caps = caps;
    rank_caps.max_rank = std::max(caps.max_rank, n); // the gb cap governs here
    auto bases = enumerate_graphs(n, rank_caps);

    std::set<std::string> seen;
    std::vector<HalfEdgeGraph> out;
    for (const auto& base : bases) {
        auto byv = base.half_edges_by_vertex();
        // per vertex: list of candidate next-cycles
        std::vector<std::vector<std::vector<int>>> choices(base.n_vertices);
        for (int v = 0; v < base.n_vertices; ++v) cyclic_orders(byv[v], choices[v]);
        std::vector<std::size_t> pick(base.n_vertices, 0);
        while (true) {
            HalfEdgeGraph g = base;
            g.ribbon_next.assign(g.n_half, -1);
            for (int v = 0; v < base.n_vertices; ++v) {
                const auto& cyc = choices[v][pick[v]];
                for (std::size_t k = 0; k < cyc.size(); ++k)
                    g.ribbon_next[cyc[k]] = cyc[(k + 1) % cyc.size()];
            }
            auto inv = boundary_cycles(g);
            if (inv.genus == genus && inv.boundary_components == boundary) {
                if (!labeled) {
                    auto canon = canonicalize(g).graph;
                    if (seen.insert(canon.encode()).second) out.push_back(std::move(canon));
                } else {
                    std::vector<int> lab(boundary);
                    std::iota(lab.begin(), lab.end(), 0);
                    do {
                        HalfEdgeGraph gl = g;
                        gl.face_label.assign(g.n_half, -1);
                        for (int h = 0; h < g.n_half; ++h) gl.face_label[h] = lab[inv.face_of[h]];
                        auto canon = canonicalize(gl).graph;
                        if (seen.insert(canon.encode()).second) out.push_back(std::move(canon));
                    } while (std::next_permutation(lab.begin(), lab.end()));
                }
            }
            // odometer
            int v = 0;
            while (v < base.n_vertices) {
                if (++pick[v] < choices[v].size()) break;
                pick[v] = 0;
                ++v;
            }
            if (v == base.n_vertices) break;
        }
    }
    std::sort(out.begin(), out.end(),
              [](const HalfEdgeGraph& a, const HalfEdgeGraph& b) { return a.encode() < b.encode(); });
    return out;
}

} // namespace graphhom
