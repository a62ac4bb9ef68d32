#include "tpc/structure.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>

namespace tpc {

namespace {

std::vector<int> bfs_distances(const Graph& g, const std::vector<int>& sources) {
    std::vector<int> dist(g.vertex_count(), kInfiniteDiameter);
    std::queue<int> q;
    for (int s : sources) {
        if (dist[s] == kInfiniteDiameter) {
            dist[s] = 0;
            q.push(s);
        }
    }
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u)) {
            if (dist[w] == kInfiniteDiameter) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

}  // namespace

bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return false;
    auto dist = bfs_distances(g, {0});
    for (int v = 0; v < n; ++v)
        if (dist[v] == kInfiniteDiameter) return false;
    return true;
}

StructureProfile structure_profile(const Graph& g) {
    int n = g.vertex_count();
    StructureProfile p;
    p.connected = is_connected(g);
    p.complete = g.is_complete();

    // bridges via DFS low-link
    std::vector<int> disc(n, 0), low(n, 0);
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int u, int parent_edge) {
        disc[u] = low[u] = ++timer;
        const auto& nbrs = g.neighbors(u);
        const auto& inc = g.incident_edges(u);
        for (size_t i = 0; i < nbrs.size(); ++i) {
            int w = nbrs[i], ei = inc[i];
            if (ei == parent_edge) continue;
            if (disc[w]) {
                low[u] = std::min(low[u], disc[w]);
            } else {
                dfs(w, ei);
                low[u] = std::min(low[u], low[w]);
                if (low[w] > disc[u]) p.bridges.push_back(make_edge(u, w));
            }
        }
    };
    for (int v = 0; v < n; ++v)
        if (!disc[v]) dfs(v, -1);
    std::sort(p.bridges.begin(), p.bridges.end());

    std::vector<int> bridges_at(n, 0);
    for (const auto& [u, v] : p.bridges) {
        ++bridges_at[u];
        ++bridges_at[v];
    }
    for (int v = 0; v < n; ++v) p.max_bridges_at_vertex = std::max(p.max_bridges_at_vertex, bridges_at[v]);
    for (const auto& [u, v] : p.bridges)
        p.bridge_max_degree = std::max({p.bridge_max_degree, g.degree(u), g.degree(v)});

    if (!p.connected) {
        p.diameter = kInfiniteDiameter;
    } else {
        p.diameter = 0;
        for (int v = 0; v < n; ++v) {
            auto dist = bfs_distances(g, {v});
            for (int w = 0; w < n; ++w) p.diameter = std::max(p.diameter, dist[w]);
        }
    }
    return p;
}

BlockDecomposition block_decomposition(const Graph& g, int root_vertex) {
    int n = g.vertex_count();
    if (!is_connected(g)) throw std::invalid_argument("block decomposition requires a connected graph");
    if (root_vertex < 0 || root_vertex >= n) throw std::invalid_argument("root vertex out of range");

    BlockDecomposition bd;
    if (n == 1) {
        bd.blocks = {{0}};
        bd.block_graph = Graph(1, {});
        bd.bfs_order = {0};
        bd.bfs_parent = {-1};
        bd.attach_vertex = {-1};
        return bd;
    }

    std::vector<int> disc(n, 0), low(n, 0);
    std::vector<char> is_cut(n, 0);
    std::vector<Edge> stack;
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int u, int parent_edge) {
        disc[u] = low[u] = ++timer;
        int children = 0;
        const auto& nbrs = g.neighbors(u);
        const auto& inc = g.incident_edges(u);
        for (size_t i = 0; i < nbrs.size(); ++i) {
            int w = nbrs[i], ei = inc[i];
            if (ei == parent_edge) continue;
            if (disc[w]) {
                if (disc[w] < disc[u]) {
                    stack.push_back(make_edge(u, w));
                    low[u] = std::min(low[u], disc[w]);
                }
            } else {
                ++children;
                stack.push_back(make_edge(u, w));
                dfs(w, ei);
                low[u] = std::min(low[u], low[w]);
                if (low[w] >= disc[u]) {
                    if (parent_edge != -1) is_cut[u] = 1;
                    std::set<int> verts;
                    Edge top;
                    do {
                        top = stack.back();
                        stack.pop_back();
                        verts.insert(top.first);
                        verts.insert(top.second);
                    } while (top != make_edge(u, w));
                    bd.blocks.emplace_back(verts.begin(), verts.end());
                }
            }
        }
        if (parent_edge == -1 && children >= 2) is_cut[u] = 1;
    };
    dfs(0, -1);

    for (int v = 0; v < n; ++v)
        if (is_cut[v]) bd.cut_vertices.push_back(v);

    int nb = static_cast<int>(bd.blocks.size());
    std::vector<std::vector<int>> blocks_of_vertex(n);
    for (int b = 0; b < nb; ++b)
        for (int v : bd.blocks[b]) blocks_of_vertex[v].push_back(b);

    std::set<Edge> block_edges;
    for (int v = 0; v < n; ++v) {
        const auto& in = blocks_of_vertex[v];
        for (size_t i = 0; i < in.size(); ++i)
            for (size_t j = i + 1; j < in.size(); ++j) block_edges.insert(make_edge(in[i], in[j]));
    }
    bd.block_graph = Graph(nb, {block_edges.begin(), block_edges.end()});

    int root_block = -1;
    for (int b = 0; b < nb && root_block < 0; ++b)
        if (std::binary_search(bd.blocks[b].begin(), bd.blocks[b].end(), root_vertex)) root_block = b;

    bd.bfs_parent.assign(nb, -2);
    bd.attach_vertex.assign(nb, -1);
    bd.bfs_parent[root_block] = -1;
    std::queue<int> q;
    q.push(root_block);
    bd.bfs_order.push_back(root_block);
    while (!q.empty()) {
        int b = q.front();
        q.pop();
        for (int c : bd.block_graph.neighbors(b)) {
            if (bd.bfs_parent[c] != -2) continue;
            bd.bfs_parent[c] = b;
            std::vector<int> shared;
            std::set_intersection(bd.blocks[b].begin(), bd.blocks[b].end(), bd.blocks[c].begin(),
                                  bd.blocks[c].end(), std::back_inserter(shared));
            bd.attach_vertex[c] = shared.front();
            bd.bfs_order.push_back(c);
            q.push(c);
        }
    }
    return bd;
}

bool is_two_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3 || !is_connected(g)) return false;
    // connected and no articulation vertex
    std::vector<int> disc(n, 0), low(n, 0);
    int timer = 0;
    bool cut = false;
    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[u] = low[u] = ++timer;
        int children = 0;
        for (int w : g.neighbors(u)) {
            if (w == parent) continue;
            if (disc[w]) {
                low[u] = std::min(low[u], disc[w]);
            } else {
                ++children;
                dfs(w, u);
                low[u] = std::min(low[u], low[w]);
                if (disc[u] != 1 && low[w] >= disc[u]) cut = true;
            }
        }
        if (disc[u] == 1 && children >= 2) cut = true;
    };
    dfs(0, -1);
    return !cut;
}

EarDecomposition ear_decomposition(const Graph& g) {
    if (!is_two_connected(g)) throw std::invalid_argument("ear decomposition requires a 2-connected graph");
    int n = g.vertex_count();
    EarDecomposition ed;
    std::vector<char> v_cov(n, 0), e_cov(g.edge_count(), 0);

    // base cycle: close the first edge with a shortest detour
    auto [u0, v0] = g.edges()[0];
    {
        std::vector<int> parent(n, -1);
        std::vector<char> seen(n, 0);
        std::queue<int> q;
        seen[v0] = 1;
        q.push(v0);
        while (!q.empty() && !seen[u0]) {
            int x = q.front();
            q.pop();
            const auto& nbrs = g.neighbors(x);
            const auto& inc = g.incident_edges(x);
            for (size_t i = 0; i < nbrs.size(); ++i) {
                if (inc[i] == 0) continue;  // the edge being closed has index 0
                int w = nbrs[i];
                if (!seen[w]) {
                    seen[w] = 1;
                    parent[w] = x;
                    q.push(w);
                }
            }
        }
        std::vector<int> path;  // u0 .. v0
        for (int x = u0; x != -1; x = parent[x]) path.push_back(x);
        ed.base_cycle = path;  // starts at u0, ends at v0; closing edge (v0,u0) is edges()[0]
        std::reverse(ed.base_cycle.begin() + 1, ed.base_cycle.end());  // u0, v0, ..., back toward u0
        for (int x : ed.base_cycle) v_cov[x] = 1;
        for (size_t i = 0; i < ed.base_cycle.size(); ++i) {
            int a = ed.base_cycle[i], b = ed.base_cycle[(i + 1) % ed.base_cycle.size()];
            e_cov[g.edge_index(a, b)] = 1;
        }
    }

    int covered_edges = static_cast<int>(ed.base_cycle.size());
    while (covered_edges < g.edge_count()) {
        int pick = -1;
        for (int i = 0; i < g.edge_count(); ++i) {
            if (e_cov[i]) continue;
            auto [a, b] = g.edges()[i];
            if (v_cov[a] || v_cov[b]) {
                pick = i;
                break;
            }
        }
        auto [x, y] = g.edges()[pick];
        if (!v_cov[x]) std::swap(x, y);
        Ear ear;
        ear.u = x;
        if (v_cov[y]) {
            ear.v = y;
            e_cov[pick] = 1;
            ++covered_edges;
        } else {
            // walk from y through uncovered vertices, avoiding x, to the first covered vertex
            std::vector<int> parent(n, -1);
            std::vector<char> seen(n, 0);
            seen[x] = 1;
            seen[y] = 1;
            std::queue<int> q;
            q.push(y);
            int hit = -1;
            while (!q.empty() && hit < 0) {
                int a = q.front();
                q.pop();
                for (int w : g.neighbors(a)) {
                    if (seen[w]) continue;
                    if (v_cov[w]) {
                        parent[w] = a;
                        hit = w;
                        break;
                    }
                    seen[w] = 1;
                    parent[w] = a;
                    q.push(w);
                }
            }
            ear.v = hit;
            std::vector<int> tail;  // hit .. y
            for (int a = hit; a != -1; a = parent[a]) tail.push_back(a);
            // internal vertices in path order x -> y -> ... -> hit
            for (auto it = tail.rbegin(); it != tail.rend(); ++it)
                if (*it != hit) ear.internal.push_back(*it);
            e_cov[pick] = 1;
            ++covered_edges;
            for (size_t i = 0; i + 1 < tail.size(); ++i) {
                e_cov[g.edge_index(tail[i], tail[i + 1])] = 1;
                ++covered_edges;
            }
            for (int a : ear.internal) v_cov[a] = 1;
        }
        ed.ears.push_back(std::move(ear));
    }
    return ed;
}

Graph minimally_two_connected_spanning(const Graph& g) {
    if (!is_two_connected(g)) throw std::invalid_argument("input must be 2-connected");
    std::vector<Edge> kept = g.edges();
    for (const Edge& e : g.edges()) {
        std::vector<Edge> trial;
        trial.reserve(kept.size() - 1);
        for (const Edge& f : kept)
            if (f != e) trial.push_back(f);
        if (trial.size() < kept.size() && is_two_connected(Graph(g.vertex_count(), trial)))
            kept = std::move(trial);
    }
    return Graph(g.vertex_count(), kept);
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x];
        return x;
    }
    // returns the child root when merged (for rollback), -1 if already joined
    int unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return -1;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        return b;
    }
    void undo(int child) { parent[child] = child; }
};

bool degree_bounded_tree_search(const Graph& g, int target, size_t idx, int chosen, UnionFind& uf,
                                std::vector<int>& deg, std::vector<Edge>& out) {
    int n = g.vertex_count();
    size_t m = g.edges().size();
    if (chosen == n - 1) return true;
    if (idx == m || chosen + static_cast<int>(m - idx) < n - 1) return false;
    auto [u, v] = g.edges()[idx];
    if (deg[u] < target && deg[v] < target) {
        int merged = uf.unite(u, v);
        if (merged >= 0) {
            ++deg[u];
            ++deg[v];
            out.push_back(g.edges()[idx]);
            if (degree_bounded_tree_search(g, target, idx + 1, chosen + 1, uf, deg, out)) return true;
            out.pop_back();
            --deg[u];
            --deg[v];
            uf.undo(merged);
        }
    }
    return degree_bounded_tree_search(g, target, idx + 1, chosen, uf, deg, out);
}

}  // namespace

Graph spanning_tree(const Graph& g, SpanningTreeStrategy strategy) {
    int n = g.vertex_count();
    if (!is_connected(g)) throw std::invalid_argument("spanning tree requires a connected graph");
    if (n == 1) return Graph(1, {});

    if (strategy == SpanningTreeStrategy::bfs) {
        std::vector<Edge> tree;
        std::vector<char> seen(n, 0);
        std::queue<int> q;
        seen[0] = 1;
        q.push(0);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    tree.push_back(make_edge(u, w));
                    q.push(w);
                }
            }
        }
        return Graph(n, tree);
    }

    if (strategy == SpanningTreeStrategy::min_max_degree_heuristic) {
        std::vector<Edge> tree;
        std::vector<char> in_tree(n, 0);
        std::vector<int> tdeg(n, 0);
        in_tree[0] = 1;
        for (int step = 0; step < n - 1; ++step) {
            int bu = -1, bv = -1;
            for (int u = 0; u < n; ++u) {
                if (!in_tree[u]) continue;
                for (int w : g.neighbors(u)) {
                    if (in_tree[w]) continue;
                    if (bu < 0 || std::tuple(tdeg[u], u, w) < std::tuple(tdeg[bu], bu, bv)) {
                        bu = u;
                        bv = w;
                    }
                }
            }
            in_tree[bv] = 1;
            ++tdeg[bu];
            ++tdeg[bv];
            tree.push_back(make_edge(bu, bv));
        }
        return Graph(n, tree);
    }

    // exhaustive_min_delta
    if (n > 10)
        throw std::invalid_argument("exhaustive spanning tree search is limited to n <= 10");
    for (int target = 1; target < n; ++target) {
        UnionFind uf(n);
        std::vector<int> deg(n, 0);
        std::vector<Edge> out;
        if (degree_bounded_tree_search(g, target, 0, 0, uf, deg, out)) return Graph(n, out);
    }
    throw std::logic_error("unreachable: connected graph always has a spanning tree");
}

bool is_two_way_two_step_dominating(const Graph& g, const std::vector<int>& d) {
    int n = g.vertex_count();
    if (d.empty()) return false;
    std::vector<char> in_d(n, 0);
    for (int v : d) {
        if (v < 0 || v >= n || in_d[v]) return false;
        in_d[v] = 1;
    }
    // induced connectivity
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(d[0]);
    seen[d[0]] = 1;
    int reached = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        ++reached;
        for (int w : g.neighbors(u))
            if (in_d[w] && !seen[w]) {
                seen[w] = 1;
                q.push(w);
            }
    }
    if (reached != static_cast<int>(d.size())) return false;
    // pendant vertices must be inside
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1 && !in_d[v]) return false;
    auto dist = bfs_distances(g, d);
    for (int v = 0; v < n; ++v) {
        if (dist[v] > 2) return false;
        if (dist[v] == 2) {
            int support = 0;
            for (int w : g.neighbors(v))
                if (dist[w] == 1) ++support;
            if (support < 2) return false;
        }
    }
    return true;
}

std::vector<int> two_way_two_step_dominating_set(const Graph& g) {
    int n = g.vertex_count();
    if (n < 4) throw std::invalid_argument("dominating set construction requires n >= 4");
    if (!is_connected(g)) throw std::invalid_argument("dominating set construction requires a connected graph");

    std::set<int> d;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1) d.insert(v);

    // cover everything within distance 2, greedily by coverage
    while (true) {
        std::vector<int> sources(d.begin(), d.end());
        auto dist = sources.empty() ? std::vector<int>(n, kInfiniteDiameter) : bfs_distances(g, sources);
        std::vector<int> uncovered;
        for (int v = 0; v < n; ++v)
            if (dist[v] > 2) uncovered.push_back(v);
        if (uncovered.empty()) break;
        int best = -1, best_gain = -1;
        for (int c = 0; c < n; ++c) {
            if (d.count(c)) continue;
            auto cd = bfs_distances(g, {c});
            int gain = 0;
            for (int v : uncovered)
                if (cd[v] <= 2) ++gain;
            if (gain > best_gain) {
                best_gain = gain;
                best = c;
            }
        }
        d.insert(best);
    }

    // connect the induced subgraph: repeatedly join the lowest component to its
    // nearest other component along a shortest path
    while (true) {
        std::vector<int> comp(n, -1);
        int ncomp = 0;
        for (int v : d) {
            if (comp[v] != -1) continue;
            std::queue<int> q;
            q.push(v);
            comp[v] = ncomp;
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                for (int w : g.neighbors(u))
                    if (d.count(w) && comp[w] == -1) {
                        comp[w] = ncomp;
                        q.push(w);
                    }
            }
            ++ncomp;
        }
        if (ncomp <= 1) break;
        std::vector<int> sources;
        for (int v : d)
            if (comp[v] == 0) sources.push_back(v);
        std::vector<int> parent(n, -1), dist(n, kInfiniteDiameter);
        std::queue<int> q;
        for (int s : sources) {
            dist[s] = 0;
            q.push(s);
        }
        int hit = -1;
        while (!q.empty() && hit < 0) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                if (dist[w] != kInfiniteDiameter) continue;
                dist[w] = dist[u] + 1;
                parent[w] = u;
                if (d.count(w) && comp[w] != 0) {
                    hit = w;
                    break;
                }
                q.push(w);
            }
        }
        for (int x = parent[hit]; x != -1 && dist[x] > 0; x = parent[x]) d.insert(x);
    }

    // two-way repair: every distance-2 vertex needs two distance-1 neighbors
    while (true) {
        std::vector<int> sources(d.begin(), d.end());
        auto dist = bfs_distances(g, sources);
        int violator = -1;
        for (int v = 0; v < n && violator < 0; ++v) {
            if (dist[v] != 2) continue;
            int support = 0;
            for (int w : g.neighbors(v))
                if (dist[w] == 1) ++support;
            if (support < 2) violator = v;
        }
        if (violator < 0) break;
        for (int w : g.neighbors(violator))
            if (dist[w] == 1) {
                d.insert(w);
                break;
            }
    }

    // prune to a minimal-under-inclusion set, ascending order, to fixpoint
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> snapshot(d.begin(), d.end());
        for (int v : snapshot) {
            std::vector<int> trial;
            for (int w : d)
                if (w != v) trial.push_back(w);
            if (is_two_way_two_step_dominating(g, trial)) {
                d.erase(v);
                changed = true;
            }
        }
    }
    return {d.begin(), d.end()};
}

namespace {

bool ham_extend(const Graph& g, std::vector<int>& path, std::vector<char>& used) {
    int n = g.vertex_count();
    if (static_cast<int>(path.size()) == n) return true;
    int cur = path.back();
    // prune: the unvisited region plus the current endpoint must stay connected
    {
        std::vector<char> seen(n, 0);
        std::queue<int> q;
        q.push(cur);
        seen[cur] = 1;
        int found = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u))
                if (!seen[w] && !used[w]) {
                    seen[w] = 1;
                    ++found;
                    q.push(w);
                }
        }
        if (found != n - static_cast<int>(path.size()) + 1) return false;
    }
    for (int w : g.neighbors(cur)) {
        if (used[w]) continue;
        used[w] = 1;
        path.push_back(w);
        if (ham_extend(g, path, used)) return true;
        path.pop_back();
        used[w] = 0;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> hamiltonian_path(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return std::nullopt;
    if (n == 1) return std::vector<int>{0};
    if (!is_connected(g)) return std::nullopt;
    for (int s = 0; s < n; ++s) {
        std::vector<int> path{s};
        std::vector<char> used(n, 0);
        used[s] = 1;
        if (ham_extend(g, path, used)) return path;
    }
    return std::nullopt;
}

}  // namespace tpc
