#include "tpc/solve.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <queue>
#include <thread>
#include <tuple>

#include "tpc/rng.hpp"
#include "tpc/structure.hpp"

namespace tpc {

namespace {

// Shared scaffolding for the exact solvers: raw color arrays (0 = not yet
// assigned), structural prunes, and an all-pairs feasibility test that
// treats unassigned elements as compatible with anything. At a full
// assignment that test is exact.
struct Enumerator {
    const Graph& g;
    Mode mode;
    int k = 0;
    bool canonical = true;
    int stride = 4;
    int nv, ne, total;

    std::vector<int> vcol, ecol;
    std::vector<char> is_bridge;
    std::vector<std::vector<int>> vbridges;  // incident bridge edge indices
    std::vector<std::pair<int, int>> pair_order;
    std::uint64_t tested = 0;
    std::atomic<bool>* abort = nullptr;

    std::vector<char> visited;  // scratch for path DFS

    Enumerator(const Graph& g_, Mode mode_) : g(g_), mode(mode_) {
        nv = g.vertex_count();
        ne = g.edge_count();
        total = mode == Mode::pc ? ne : nv + ne;
        vcol.assign(nv, 0);
        ecol.assign(ne, 0);
        visited.assign(nv, 0);

        auto profile = structure_profile(g);
        is_bridge.assign(ne, 0);
        vbridges.assign(nv, {});
        for (const auto& [u, v] : profile.bridges) {
            int ei = g.edge_index(u, v);
            is_bridge[ei] = 1;
            vbridges[u].push_back(ei);
            vbridges[v].push_back(ei);
        }

        // farthest pairs first: infeasibility shows up on long routes
        std::vector<std::tuple<int, int, int>> order;
        for (int s = 0; s < nv; ++s) {
            std::vector<int> dist(nv, -1);
            std::queue<int> q;
            dist[s] = 0;
            q.push(s);
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                for (int w : g.neighbors(u))
                    if (dist[w] < 0) {
                        dist[w] = dist[u] + 1;
                        q.push(w);
                    }
            }
            for (int t = s + 1; t < nv; ++t) order.emplace_back(-dist[t], s, t);
        }
        std::sort(order.begin(), order.end());
        for (auto& [d, s, t] : order) pair_order.emplace_back(s, t);
    }

    bool edge_blocked(int e1, int e2) const { return e1 && e2 && e1 == e2; }

    // DFS for a path u..v where every condition involving an unassigned
    // color is treated as satisfiable.
    bool pair_feasible(int u, int v) {
        bool found = false;
        std::vector<int> path{u};
        visited[u] = 1;
        std::function<void()> dfs = [&]() {
            if (found) return;
            int last = path.back();
            if (last == v) {
                found = true;
                return;
            }
            int prev = path.size() >= 2 ? path[path.size() - 2] : -1;
            bool prev_is_start = path.size() == 2;
            for (int w : g.neighbors(last)) {
                if (visited[w]) continue;
                if (prev >= 0) {
                    int e1 = ecol[g.edge_index(prev, last)];
                    int e2 = ecol[g.edge_index(last, w)];
                    if (mode == Mode::pc) {
                        if (edge_blocked(e1, e2)) continue;
                    } else {
                        if (edge_blocked(e1, e2)) continue;
                        int mid = vcol[last];
                        if (mid && ((e1 && mid == e1) || (e2 && mid == e2))) continue;
                        if (!prev_is_start && vcol[prev] && vcol[last] && vcol[prev] == vcol[last])
                            continue;
                    }
                }
                visited[w] = 1;
                path.push_back(w);
                dfs();
                path.pop_back();
                visited[w] = 0;
                if (found) return;
            }
        };
        dfs();
        visited[u] = 0;
        return found;
    }

    bool all_pairs_feasible() {
        for (auto& [u, v] : pair_order)
            if (!pair_feasible(u, v)) return false;
        return true;
    }

    // cheap structural prunes after assigning element `depth`
    bool locally_consistent(int depth) const {
        if (mode != Mode::pc && depth < nv) {
            int x = depth;
            if (vbridges[x].size() >= 2)
                for (int f : vbridges[x])
                    if (ecol[f] && ecol[f] == vcol[x]) return false;
            return true;
        }
        int e = mode == Mode::pc ? depth : depth - nv;
        if (!is_bridge[e]) return true;
        auto [u, v] = g.edges()[e];
        for (int x : {u, v}) {
            for (int f : vbridges[x])
                if (f != e && ecol[f] && ecol[f] == ecol[e]) return false;
            if (mode != Mode::pc && vbridges[x].size() >= 2 && vcol[x] && vcol[x] == ecol[e])
                return false;
        }
        return true;
    }

    void assign(int depth, int color) {
        if (mode == Mode::pc) {
            ecol[depth] = color;
        } else if (depth < nv) {
            vcol[depth] = color;
        } else {
            ecol[depth - nv] = color;
        }
    }

    bool enumerate(int depth, int maxc) {
        if (abort && abort->load(std::memory_order_relaxed)) return false;
        if (depth == total) {
            ++tested;
            return all_pairs_feasible();  // exact here: nothing unassigned
        }
        int limit = canonical ? std::min(k, maxc + 1) : k;
        for (int color = 1; color <= limit; ++color) {
            assign(depth, color);
            bool ok = locally_consistent(depth);
            if (ok && stride > 0 && depth + 1 < total && (depth + 1) % stride == 0)
                ok = all_pairs_feasible();
            if (ok && enumerate(depth + 1, std::max(maxc, color))) return true;
        }
        assign(depth, 0);
        return false;
    }

    TotalColoring snapshot() const {
        TotalColoring c;
        c.vertex_colors = vcol;
        c.edge_colors = ecol;
        if (mode == Mode::pc)
            c.vertex_colors.assign(nv, 1);
        return c;
    }
};

// Enumerate canonical prefixes of the first `depth` elements for splitting
// work across threads.
void collect_prefixes(Enumerator& e, int depth, int at, int maxc, std::vector<std::vector<int>>& out,
                      std::vector<int>& cur) {
    if (at == depth) {
        out.push_back(cur);
        return;
    }
    int limit = e.canonical ? std::min(e.k, maxc + 1) : e.k;
    for (int color = 1; color <= limit; ++color) {
        e.assign(at, color);
        cur.push_back(color);
        if (e.locally_consistent(at)) collect_prefixes(e, depth, at + 1, std::max(maxc, color), out, cur);
        cur.pop_back();
    }
    e.assign(at, 0);
}

bool run_at_k(const Graph& g, Mode mode, int k, const SolveOptions& opts, std::uint64_t& tested,
              TotalColoring& out) {
    if (opts.workers <= 1) {
        Enumerator e(g, mode);
        e.k = k;
        e.canonical = opts.symmetry_breaking;
        e.stride = opts.prune_stride;
        bool found = e.enumerate(0, 0);
        tested += e.tested;
        if (found) out = e.snapshot();
        return found;
    }

    Enumerator probe(g, mode);
    probe.k = k;
    probe.canonical = opts.symmetry_breaking;
    int depth = 0;
    std::vector<std::vector<int>> tasks{{}};
    while (depth < probe.total && static_cast<int>(tasks.size()) < opts.workers * 4) {
        ++depth;
        tasks.clear();
        std::vector<int> cur;
        collect_prefixes(probe, depth, 0, 0, tasks, cur);
        if (tasks.empty()) return false;  // every prefix already pruned
    }

    std::atomic<bool> found{false};
    std::atomic<size_t> next{0};
    std::atomic<std::uint64_t> total_tested{0};
    std::mutex out_mutex;
    auto worker = [&]() {
        while (!found.load()) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            Enumerator e(g, mode);
            e.k = k;
            e.canonical = opts.symmetry_breaking;
            e.stride = opts.prune_stride;
            e.abort = &found;
            int maxc = 0;
            bool ok = true;
            for (int d = 0; d < depth; ++d) {
                e.assign(d, tasks[i][d]);
                maxc = std::max(maxc, tasks[i][d]);
                if (!e.locally_consistent(d)) ok = false;
            }
            if (ok && e.enumerate(depth, maxc)) {
                std::lock_guard<std::mutex> lock(out_mutex);
                if (!found.exchange(true)) out = e.snapshot();
            }
            total_tested.fetch_add(e.tested);
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < opts.workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    tested += total_tested.load();
    return found.load();
}

SolveResult exact_elementwise(const Graph& g, Mode mode, const SolveOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();
    if (!is_connected(g)) throw std::invalid_argument("exact solver requires a connected graph");
    int elements = mode == Mode::pc ? g.edge_count() : g.vertex_count() + g.edge_count();
    if (elements > opts.caps.max_elements)
        throw SizeCapError("instance has " + std::to_string(elements) +
                           " colorable elements, over the cap of " +
                           std::to_string(opts.caps.max_elements) +
                           "; refusing rather than answering slowly");
    int k0 = g.is_complete() ? 1 : (mode == Mode::pc ? 2 : 3);
    SolveResult res;
    for (int k = k0; k <= std::max(elements, 1); ++k) {
        TotalColoring cert;
        if (run_at_k(g, mode, k, opts, res.colorings_tested, cert)) {
            res.value = k;
            res.certificate = cert;
            res.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            return res;
        }
    }
    throw std::logic_error("exact solver exhausted all palette sizes on a connected graph");
}

}  // namespace

SolveResult exact_tpc(const Graph& g, const SolveOptions& opts) {
    return exact_elementwise(g, Mode::tpc, opts);
}

SolveResult exact_pc(const Graph& g, const SolveOptions& opts) {
    return exact_elementwise(g, Mode::pc, opts);
}

SolveResult exact_pvc(const Graph& g) {
    auto t0 = std::chrono::steady_clock::now();
    if (!is_connected(g)) throw std::invalid_argument("exact solver requires a connected graph");
    auto profile = structure_profile(g);
    SolveResult res;
    if (profile.complete) {
        res.value = 0;
        res.certificate = uniform_coloring(g);
    } else if (profile.diameter == 2) {
        res.value = 1;
        res.certificate = uniform_coloring(g);
    } else {
        // alternate vertex colors by BFS-tree depth parity: along any tree
        // path consecutive vertices differ, which is all pvc asks of
        // internal vertices
        res.value = 2;
        res.certificate = uniform_coloring(g);
        std::vector<int> dist(g.vertex_count(), -1);
        std::queue<int> q;
        dist[0] = 0;
        q.push(0);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u))
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
        }
        for (int v = 0; v < g.vertex_count(); ++v) res.certificate.vertex_colors[v] = 1 + dist[v] % 2;
    }
    auto report = is_total_proper_connected(g, res.certificate, Mode::pvc);
    if (!report.connected) throw std::logic_error("pvc certificate failed verification");
    res.colorings_tested = 1;
    res.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

namespace {

// Walk relaxation: breadth-first search over directed edge states. Every
// total proper path is such a walk, so an unreachable pair here is truly
// disconnected; the converse needs the real verifier.
struct WalkOracle {
    const Graph& g;
    int n, m;
    std::vector<int> head, tail;                 // per directed edge id
    std::vector<std::vector<int>> out_states;    // per vertex: directed edge ids leaving it
    std::vector<int> seen_state, seen_vertex;    // timestamp marks
    int stamp = 0;

    explicit WalkOracle(const Graph& g_) : g(g_) {
        n = g.vertex_count();
        m = g.edge_count();
        head.resize(2 * m);
        tail.resize(2 * m);
        out_states.assign(n, {});
        for (int e = 0; e < m; ++e) {
            auto [u, v] = g.edges()[e];
            tail[2 * e] = u;
            head[2 * e] = v;
            tail[2 * e + 1] = v;
            head[2 * e + 1] = u;
            out_states[u].push_back(2 * e);
            out_states[v].push_back(2 * e + 1);
        }
        seen_state.assign(2 * m, 0);
        seen_vertex.assign(n, 0);
    }

    int edge_of(int state) const { return state / 2; }

    // number of ordered targets t > s unreachable from s, summed over s
    int failing_pairs(const std::vector<int>& vcol, const std::vector<int>& ecol) {
        int fails = 0;
        std::vector<int> queue;
        for (int s = 0; s < n; ++s) {
            ++stamp;
            queue.clear();
            seen_vertex[s] = stamp;
            for (int st : out_states[s]) {
                seen_state[st] = stamp;
                seen_vertex[head[st]] = stamp;
                queue.push_back(st);
            }
            for (size_t qi = 0; qi < queue.size(); ++qi) {
                int st = queue[qi];
                int b = head[st], a = tail[st];
                int e1 = ecol[edge_of(st)];
                for (int nx : out_states[b]) {
                    if (seen_state[nx] == stamp) continue;
                    int e2 = ecol[edge_of(nx)];
                    if (e1 == e2) continue;
                    if (vcol[b] == e1 || vcol[b] == e2) continue;
                    if (a != s && vcol[a] == vcol[b]) continue;
                    seen_state[nx] = stamp;
                    seen_vertex[head[nx]] = stamp;
                    queue.push_back(nx);
                }
            }
            for (int t = s + 1; t < n; ++t)
                if (seen_vertex[t] != stamp) ++fails;
        }
        return fails;
    }
};

int true_failing_pairs(const Graph& g, const TotalColoring& c) {
    int n = g.vertex_count();
    int fails = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!exists_proper_path(g, c, u, v, Mode::tpc)) ++fails;
    return fails;
}

}  // namespace

std::optional<TotalColoring> search_coloring(const Graph& g, int k, const SearchBudget& budget) {
    if (!is_connected(g)) throw std::invalid_argument("search requires a connected graph");
    if (k < 1) throw std::invalid_argument("palette must have at least one color");
    if (k == 1) {  // only one coloring exists; no search to do
        auto c = uniform_coloring(g);
        if (is_total_proper_connected(g, c, Mode::tpc).connected) return c;
        return std::nullopt;
    }
    int n = g.vertex_count(), m = g.edge_count();
    int total = n + m;
    int pairs = n * (n - 1) / 2;
    WalkOracle oracle(g);
    const int plateau_limit = 4000;

    for (int restart = 0; restart < budget.restarts; ++restart) {
        Rng rng(budget.seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(restart + 1));
        TotalColoring c;
        c.vertex_colors.resize(n);
        c.edge_colors.resize(m);
        for (int v = 0; v < n; ++v) c.vertex_colors[v] = 1 + rng.below(k);
        for (int e = 0; e < m; ++e) c.edge_colors[e] = 1 + rng.below(k);

        auto score = [&]() {
            int walk = oracle.failing_pairs(c.vertex_colors, c.edge_colors);
            if (walk > 0) return walk + pairs;
            return true_failing_pairs(g, c);
        };
        int cur = score();
        int plateau = 0;
        for (std::uint64_t iter = 0; iter < budget.max_iterations && cur > 0; ++iter) {
            int elem = rng.below(total);
            int* slot = elem < n ? &c.vertex_colors[elem] : &c.edge_colors[elem - n];
            int old = *slot;
            int alt = 1 + rng.below(k - 1);
            if (alt >= old) ++alt;  // a different color, uniform over the rest
            *slot = alt;
            int next = score();
            if (next <= cur) {
                plateau = next < cur ? 0 : plateau + 1;
                cur = next;
            } else {
                *slot = old;
                ++plateau;
            }
            if (plateau > plateau_limit) break;
        }
        if (cur == 0) {
            auto report = is_total_proper_connected(g, c, Mode::tpc);
            if (report.connected) return c;
        }
    }
    return std::nullopt;
}

ComparisonRecord compare_numbers(const Graph& g, const SolveOptions& opts) {
    ComparisonRecord rec;
    rec.tpc = exact_tpc(g, opts).value;
    rec.pc = exact_pc(g, opts).value;
    rec.pvc = exact_pvc(g).value;
    rec.gap_pc = rec.tpc - rec.pc;
    rec.gap_pvc = rec.tpc - rec.pvc;
    return rec;
}

}  // namespace tpc
