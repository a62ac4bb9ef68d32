#include "tpc/verify.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace tpc {

Mode parse_mode(const std::string& s) {
    if (s == "tpc") return Mode::tpc;
    if (s == "pc") return Mode::pc;
    if (s == "pvc") return Mode::pvc;
    throw std::invalid_argument("unknown mode '" + s + "' (expected tpc, pc or pvc)");
}

std::string mode_name(Mode m) {
    switch (m) {
        case Mode::tpc: return "tpc";
        case Mode::pc: return "pc";
        default: return "pvc";
    }
}

namespace {

// May the path ...prev -> last be extended with edge last->next? prev < 0
// means last is the start vertex. first_internal says whether prev is the
// start (so not internal itself).
inline bool extension_ok(const Graph& g, const TotalColoring& c, Mode mode, int prev, int last,
                         int next, bool prev_is_start) {
    if (prev < 0) return true;  // first edge of the path, nothing adjacent yet
    int e1 = c.edge_colors[g.edge_index(prev, last)];
    int e2 = c.edge_colors[g.edge_index(last, next)];
    switch (mode) {
        case Mode::pc:
            return e1 != e2;
        case Mode::pvc:
            return prev_is_start || c.vertex_colors[prev] != c.vertex_colors[last];
        default: {
            if (e1 == e2) return false;
            int mid = c.vertex_colors[last];
            if (mid == e1 || mid == e2) return false;
            if (!prev_is_start && c.vertex_colors[prev] == c.vertex_colors[last]) return false;
            return true;
        }
    }
}

struct PathSearch {
    const Graph& g;
    const TotalColoring& c;
    Mode mode;
    int target;
    std::vector<char> used;
    std::vector<int> path;
    // return true from the callback to stop the search
    std::function<bool(const std::vector<int>&)> on_found;
    bool stopped = false;

    PathSearch(const Graph& g_, const TotalColoring& c_, Mode mode_, int target_)
        : g(g_), c(c_), mode(mode_), target(target_), used(g_.vertex_count(), 0) {}

    void run(int start) {
        used[start] = 1;
        path.push_back(start);
        dfs();
        path.pop_back();
        used[start] = 0;
    }

    void dfs() {
        if (stopped) return;
        int last = path.back();
        if (last == target) {
            stopped = on_found(path);
            return;
        }
        int prev = path.size() >= 2 ? path[path.size() - 2] : -1;
        bool prev_is_start = path.size() == 2;
        for (int w : g.neighbors(last)) {
            if (used[w]) continue;
            if (!extension_ok(g, c, mode, prev, last, w, prev_is_start)) continue;
            used[w] = 1;
            path.push_back(w);
            dfs();
            path.pop_back();
            used[w] = 0;
            if (stopped) return;
        }
    }
};

std::vector<int> hop_distances(const Graph& g, int s) {
    std::vector<int> dist(g.vertex_count(), -1);
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
    return dist;
}

}  // namespace

std::optional<PathWitness> exists_proper_path(const Graph& g, const TotalColoring& c, int u, int v,
                                              Mode mode) {
    if (!c.fits(g)) throw std::invalid_argument("coloring does not fit the graph");
    int n = g.vertex_count();
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("vertex out of range");
    if (u == v) throw std::invalid_argument("path query needs two distinct vertices");
    std::optional<PathWitness> found;
    PathSearch search(g, c, mode, v);
    search.on_found = [&](const std::vector<int>& path) {
        found = PathWitness{path};
        return true;
    };
    search.run(u);
    return found;
}

VerificationReport is_total_proper_connected(const Graph& g, const TotalColoring& c, Mode mode) {
    if (!c.fits(g)) throw std::invalid_argument("coloring does not fit the graph");
    int n = g.vertex_count();
    VerificationReport report;

    // farthest pairs first: a long witness certifies all its subpaths
    std::vector<std::vector<int>> dist(n);
    for (int v = 0; v < n; ++v) dist[v] = hop_distances(g, v);
    std::vector<std::tuple<int, int, int>> order;  // (-distance, u, v)
    order.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            order.emplace_back(dist[u][v] < 0 ? -(n + 1) : -dist[u][v], u, v);
    std::sort(order.begin(), order.end());

    auto record_with_subpaths = [&](const std::vector<int>& path) {
        for (size_t i = 0; i < path.size(); ++i)
            for (size_t j = i + 1; j < path.size(); ++j) {
                int a = path[i], b = path[j];
                std::pair<int, int> key{std::min(a, b), std::max(a, b)};
                if (report.witnesses.count(key)) continue;
                std::vector<int> sub(path.begin() + i, path.begin() + j + 1);
                if (a > b) std::reverse(sub.begin(), sub.end());
                report.witnesses[key] = PathWitness{std::move(sub)};
            }
    };

    for (auto& [negd, u, v] : order) {
        ++report.pairs_checked;
        if (report.witnesses.count({u, v})) continue;
        auto w = exists_proper_path(g, c, u, v, mode);
        if (!w) {
            report.connected = false;
            report.failing_pair = {u, v};
            return report;
        }
        record_with_subpaths(w->vertices);
    }
    report.connected = true;
    return report;
}

namespace {

struct PathSignature {
    int start_e, end_e, start_v, end_v;
    bool operator==(const PathSignature&) const = default;
};

bool strong_conditions(int cu, int cv, const PathSignature& a, const PathSignature& b) {
    if (cu == a.start_v || cu == b.start_v) return false;
    if (cv == a.end_v || cv == b.end_v) return false;
    if (a.start_e == b.start_e || a.start_e == cu || b.start_e == cu) return false;
    if (a.end_e == b.end_e || a.end_e == cv || b.end_e == cv) return false;
    return true;
}

}  // namespace

std::optional<StrongPairCertificate> find_strong_pair(const Graph& g, const TotalColoring& c,
                                                      int u, int v, const VerifyOptions& opts) {
    if (!c.fits(g)) throw std::invalid_argument("coloring does not fit the graph");
    int n = g.vertex_count();
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("vertex out of range");
    if (u == v) throw std::invalid_argument("strong-pair query needs two distinct vertices");
    int cu = c.vertex_colors[u], cv = c.vertex_colors[v];
    std::vector<std::pair<PathSignature, PathWitness>> seen;
    std::optional<StrongPairCertificate> cert;
    std::uint64_t paths = 0;
    PathSearch search(g, c, Mode::tpc, v);
    search.on_found = [&](const std::vector<int>& path) {
        ++paths;
        PathWitness w{path};
        auto ec = path_endpoint_colors(g, c, w);
        PathSignature sig{ec.start_e, ec.end_e, ec.start_v, ec.end_v};
        for (auto& [other, ow] : seen) {
            if (strong_conditions(cu, cv, other, sig)) {
                cert = StrongPairCertificate{ow, w};
                return true;
            }
        }
        bool novel = true;
        for (auto& [other, ow] : seen)
            if (other == sig) novel = false;
        if (novel) seen.emplace_back(sig, std::move(w));
        return opts.max_paths_per_pair && paths >= opts.max_paths_per_pair;
    };
    search.run(u);
    return cert;
}

StrongPropertyReport has_strong_property(const Graph& g, const TotalColoring& c,
                                         const VerifyOptions& opts) {
    if (!c.fits(g)) throw std::invalid_argument("coloring does not fit the graph");
    int n = g.vertex_count();
    StrongPropertyReport report;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            auto cert = find_strong_pair(g, c, u, v, opts);
            if (!cert) {
                report.holds = false;
                report.failing_pair = {u, v};
                return report;
            }
            report.certificates[{u, v}] = std::move(*cert);
        }
    }
    report.holds = true;
    return report;
}

}  // namespace tpc
