#include "tpc/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tpc/rng.hpp"
#include "tpc/structure.hpp"

namespace tpc {

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
    return Graph(n, edges);
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete needs n >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, edges);
}

Graph complete_bipartite_graph(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("complete_bipartite needs sides >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) edges.push_back({i, m + j});
    return Graph(m + n, edges);
}

Graph complete_multipartite_graph(const std::vector<int>& sizes) {
    if (sizes.size() < 2) throw std::invalid_argument("complete_multipartite needs >= 2 parts");
    for (int s : sizes)
        if (s < 1) throw std::invalid_argument("complete_multipartite: parts must be nonempty");
    int n = std::accumulate(sizes.begin(), sizes.end(), 0);
    std::vector<int> part_of(n);
    int at = 0;
    for (size_t p = 0; p < sizes.size(); ++p)
        for (int i = 0; i < sizes[p]; ++i) part_of[at++] = static_cast<int>(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) edges.push_back({u, v});
    return Graph(n, edges);
}

Graph star_graph(int n) {
    if (n < 2) throw std::invalid_argument("star needs n >= 2");
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back({0, v});
    return Graph(n, edges);
}

GeneratedGraph two_ear_cycle(int k) {
    if (k < 2) throw std::invalid_argument("prop3 needs k >= 2");
    if (k > 20) throw std::invalid_argument("prop3: k too large");
    int s = 1 << k;
    int ring = 4 * s;
    int n = 6 * s - 2;
    std::vector<Edge> edges;
    for (int i = 0; i < ring; ++i) edges.push_back(make_edge(i, (i + 1) % ring));
    // path doubling segment u1..u2: internal vertices ring .. ring+s-2
    edges.push_back(make_edge(0, ring));
    for (int i = 0; i + 1 < s - 1; ++i) edges.push_back({ring + i, ring + i + 1});
    edges.push_back(make_edge(ring + s - 2, s));
    // path doubling segment u3..u4: internal vertices ring+s-1 .. ring+2s-3
    int base = ring + s - 1;
    edges.push_back(make_edge(2 * s, base));
    for (int i = 0; i + 1 < s - 1; ++i) edges.push_back({base + i, base + i + 1});
    edges.push_back(make_edge(base + s - 2, 3 * s));

    GeneratedGraph gg;
    gg.graph = Graph(n, edges);
    gg.landmarks = {
        {"u1", 0},          {"u2", s},           {"u3", 2 * s},      {"u4", 3 * s},
        {"u1p", ring - 1},  {"u1pp", 1},         {"u1ppp", ring},
        {"u2p", s + 1},     {"u2pp", s - 1},     {"u2ppp", ring + s - 2},
        {"u3p", 2 * s - 1}, {"u3pp", 2 * s + 1}, {"u3ppp", base},
        {"u4p", 3 * s + 1}, {"u4pp", 3 * s - 1}, {"u4ppp", base + s - 2},
    };
    return gg;
}

GeneratedGraph three_ear_cycle(int t) {
    if (t < 1) throw std::invalid_argument("prop4 needs t >= 1");
    if (t > 100000) throw std::invalid_argument("prop4: t too large");
    int seg = 6 * t;
    int ring = 3 * seg;
    std::vector<Edge> edges;
    for (int i = 0; i < ring; ++i) edges.push_back(make_edge(i, (i + 1) % ring));
    // one 3-edge path doubling each segment
    for (int e = 0; e < 3; ++e) {
        int a = e * seg, b = (e + 1) % 3 * seg;
        int p = ring + 2 * e;
        edges.push_back(make_edge(a, p));
        edges.push_back({p, p + 1});
        edges.push_back(make_edge(p + 1, b));
    }
    GeneratedGraph gg;
    gg.graph = Graph(ring + 6, edges);
    gg.landmarks = {{"w1", 0}, {"w2", seg}, {"w3", 2 * seg}};
    return gg;
}

Graph random_connected_graph(int n, int m, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_connected needs n >= 1");
    long long maxm = static_cast<long long>(n) * (n - 1) / 2;
    if (m < n - 1 || m > maxm)
        throw std::invalid_argument("random_connected needs n-1 <= m <= n(n-1)/2");
    Rng rng(seed);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    std::set<Edge> es;
    for (int i = 1; i < n; ++i) es.insert(make_edge(order[i], order[rng.below(i)]));
    std::vector<Edge> spare;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!es.count({u, v})) spare.push_back({u, v});
    rng.shuffle(spare);
    for (size_t i = 0; es.size() < static_cast<size_t>(m); ++i) es.insert(spare[i]);
    return Graph(n, std::vector<Edge>(es.begin(), es.end()));
}

Graph random_two_connected_graph(int n, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("random_2connected needs n >= 3");
    Rng rng(seed);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    std::set<Edge> es;
    for (int i = 0; i < n; ++i) es.insert(make_edge(order[i], order[(i + 1) % n]));
    // a ring is already 2-connected; chords only thicken it
    int chords = rng.below(n / 2 + 1);
    for (int c = 0; c < chords; ++c) {
        int u = rng.below(n), v = rng.below(n);
        if (u != v) es.insert(make_edge(u, v));
    }
    return Graph(n, std::vector<Edge>(es.begin(), es.end()));
}

Graph random_min_degree_graph(int n, int delta, std::uint64_t seed) {
    if (n < 2 || delta < 1 || delta > n - 1)
        throw std::invalid_argument("random_min_degree needs n >= 2 and 1 <= delta <= n-1");
    Rng rng(seed);
    std::set<Edge> es;
    std::vector<int> deg(n, 0);
    auto add = [&](int u, int v) {
        if (es.insert(make_edge(u, v)).second) {
            ++deg[u];
            ++deg[v];
        }
    };
    while (true) {
        std::vector<int> deficient;
        for (int v = 0; v < n; ++v)
            if (deg[v] < delta) deficient.push_back(v);
        if (deficient.empty()) break;
        int u = deficient[rng.below(static_cast<int>(deficient.size()))];
        std::vector<int> cand;
        for (int w : deficient)
            if (w != u && !es.count(make_edge(u, w))) cand.push_back(w);
        if (cand.empty())
            for (int w = 0; w < n; ++w)
                if (w != u && !es.count(make_edge(u, w))) cand.push_back(w);
        add(u, cand[rng.below(static_cast<int>(cand.size()))]);
    }
    // splice components together; extra edges never lower a degree
    while (true) {
        Graph g(n, std::vector<Edge>(es.begin(), es.end()));
        if (is_connected(g)) return g;
        std::vector<int> comp(n, -1);
        int comps = 0;
        for (int s = 0; s < n; ++s) {
            if (comp[s] >= 0) continue;
            std::vector<int> stack{s};
            comp[s] = comps;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int w : g.neighbors(u))
                    if (comp[w] < 0) {
                        comp[w] = comps;
                        stack.push_back(w);
                    }
            }
            ++comps;
        }
        std::vector<int> a, b;
        for (int v = 0; v < n; ++v) (comp[v] == 0 ? a : b).push_back(v);
        add(a[rng.below(static_cast<int>(a.size()))], b[rng.below(static_cast<int>(b.size()))]);
    }
}

const std::vector<std::string>& family_kinds() {
    static const std::vector<std::string> kinds = {
        "path",  "cycle", "complete",         "complete_bipartite", "complete_multipartite",
        "star",  "prop3", "prop4",            "random_connected",   "random_2connected",
        "random_min_degree"};
    return kinds;
}

namespace {

void need_params(const FamilySpec& spec, size_t count) {
    if (spec.parameters.size() != count)
        throw std::invalid_argument(spec.kind + " needs exactly " + std::to_string(count) +
                                    " parameter" + (count == 1 ? "" : "s"));
}

}  // namespace

GeneratedGraph generate(const FamilySpec& spec) {
    const auto& p = spec.parameters;
    std::uint64_t seed = spec.seed.value_or(0);
    if (spec.kind == "path") {
        need_params(spec, 1);
        return {path_graph(p[0]), {}};
    }
    if (spec.kind == "cycle") {
        need_params(spec, 1);
        return {cycle_graph(p[0]), {}};
    }
    if (spec.kind == "complete") {
        need_params(spec, 1);
        return {complete_graph(p[0]), {}};
    }
    if (spec.kind == "complete_bipartite") {
        need_params(spec, 2);
        return {complete_bipartite_graph(p[0], p[1]), {}};
    }
    if (spec.kind == "complete_multipartite") {
        return {complete_multipartite_graph(p), {}};
    }
    if (spec.kind == "star") {
        need_params(spec, 1);
        return {star_graph(p[0]), {}};
    }
    if (spec.kind == "prop3") {
        need_params(spec, 1);
        return two_ear_cycle(p[0]);
    }
    if (spec.kind == "prop4") {
        need_params(spec, 1);
        return three_ear_cycle(p[0]);
    }
    if (spec.kind == "random_connected") {
        need_params(spec, 2);
        return {random_connected_graph(p[0], p[1], seed), {}};
    }
    if (spec.kind == "random_2connected") {
        need_params(spec, 1);
        return {random_two_connected_graph(p[0], seed), {}};
    }
    if (spec.kind == "random_min_degree") {
        need_params(spec, 2);
        return {random_min_degree_graph(p[0], p[1], seed), {}};
    }
    throw std::invalid_argument("unknown family kind '" + spec.kind + "'");
}

std::string serialize_generated(const GeneratedGraph& gg) {
    std::string out;
    for (const auto& lm : gg.landmarks)
        out += "# landmark " + lm.name + " " + std::to_string(lm.vertex) + "\n";
    out += serialize_graph(gg.graph);
    return out;
}

std::vector<Landmark> parse_landmarks(const std::string& text) {
    std::vector<Landmark> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string hash, word, name;
        int vertex;
        if (ls >> hash >> word >> name >> vertex && hash == "#" && word == "landmark")
            out.push_back({name, vertex});
    }
    return out;
}

}  // namespace tpc
