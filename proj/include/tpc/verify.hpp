#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "tpc/coloring.hpp"
#include "tpc/graph.hpp"

namespace tpc {

// Which path conditions are enforced:
//   tpc: edges, internal vertices, and vertex/edge clashes
//   pc:  consecutive edge colors only
//   pvc: adjacent internal vertex colors only
enum class Mode { tpc, pc, pvc };

Mode parse_mode(const std::string& s);
std::string mode_name(Mode m);

struct VerifyOptions {
    // Cap on candidate paths enumerated per pair in the strong-property
    // search; 0 means unlimited (fine up to n around 16).
    std::uint64_t max_paths_per_pair = 0;
};

struct VerificationReport {
    bool connected = false;  // the queried property holds for every pair
    std::map<std::pair<int, int>, PathWitness> witnesses;  // keyed (u,v), u < v, oriented u -> v
    std::optional<std::pair<int, int>> failing_pair;
    std::uint64_t pairs_checked = 0;
};

// First qualifying path in ascending neighbor order, or nullopt. Throws when
// u == v or either is out of range.
std::optional<PathWitness> exists_proper_path(const Graph& g, const TotalColoring& c, int u, int v,
                                              Mode mode);
inline std::optional<PathWitness> exists_total_proper_path(const Graph& g, const TotalColoring& c,
                                                           int u, int v) {
    return exists_proper_path(g, c, u, v, Mode::tpc);
}

// Checks every vertex pair, farthest pairs first (fails fast, and long
// witnesses seed shorter pairs via the subpath property).
VerificationReport is_total_proper_connected(const Graph& g, const TotalColoring& c,
                                             Mode mode = Mode::tpc);

struct StrongPairCertificate {
    PathWitness first, second;
};

struct StrongPropertyReport {
    bool holds = false;
    std::optional<std::pair<int, int>> failing_pair;
    std::map<std::pair<int, int>, StrongPairCertificate> certificates;
};

// Two total proper u-v paths P1, P2 with (1) c(u) differing from both
// second-vertex colors and c(v) from both second-to-last-vertex colors, and
// (2) {c(u), c(first edge of P1), c(first edge of P2)} and {c(v), c(last
// edge of P1), c(last edge of P2)} both 3-element sets. Condition (2)
// forces P1 != P2. Returns nullopt when no qualifying pair of paths exists.
std::optional<StrongPairCertificate> find_strong_pair(const Graph& g, const TotalColoring& c,
                                                      int u, int v,
                                                      const VerifyOptions& opts = {});

// find_strong_pair over every vertex pair.
StrongPropertyReport has_strong_property(const Graph& g, const TotalColoring& c,
                                         const VerifyOptions& opts = {});

}  // namespace tpc
