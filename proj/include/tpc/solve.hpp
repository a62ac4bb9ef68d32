#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "tpc/coloring.hpp"
#include "tpc/graph.hpp"
#include "tpc/verify.hpp"

namespace tpc {

// Thrown when an instance exceeds the configured enumeration caps; callers
// get a refusal, never a wrong answer.
class SizeCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SolveCaps {
    int max_elements = 16;  // vertices + edges for tpc, edges for pc
};

struct SolveOptions {
    SolveCaps caps{};
    int workers = 1;
    bool symmetry_breaking = true;  // tests cross-check against the unrestricted sweep
    // run the all-pairs wildcard feasibility prune at every depth that is a
    // multiple of this; 0 keeps only the cheap structural prunes
    int prune_stride = 4;
};

struct SolveResult {
    int value = 0;
    TotalColoring certificate;
    std::uint64_t colorings_tested = 0;
    double elapsed_seconds = 0.0;
};

// Smallest k admitting a total coloring with k colors that passes the
// verifier in the given mode. Colors are enumerated canonically (a color
// appears only after all smaller colors, elements ordered vertices
// 0..n-1 then edges lexicographically), which only collapses palette
// renamings. Starts at 1 for complete graphs, else 3 (tpc) / 2 (pc).
SolveResult exact_tpc(const Graph& g, const SolveOptions& opts = {});
SolveResult exact_pc(const Graph& g, const SolveOptions& opts = {});

// Closed form: 0 when complete, 1 when the diameter is 2, else 2; the
// certificate is rebuilt and verified, not assumed.
SolveResult exact_pvc(const Graph& g);

struct SearchBudget {
    std::uint64_t max_iterations = 200000;  // per restart
    int restarts = 50;
    std::uint64_t seed = 0;
};

// Seeded hill-climbing over single-element recolorings with a walk-based
// relaxation as objective; any returned coloring has passed the verifier.
// Absence of a result is not a proof that none exists.
std::optional<TotalColoring> search_coloring(const Graph& g, int k, const SearchBudget& budget = {});

struct ComparisonRecord {
    int tpc = 0, pc = 0, pvc = 0;
    int gap_pc = 0, gap_pvc = 0;  // tpc - pc, tpc - pvc
};

ComparisonRecord compare_numbers(const Graph& g, const SolveOptions& opts = {});

}  // namespace tpc
