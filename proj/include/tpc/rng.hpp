#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace tpc {

// Thin deterministic wrapper around mt19937_64. std::uniform_int_distribution
// is implementation-defined, so bounded draws are done by hand to keep
// seeded runs reproducible everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // uniform-ish integer in [0, bound); bound > 0
    int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }

    // uniform-ish integer in [lo, hi] inclusive
    int range(int lo, int hi) { return lo + below(hi - lo + 1); }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
            int j = below(i + 1);
            std::swap(v[i], v[j]);
        }
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace tpc
