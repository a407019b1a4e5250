#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace permsym {
namespace detail {

// Subsets of [m] are carried as bitmasks where bit (i-1) encodes membership
// of i. Masks index dense tables; sorted vectors are the interface form.

inline std::uint32_t set_to_mask(const std::vector<int>& s) {
    std::uint32_t mask = 0;
    for (int v : s) mask |= 1u << (v - 1);
    return mask;
}

inline std::vector<int> mask_to_set(std::uint32_t mask) {
    std::vector<int> s;
    for (int v = 1; mask != 0; ++v, mask >>= 1)
        if (mask & 1u) s.push_back(v);
    return s;
}

inline int mask_count(int m) { return 1 << (m < 0 ? 0 : m); }

/// All subsets of [m] as sorted vectors, in lexicographic order of the
/// sorted vectors (the witness order used by the verifier).
inline std::vector<std::vector<int>> subsets_lex(int m) {
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 0; mask < static_cast<std::uint32_t>(mask_count(m)); ++mask)
        out.push_back(mask_to_set(mask));
    std::sort(out.begin(), out.end());
    return out;
}

/// Uniform integer in [0, bound) from a seeded engine, by rejection.
/// std::uniform_int_distribution is not pinned across standard libraries;
/// this is, given the standardized mt19937_64.
inline std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % bound;
}

} // namespace detail
} // namespace permsym
