#pragma once

#include <algorithm>
#include <map>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

#include "permsym/permutation.hpp"
#include "permsym/tableau.hpp"

namespace permsym {

/// Insertion tableau p and recording tableau q of equal shape.
struct TableauPair {
    StandardTableau p;
    StandardTableau q;

    friend bool operator==(const TableauPair&, const TableauPair&) = default;
};

/// Robinson-Schensted via classical row insertion.
inline TableauPair rs(const Permutation& pi) {
    std::vector<std::vector<int>> p, q;
    for (int step = 1; step <= pi.degree(); ++step) {
        int x = pi(step);
        std::size_t r = 0;
        while (true) {
            if (r == p.size()) {
                p.push_back({x});
                q.push_back({step});
                break;
            }
            auto it = std::upper_bound(p[r].begin(), p[r].end(), x);
            if (it == p[r].end()) {
                p[r].push_back(x);
                q[r].push_back(step);
                break;
            }
            std::swap(x, *it); // bump
            ++r;
        }
    }
    return {StandardTableau(std::move(p)), StandardTableau(std::move(q))};
}

/// Inverse of rs: runs the insertions backwards, ejecting n, n-1, ..., 1 in
/// the order recorded by q.
inline Permutation rs_inverse(const TableauPair& pair) {
    if (pair.p.shape() != pair.q.shape())
        throw std::invalid_argument("rs_inverse: tableaux must have equal shapes");
    std::vector<std::vector<int>> p = pair.p.rows();
    const int n = pair.p.size();
    std::vector<int> word(static_cast<std::size_t>(n));
    for (int step = n; step >= 1; --step) {
        auto [row1, col1] = pair.q.position_of(step);
        std::size_t r = static_cast<std::size_t>(row1) - 1;
        int x = p[r].back();
        p[r].pop_back();
        while (r > 0) {
            --r;
            // the entry that bumped x: the largest one smaller than x
            auto it = std::lower_bound(p[r].begin(), p[r].end(), x);
            --it;
            std::swap(x, *it);
        }
        word[static_cast<std::size_t>(step) - 1] = x;
        (void)col1;
    }
    if (!p.empty() && !p[0].empty())
        throw internal_error("rs_inverse: tableau not fully unwound");
    return Permutation(std::move(word));
}

/// K(P): all permutations whose insertion tableau is P, sorted. Memoized;
/// the cache is guarded and entries are immutable once created.
inline const std::vector<Permutation>& knuth_class(const StandardTableau& p) {
    static std::shared_mutex mutex;
    static std::map<StandardTableau, std::vector<Permutation>> cache;
    {
        std::shared_lock lock(mutex);
        if (auto it = cache.find(p); it != cache.end()) return it->second;
    }
    std::vector<Permutation> result;
    for (const StandardTableau& q : enumerate_syt(p.shape()))
        result.push_back(rs_inverse({p, q}));
    std::sort(result.begin(), result.end());
    std::unique_lock lock(mutex);
    return cache.try_emplace(p, std::move(result)).first->second;
}

} // namespace permsym
