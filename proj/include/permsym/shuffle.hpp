#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "permsym/permutation.hpp"

namespace permsym {

/// All interleavings of u and v preserving the relative order of each.
/// Requires disjoint alphabets; the result has C(|u|+|v|, |u|) words.
inline std::vector<Word> shuffle(const Word& u, const Word& v) {
    std::set<int> seen(u.begin(), u.end());
    if (seen.size() != u.size())
        throw std::invalid_argument("shuffle: repeated letters in first word");
    for (int x : v)
        if (!seen.insert(x).second)
            throw std::invalid_argument("shuffle: alphabets overlap or repeat");

    std::vector<Word> out;
    Word cur;
    cur.reserve(u.size() + v.size());
    auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
        if (i == u.size() && j == v.size()) {
            out.push_back(cur);
            return;
        }
        if (i < u.size()) {
            cur.push_back(u[i]);
            self(self, i + 1, j);
            cur.pop_back();
        }
        if (j < v.size()) {
            cur.push_back(v[j]);
            self(self, i, j + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// pi (of S_n) shifted-shuffled with tau (of S_m): shuffle pi against tau
/// with every letter raised by n. A subset of S_{n+m}, sorted.
inline std::vector<Permutation> shifted_shuffle(const Permutation& pi, const Permutation& tau) {
    Word shifted(tau.word());
    for (int& x : shifted) x += pi.degree();
    std::vector<Permutation> out;
    for (const Word& w : shuffle(pi.word(), shifted))
        out.push_back(Permutation(w));
    return out;
}

} // namespace permsym
