#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "permsym/util.hpp"

namespace permsym {

/// A subset J of [n-1] together with its composition image
/// co(J) = (j_1, j_2 - j_1, ..., n - j_s). The two determine each other and
/// both views are kept so callers can index by whichever is natural.
class SubsetComposition {
public:
    static SubsetComposition from_subset(int n, std::vector<int> subset) {
        if (n < 0) throw std::invalid_argument("degree must be nonnegative");
        std::sort(subset.begin(), subset.end());
        if (std::adjacent_find(subset.begin(), subset.end()) != subset.end())
            throw std::invalid_argument("subset has repeated elements");
        for (int j : subset)
            if (j < 1 || j > n - 1) throw std::invalid_argument("subset not contained in [n-1]");
        std::vector<int> comp;
        int prev = 0;
        for (int j : subset) {
            comp.push_back(j - prev);
            prev = j;
        }
        if (n > 0) comp.push_back(n - prev);
        return SubsetComposition(n, std::move(subset), std::move(comp));
    }

    static SubsetComposition from_composition(std::vector<int> parts) {
        int n = 0;
        for (int p : parts) {
            if (p <= 0) throw std::invalid_argument("composition parts must be positive");
            n += p;
        }
        std::vector<int> subset;
        int acc = 0;
        for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
            acc += parts[i];
            subset.push_back(acc);
        }
        return SubsetComposition(n, std::move(subset), std::move(parts));
    }

    int degree() const { return n_; }
    const std::vector<int>& subset() const { return subset_; }
    const std::vector<int>& composition() const { return composition_; }

    friend bool operator==(const SubsetComposition&, const SubsetComposition&) = default;
    friend std::strong_ordering operator<=>(const SubsetComposition& a, const SubsetComposition& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.composition_ <=> b.composition_;
    }

private:
    SubsetComposition(int n, std::vector<int> subset, std::vector<int> comp)
        : n_(n), subset_(std::move(subset)), composition_(std::move(comp)) {}

    int n_ = 0;
    std::vector<int> subset_;
    std::vector<int> composition_;
};

/// An integer partition: weakly decreasing positive parts. The constructor
/// sorts, so any positive multiset of parts is accepted.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p <= 0) throw std::invalid_argument("partition parts must be positive");
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    }

    int n() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

/// The partition obtained by sorting a composition's parts; carrier of the
/// rearrangement relation alpha ~ beta.
inline Partition sorted_parts(const std::vector<int>& composition) {
    return Partition(composition);
}

inline bool sim(const std::vector<int>& alpha, const std::vector<int>& beta) {
    return sorted_parts(alpha) == sorted_parts(beta);
}

/// J ~ K when co(J) is a rearrangement of co(K).
inline bool sim_subsets(int n, const std::vector<int>& j, const std::vector<int>& k) {
    return sorted_parts(SubsetComposition::from_subset(n, j).composition()) ==
           sorted_parts(SubsetComposition::from_subset(n, k).composition());
}

/// All 2^{n-1} compositions of n, ordered lexicographically by parts.
inline std::vector<SubsetComposition> compositions_of(int n) {
    std::vector<SubsetComposition> out;
    for (const auto& subset : detail::subsets_lex(n - 1))
        out.push_back(SubsetComposition::from_subset(n, subset));
    std::sort(out.begin(), out.end());
    return out;
}

/// All partitions of n in decreasing lexicographic order, (n) first.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

/// All distinct compositions whose sorted parts equal lambda, lex-sorted.
inline std::vector<std::vector<int>> rearrangements(const Partition& lambda) {
    std::vector<int> parts = lambda.parts();
    std::sort(parts.begin(), parts.end());
    std::vector<std::vector<int>> out;
    do {
        out.push_back(parts);
    } while (std::next_permutation(parts.begin(), parts.end()));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace permsym
