#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "permsym/composition.hpp"
#include "permsym/multiset.hpp"
#include "permsym/permutation.hpp"

namespace permsym {

/// All of S_n in lexicographic order.
inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

/// Inverse J-class R_J^{-1} = { pi^{-1} : Des(pi) subseteq J }, sorted.
inline std::vector<Permutation> inverse_j_class(const SubsetComposition& j) {
    const std::uint32_t jmask = detail::set_to_mask(j.subset());
    std::vector<Permutation> out;
    for (const Permutation& pi : all_permutations(j.degree()))
        if ((descent_mask(pi) & ~jmask) == 0) out.push_back(pi.inverse());
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Permutation> inverse_j_class(int n, const std::vector<int>& j) {
    return inverse_j_class(SubsetComposition::from_subset(n, j));
}

/// D_J^{-1} = { pi^{-1} : Des(pi) = J }, sorted.
inline std::vector<Permutation> d_class(const SubsetComposition& j) {
    const std::uint32_t jmask = detail::set_to_mask(j.subset());
    std::vector<Permutation> out;
    for (const Permutation& pi : all_permutations(j.degree()))
        if (descent_mask(pi) == jmask) out.push_back(pi.inverse());
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Permutation> d_class(int n, const std::vector<int>& j) {
    return d_class(SubsetComposition::from_subset(n, j));
}

/// Cycle type of pi as a partition of its degree.
inline Partition cycle_type(const Permutation& pi) {
    std::vector<char> seen(static_cast<std::size_t>(pi.degree()) + 1, 0);
    std::vector<int> lengths;
    for (int start = 1; start <= pi.degree(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        int len = 0;
        int cur = start;
        while (!seen[static_cast<std::size_t>(cur)]) {
            seen[static_cast<std::size_t>(cur)] = 1;
            cur = pi(cur);
            ++len;
        }
        lengths.push_back(len);
    }
    return Partition(std::move(lengths));
}

/// The conjugacy class of S_n with cycle type lambda, sorted.
inline std::vector<Permutation> conjugacy_class(int n, const Partition& lambda) {
    if (lambda.n() != n)
        throw std::invalid_argument("conjugacy_class: lambda is not a partition of n");
    std::vector<Permutation> out;
    for (const Permutation& pi : all_permutations(n))
        if (cycle_type(pi) == lambda) out.push_back(pi);
    return out;
}

inline PermMultiset to_multiset(int degree, const std::vector<Permutation>& perms) {
    return PermMultiset::from_permutations(degree, perms);
}

} // namespace permsym
