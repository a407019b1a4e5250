#pragma once

#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "permsym/classes.hpp"
#include "permsym/composition.hpp"
#include "permsym/errors.hpp"
#include "permsym/multiset.hpp"
#include "permsym/ordered_partition.hpp"
#include "permsym/qsym.hpp"
#include "permsym/util.hpp"

namespace permsym {
namespace verifier {

/// Per-multiset condition checks enumerate Pi(n) and all inverse J-classes;
/// beyond this degree they refuse rather than silently sample.
inline constexpr int kConditionDegreeCeiling = 6;

namespace detail {

using permsym::detail::mask_to_set;
using permsym::detail::set_to_mask;

inline void require_degree(int n, const char* what) {
    if (n > kConditionDegreeCeiling)
        throw infeasible_error(std::string(what) + ": degree " + std::to_string(n) +
                               " exceeds the per-set ceiling " +
                               std::to_string(kConditionDegreeCeiling));
}

inline double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

/// Multiplicity-weighted histogram of descent masks.
inline std::vector<long long> descent_histogram(const PermMultiset& b) {
    std::vector<long long> h(static_cast<std::size_t>(permsym::detail::mask_count(b.degree() - 1)), 0);
    for (const auto& [pi, m] : b.entries()) h[descent_mask(pi)] += m;
    return h;
}

/// |B_J| for every J-mask: subset sums of the descent histogram.
inline std::vector<long long> containment_counts(const std::vector<long long>& hist) {
    std::vector<long long> out(hist.size(), 0);
    for (std::size_t jmask = 0; jmask < hist.size(); ++jmask) {
        std::uint32_t sub = 0;
        const std::uint32_t j = static_cast<std::uint32_t>(jmask);
        while (true) {
            out[jmask] += hist[sub];
            if (sub == j) break;
            sub = (sub - j) & j;
        }
    }
    return out;
}

/// Subsets of [n-1] in lexicographic order of the sorted vectors, the
/// witness order, paired with their masks.
inline std::vector<std::pair<std::vector<int>, std::uint32_t>> subsets_with_masks(int n) {
    std::vector<std::pair<std::vector<int>, std::uint32_t>> out;
    for (const auto& s : permsym::detail::subsets_lex(n - 1)) out.emplace_back(s, set_to_mask(s));
    return out;
}

/// Descent histogram of { pi . tau : tau in right } for one pi (left=false)
/// or of { tau . pi } (left=true), weighted by mult.
inline void accumulate_products(const Permutation& pi, long long mult,
                                const std::vector<Permutation>& others, bool left,
                                std::vector<long long>& hist) {
    for (const Permutation& tau : others) {
        const Permutation prod = left ? multiply(tau, pi) : multiply(pi, tau);
        hist[descent_mask(prod)] += mult;
    }
}

} // namespace detail

struct CheckA {
    bool ok = true;
    std::optional<OrderedSetPartition> witness;
    double millis = 0;
};

struct CheckB {
    bool ok = true;
    std::optional<std::vector<int>> witness;
    double millis = 0;
};

struct CheckPair {
    bool ok = true;
    std::optional<std::pair<std::vector<int>, std::vector<int>>> witness;
    double millis = 0;
};

/// a) D-symmetry, decided by the generating-function criterion: for every
/// ordered set partition U the multisets { delta_U(Des(pi) cap U*) } and
/// { Des(pi) cap delta_U(U*) } over B agree. The witness is the
/// lexicographically smallest failing U.
inline CheckA check_a_d_symmetric(const PermMultiset& b) {
    const auto start = std::chrono::steady_clock::now();
    const int n = b.degree();
    detail::require_degree(n, "check_a_d_symmetric");
    CheckA out;

    std::vector<std::pair<std::uint32_t, long long>> weighted;
    for (const auto& [pi, m] : b.entries()) weighted.emplace_back(descent_mask(pi), m);

    const std::size_t nmasks = static_cast<std::size_t>(permsym::detail::mask_count(n - 1));
    std::vector<long long> lhs(nmasks), rhs(nmasks);
    for (const OrderedSetPartition& u : enumerate_partitions(n)) {
        const Permutation d = delta(u);
        const std::uint32_t star = detail::set_to_mask(u_star(u));
        std::uint32_t star_image = 0;
        std::array<std::uint32_t, 32> image_bit{};
        for (int i = 1; i < n; ++i)
            if (star & (1u << (i - 1))) {
                image_bit[static_cast<std::size_t>(i)] = 1u << (d(i) - 1);
                star_image |= 1u << (d(i) - 1);
            }
        std::fill(lhs.begin(), lhs.end(), 0);
        std::fill(rhs.begin(), rhs.end(), 0);
        for (const auto& [des, m] : weighted) {
            std::uint32_t from = des & star;
            std::uint32_t img = 0;
            while (from) {
                const int i = std::countr_zero(from) + 1;
                img |= image_bit[static_cast<std::size_t>(i)];
                from &= from - 1;
            }
            lhs[img] += m;
            rhs[des & star_image] += m;
        }
        if (lhs != rhs) {
            out.ok = false;
            out.witness = u;
            break;
        }
    }
    out.millis = detail::elapsed_ms(start);
    return out;
}

/// b) D-commutativity: B R_J^{-1} = R_J^{-1} B in the descent sense for
/// every J, decided on actual products. Witness: smallest failing J.
inline CheckB check_b_d_commutative(const PermMultiset& b) {
    const auto start = std::chrono::steady_clock::now();
    const int n = b.degree();
    detail::require_degree(n, "check_b_d_commutative");
    CheckB out;
    const std::size_t nmasks = static_cast<std::size_t>(permsym::detail::mask_count(n - 1));
    for (const auto& [subset, mask] : detail::subsets_with_masks(n)) {
        const std::vector<Permutation> r = inverse_j_class(n, subset);
        std::vector<long long> right(nmasks, 0), left(nmasks, 0);
        for (const auto& [pi, m] : b.entries()) {
            detail::accumulate_products(pi, m, r, false, right);
            detail::accumulate_products(pi, m, r, true, left);
        }
        if (right != left) {
            out.ok = false;
            out.witness = subset;
            break;
        }
    }
    out.millis = detail::elapsed_ms(start);
    return out;
}

namespace detail {

/// Descent statistics of B . R_J^{-1} (or R_J^{-1} . B) for every J.
inline std::vector<std::vector<long long>> product_statistics(const PermMultiset& b, bool left) {
    const int n = b.degree();
    const std::size_t nmasks = static_cast<std::size_t>(permsym::detail::mask_count(n - 1));
    std::vector<std::vector<long long>> out;
    for (const auto& [subset, mask] : subsets_with_masks(n)) {
        const std::vector<Permutation> r = inverse_j_class(n, subset);
        std::vector<long long> hist(nmasks, 0);
        for (const auto& [pi, m] : b.entries()) accumulate_products(pi, m, r, left, hist);
        out.push_back(std::move(hist));
    }
    return out;
}

/// First J ~ K pair (in lex pair order) whose statistics differ.
inline CheckPair compare_over_sim_classes(int n, const std::vector<std::vector<long long>>& stats) {
    CheckPair out;
    const auto subsets = subsets_with_masks(n);
    for (std::size_t i = 0; i < subsets.size() && out.ok; ++i)
        for (std::size_t j = i + 1; j < subsets.size(); ++j) {
            if (!sim_subsets(n, subsets[i].first, subsets[j].first)) continue;
            if (stats[i] != stats[j]) {
                out.ok = false;
                out.witness = {subsets[i].first, subsets[j].first};
                break;
            }
        }
    return out;
}

} // namespace detail

/// c) Right invariance: B R_J^{-1} = B R_K^{-1} whenever J ~ K.
inline CheckPair check_c_right(const PermMultiset& b) {
    const auto start = std::chrono::steady_clock::now();
    detail::require_degree(b.degree(), "check_c_right");
    CheckPair out = detail::compare_over_sim_classes(b.degree(),
                                                     detail::product_statistics(b, false));
    out.millis = detail::elapsed_ms(start);
    return out;
}

/// d) Left invariance: R_J^{-1} B = R_K^{-1} B whenever J ~ K.
inline CheckPair check_d_left(const PermMultiset& b) {
    const auto start = std::chrono::steady_clock::now();
    detail::require_degree(b.degree(), "check_d_left");
    CheckPair out = detail::compare_over_sim_classes(b.degree(),
                                                     detail::product_statistics(b, true));
    out.millis = detail::elapsed_ms(start);
    return out;
}

/// e) Symmetry: |B_J| = |B_K| whenever J ~ K, cross-checked against the
/// quasisymmetric route (is_symmetric of the M expansion of Q(B)). The two
/// routes disagreeing is an internal consistency failure.
inline CheckPair check_e_symmetric(const PermMultiset& b) {
    const auto start = std::chrono::steady_clock::now();
    const int n = b.degree();
    detail::require_degree(n, "check_e_symmetric");
    CheckPair out;
    const std::vector<long long> counts = detail::containment_counts(detail::descent_histogram(b));
    const auto subsets = detail::subsets_with_masks(n);
    for (std::size_t i = 0; i < subsets.size() && out.ok; ++i)
        for (std::size_t j = i + 1; j < subsets.size(); ++j) {
            if (!sim_subsets(n, subsets[i].first, subsets[j].first)) continue;
            if (counts[subsets[i].second] != counts[subsets[j].second]) {
                out.ok = false;
                out.witness = {subsets[i].first, subsets[j].first};
                break;
            }
        }
    const bool qsym_route = qsym::is_symmetric(qsym::f_to_m(qsym::q_of(b)));
    if (qsym_route != out.ok)
        throw internal_error("check_e_symmetric: counting route and quasisymmetric route disagree");
    out.millis = detail::elapsed_ms(start);
    return out;
}

/// The five flags of the main equivalence, each computed independently.
/// They must all match; `agreement()` is the empirical theorem test.
struct ConditionReport {
    int degree = 0;
    CheckA a;
    CheckB b;
    CheckPair c;
    CheckPair d;
    CheckPair e;

    std::array<bool, 5> flags() const { return {a.ok, b.ok, c.ok, d.ok, e.ok}; }

    bool agreement() const {
        const auto f = flags();
        for (bool x : f)
            if (x != f[0]) return false;
        return true;
    }
};

inline ConditionReport check_theorem(const PermMultiset& b) {
    ConditionReport report;
    report.degree = b.degree();
    report.a = check_a_d_symmetric(b);
    report.b = check_b_d_commutative(b);
    report.c = check_c_right(b);
    report.d = check_d_left(b);
    report.e = check_e_symmetric(b);
    return report;
}

struct ErResult {
    bool ok = true;
    std::optional<std::vector<int>> witness;
    /// Set when B did not classify as fine; the check still ran.
    bool advisory_not_fine = false;
    double millis = 0;
};

/// B D_J^{-1} = D_J^{-1} B in the descent sense for every J, on actual
/// products.
inline ErResult check_er_conjecture(const PermMultiset& b) {
    const auto start = std::chrono::steady_clock::now();
    const int n = b.degree();
    detail::require_degree(n, "check_er_conjecture");
    ErResult out;
    out.advisory_not_fine = qsym::classify(b).status != qsym::SymmetryClass::fine;
    const std::size_t nmasks = static_cast<std::size_t>(permsym::detail::mask_count(n - 1));
    for (const auto& [subset, mask] : detail::subsets_with_masks(n)) {
        const std::vector<Permutation> d = d_class(n, subset);
        std::vector<long long> right(nmasks, 0), left(nmasks, 0);
        for (const auto& [pi, m] : b.entries()) {
            detail::accumulate_products(pi, m, d, false, right);
            detail::accumulate_products(pi, m, d, true, left);
        }
        if (right != left) {
            out.ok = false;
            out.witness = subset;
            break;
        }
    }
    out.millis = detail::elapsed_ms(start);
    return out;
}

struct ClosureResult {
    bool right_symmetric = true;
    bool left_symmetric = true;
    bool ok() const { return right_symmetric && left_symmetric; }
};

/// For symmetric B: both B R_J^{-1} and R_J^{-1} B must be symmetric.
inline ClosureResult check_closure(const PermMultiset& b, const std::vector<int>& j) {
    const int n = b.degree();
    detail::require_degree(n, "check_closure");
    if (!check_e_symmetric(b).ok)
        throw std::invalid_argument("check_closure: B is not symmetric");
    const PermMultiset r = PermMultiset::from_permutations(n, inverse_j_class(n, j));
    ClosureResult out;
    out.right_symmetric = check_e_symmetric(multiset_product(b, r)).ok;
    out.left_symmetric = check_e_symmetric(multiset_product(r, b)).ok;
    return out;
}

/// r(U) = [n-1] \ U*  and  s(U) = [n-1] \ delta_U(U*); always r(U) ~ s(U).
inline std::pair<std::vector<int>, std::vector<int>> r_s_of(const OrderedSetPartition& u) {
    const int n = u.degree();
    const Permutation d = delta(u);
    std::vector<char> in_star(static_cast<std::size_t>(n), 0);
    std::vector<char> in_image(static_cast<std::size_t>(n), 0);
    for (int i : u_star(u)) {
        in_star[static_cast<std::size_t>(i)] = 1;
        in_image[static_cast<std::size_t>(d(i))] = 1;
    }
    std::vector<int> r, s;
    for (int i = 1; i < n; ++i) {
        if (!in_star[static_cast<std::size_t>(i)]) r.push_back(i);
        if (!in_image[static_cast<std::size_t>(i)]) s.push_back(i);
    }
    return {r, s};
}

/// S_k(alpha): all I subseteq [p] with sum_{i in I} alpha_i = k, lex order.
inline std::vector<std::vector<int>> s_k(const std::vector<int>& alpha, int k) {
    std::vector<std::vector<int>> out;
    for (const auto& subset : permsym::detail::subsets_lex(static_cast<int>(alpha.size()))) {
        int sum = 0;
        for (int i : subset) sum += alpha[static_cast<std::size_t>(i) - 1];
        if (sum == k) out.push_back(subset);
    }
    return out;
}

/// S_k'(alpha): S_k(alpha) minus the prefix [m], when a prefix sums to k.
inline std::vector<std::vector<int>> s_k_prime(const std::vector<int>& alpha, int k) {
    std::vector<std::vector<int>> out;
    for (auto& subset : s_k(alpha, k)) {
        bool prefix = true;
        for (std::size_t i = 0; i < subset.size(); ++i)
            if (subset[i] != static_cast<int>(i) + 1) prefix = false;
        if (!(prefix && !subset.empty())) out.push_back(std::move(subset));
    }
    return out;
}

/// alpha(I): the parts indexed by I in order, then the remaining parts.
inline std::vector<int> alpha_rearranged(const std::vector<int>& alpha, const std::vector<int>& idx) {
    std::vector<char> taken(alpha.size() + 1, 0);
    std::vector<int> out;
    for (int i : idx) {
        out.push_back(alpha[static_cast<std::size_t>(i) - 1]);
        taken[static_cast<std::size_t>(i)] = 1;
    }
    for (std::size_t i = 1; i <= alpha.size(); ++i)
        if (!taken[i]) out.push_back(alpha[i - 1]);
    return out;
}

/// Pi_k(alpha): partitions of shape alpha with Des(delta_U) = {k}.
inline std::vector<OrderedSetPartition> pi_k(const std::vector<int>& alpha, int k) {
    const SubsetComposition shape = SubsetComposition::from_composition(alpha);
    std::vector<OrderedSetPartition> out;
    for (const OrderedSetPartition& u : enumerate_partitions(shape.degree(), shape))
        if (descent_set(delta(u)) == std::vector<int>{k}) out.push_back(u);
    return out;
}

/// Gamma_k(alpha): the members of Pi_k(alpha) whose blocks are all intervals.
inline std::vector<OrderedSetPartition> gamma_k(const std::vector<int>& alpha, int k) {
    std::vector<OrderedSetPartition> out;
    for (const OrderedSetPartition& u : pi_k(alpha, k)) {
        bool intervals = true;
        for (const auto& block : u.blocks())
            if (block.back() - block.front() + 1 != static_cast<int>(block.size())) intervals = false;
        if (intervals) out.push_back(u);
    }
    return out;
}

/// The bijection S_k'(alpha) -> Gamma_k(alpha): the blocks indexed by I tile
/// [k] as consecutive intervals in index order, the remaining blocks tile
/// [k+1, n]. Verifies bijectivity and co(r(f(I))) = alpha(I) before
/// returning; a failure is an internal consistency error.
inline std::vector<std::pair<std::vector<int>, OrderedSetPartition>> gamma_bijection(
    int k, const std::vector<int>& alpha) {
    int n = 0;
    for (int p : alpha) n += p;
    if (k >= n) throw std::invalid_argument("gamma_bijection: need k < n");

    std::vector<std::pair<std::vector<int>, OrderedSetPartition>> out;
    for (const std::vector<int>& idx : s_k_prime(alpha, k)) {
        std::vector<std::vector<int>> blocks(alpha.size());
        std::vector<char> in_idx(alpha.size() + 1, 0);
        for (int i : idx) in_idx[static_cast<std::size_t>(i)] = 1;
        int low = 1, high = k + 1;
        for (std::size_t i = 1; i <= alpha.size(); ++i) {
            int& next = in_idx[i] ? low : high;
            for (int t = 0; t < alpha[i - 1]; ++t) blocks[i - 1].push_back(next++);
        }
        out.emplace_back(idx, OrderedSetPartition(n, std::move(blocks)));
    }

    // Bijectivity onto Gamma_k(alpha) and the composition law.
    std::vector<OrderedSetPartition> image;
    for (const auto& [idx, u] : out) {
        image.push_back(u);
        const auto [r, s] = r_s_of(u);
        if (SubsetComposition::from_subset(n, r).composition() != alpha_rearranged(alpha, idx))
            throw internal_error("gamma_bijection: co(r(f(I))) != alpha(I)");
    }
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) != image.end())
        throw internal_error("gamma_bijection: f is not injective");
    std::vector<OrderedSetPartition> gamma = gamma_k(alpha, k);
    std::sort(gamma.begin(), gamma.end());
    if (image != gamma)
        throw internal_error("gamma_bijection: image differs from Gamma_k(alpha)");
    return out;
}

} // namespace verifier
} // namespace permsym
