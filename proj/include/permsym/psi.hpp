#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "permsym/errors.hpp"
#include "permsym/multiset.hpp"
#include "permsym/ordered_partition.hpp"
#include "permsym/promotion.hpp"
#include "permsym/qsym.hpp"
#include "permsym/rs.hpp"

namespace permsym {
namespace tableaux {

/// The two-block bijection: pi -> RS^{-1}(P, promote_v(Q, V)) where (P,Q) =
/// RS(pi) and V is the second block. A single-block partition (V empty)
/// gives the identity.
inline Permutation psi_two_block(const OrderedSetPartition& u2, const Permutation& pi) {
    if (u2.degree() != pi.degree())
        throw std::invalid_argument("psi_two_block: degree mismatch");
    if (u2.block_count() > 2)
        throw std::invalid_argument("psi_two_block: at most two blocks");
    if (u2.block_count() <= 1) return pi;
    const TableauPair pq = rs(pi);
    return rs_inverse({pq.p, promote_v(pq.q, u2.blocks()[1])});
}

/// Decomposes B as a disjoint union of Knuth classes with multiplicities,
/// or nullopt when B is not such a union.
inline std::optional<std::map<StandardTableau, long long>> knuth_decompose(const PermMultiset& b) {
    std::map<StandardTableau, long long> classes;
    for (const auto& [pi, mult] : b.entries()) {
        const StandardTableau p = rs(pi).p;
        auto [it, inserted] = classes.try_emplace(p, mult);
        if (!inserted && it->second != mult) return std::nullopt;
    }
    for (const auto& [p, mult] : classes)
        for (const Permutation& pi : knuth_class(p))
            if (b.multiplicity(pi) != mult) return std::nullopt;
    return classes;
}

namespace detail {

/// Elementwise Psi_U on a union of Knuth classes, built by the two-block
/// reduction: merge the last two blocks, recurse, then apply the two-block
/// map for ([n] \ W, W) with W the delta image of the last block.
inline Permutation psi_element(const OrderedSetPartition& u, const Permutation& pi) {
    if (u.block_count() <= 1) return pi;
    if (u.block_count() == 2) return psi_two_block(u, pi);

    std::vector<std::vector<int>> merged(u.blocks().begin(), u.blocks().end() - 1);
    const std::vector<int>& last = u.blocks().back();
    merged.back().insert(merged.back().end(), last.begin(), last.end());
    const OrderedSetPartition v(u.degree(), std::move(merged));

    const Permutation intermediate = psi_element(v, pi);

    const Permutation delta_v = delta(v);
    std::vector<int> w;
    for (int x : last) w.push_back(delta_v(x));
    std::sort(w.begin(), w.end());
    std::vector<int> rest;
    for (int x = 1; x <= u.degree(); ++x)
        if (!std::binary_search(w.begin(), w.end(), x)) rest.push_back(x);
    const OrderedSetPartition two_block(u.degree(), {rest, w});

    return psi_two_block(two_block, intermediate);
}

} // namespace detail

/// Psi_U on a multiset that is a disjoint union of Knuth classes, as an
/// explicit bijection of the support (multiplicities ride along).
inline std::map<Permutation, Permutation> psi_general_map(const OrderedSetPartition& u,
                                                          const PermMultiset& b) {
    if (u.degree() != b.degree())
        throw std::invalid_argument("psi_general: degree mismatch");
    if (!knuth_decompose(b))
        throw std::invalid_argument("psi_general: B is not a disjoint union of Knuth classes");
    std::map<Permutation, Permutation> out;
    for (const auto& [pi, mult] : b.entries()) out.emplace(pi, detail::psi_element(u, pi));
    return out;
}

inline Permutation psi_general(const OrderedSetPartition& u, const PermMultiset& b,
                               const Permutation& pi) {
    if (b.multiplicity(pi) == 0) throw std::invalid_argument("psi_general: pi is not in B");
    const auto map = psi_general_map(u, b);
    return map.at(pi);
}

namespace detail {

/// B expanded to a tag list: each entry repeated by multiplicity, sorted.
inline std::vector<Permutation> expand_sorted(const PermMultiset& b) {
    std::vector<Permutation> out;
    for (const auto& [pi, mult] : b.entries())
        for (long long i = 0; i < mult; ++i) out.push_back(pi);
    return out;
}

/// Lift an elementwise bijection of the support of `list` to tag indices,
/// pairing equal elements in order.
inline std::vector<std::size_t> lift_to_tags(const std::vector<Permutation>& list,
                                             const std::map<Permutation, Permutation>& fn) {
    std::map<Permutation, std::vector<std::size_t>> positions;
    for (std::size_t i = 0; i < list.size(); ++i) positions[list[i]].push_back(i);
    std::vector<std::size_t> out(list.size());
    std::map<Permutation, std::size_t> used;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const Permutation& image = fn.at(list[i]);
        auto it = positions.find(image);
        if (it == positions.end())
            throw internal_error("psi map image left its multiset");
        out[i] = it->second[used[image]++];
    }
    return out;
}

} // namespace detail

/// Psi_U on an arbitrary symmetric multiset B, as an explicit multiset
/// bijection (source, target) listed per copy.
///
/// Construction: write Q(B) = sum c_lambda s_lambda; let A collect |c_lambda|
/// Knuth classes of the superstandard tableau for each negative c_lambda, and
/// T collect c_lambda classes for each positive one. Then Q(T) = Q(A u B), so
/// a descent-matching relabels A u B onto T, where Psi acts classwise; the
/// subtraction iteration then cancels A against itself to land back in B.
inline std::vector<std::pair<Permutation, Permutation>> psi_symmetric_map(
    const OrderedSetPartition& u, const PermMultiset& b) {
    if (u.degree() != b.degree())
        throw std::invalid_argument("psi_symmetric: degree mismatch");
    const qsym::ClassifyResult cls = qsym::classify(b);
    if (cls.status == qsym::SymmetryClass::not_symmetric)
        throw std::invalid_argument("psi_symmetric: B is not symmetric");

    PermMultiset a(b.degree());
    PermMultiset t(b.degree());
    for (const auto& [lambda, c] : cls.schur->terms()) {
        const StandardTableau p = superstandard_tableau(Partition(lambda));
        for (const Permutation& pi : knuth_class(p)) {
            if (c < 0)
                a.add(pi, -c);
            else
                t.add(pi, c);
        }
    }

    const std::vector<Permutation> list_a = detail::expand_sorted(a);
    const std::vector<Permutation> list_b = detail::expand_sorted(b);
    std::vector<Permutation> list_ab = list_a;
    list_ab.insert(list_ab.end(), list_b.begin(), list_b.end());
    const std::vector<Permutation> list_t = detail::expand_sorted(t);
    const std::size_t a_size = list_a.size();

    if (list_t.size() != list_ab.size())
        throw internal_error("psi_symmetric: |T| != |A u B|");

    // Descent-matching bijection g : A u B -> T.
    std::map<std::vector<int>, std::vector<std::size_t>> t_by_descents;
    for (std::size_t i = 0; i < list_t.size(); ++i)
        t_by_descents[descent_set(list_t[i])].push_back(i);
    std::vector<std::size_t> g(list_ab.size());
    std::vector<std::size_t> g_inv(list_t.size());
    std::map<std::vector<int>, std::size_t> used;
    for (std::size_t i = 0; i < list_ab.size(); ++i) {
        const std::vector<int> des = descent_set(list_ab[i]);
        auto it = t_by_descents.find(des);
        if (it == t_by_descents.end() || used[des] >= it->second.size())
            throw internal_error("psi_symmetric: descent statistics of T and A u B differ");
        g[i] = it->second[used[des]++];
        g_inv[g[i]] = i;
    }

    // Psi on T and on A, at tag level.
    std::map<Permutation, Permutation> psi_t_fn;
    for (const auto& [pi, mult] : t.entries()) psi_t_fn.emplace(pi, detail::psi_element(u, pi));
    const std::vector<std::size_t> psi_t = t.empty()
                                               ? std::vector<std::size_t>{}
                                               : detail::lift_to_tags(list_t, psi_t_fn);
    std::map<Permutation, Permutation> psi_a_fn;
    for (const auto& [pi, mult] : a.entries()) psi_a_fn.emplace(pi, detail::psi_element(u, pi));
    const std::vector<std::size_t> psi_a_tags =
        a.empty() ? std::vector<std::size_t>{} : detail::lift_to_tags(list_a, psi_a_fn);
    std::vector<std::size_t> psi_a_inv(psi_a_tags.size());
    for (std::size_t i = 0; i < psi_a_tags.size(); ++i) psi_a_inv[psi_a_tags[i]] = i;

    auto psi_ab = [&](std::size_t tag) { return g_inv[psi_t[g[tag]]]; };

    // Subtraction iteration: bounce through A until landing back in B. Both
    // maps are injective and A is finite, so |A u B| steps is a hard bound;
    // exceeding it means a bug, not an input problem.
    std::vector<std::pair<Permutation, Permutation>> out;
    for (std::size_t tag = a_size; tag < list_ab.size(); ++tag) {
        std::size_t x = psi_ab(tag);
        std::size_t steps = 0;
        while (x < a_size) {
            x = psi_ab(psi_a_inv[x]);
            if (++steps > list_ab.size())
                throw internal_error("psi_symmetric: subtraction iteration exceeded |A u B| steps");
        }
        out.emplace_back(list_ab[tag], list_ab[x]);
    }
    return out;
}

inline Permutation psi_symmetric(const OrderedSetPartition& u, const PermMultiset& b,
                                 const Permutation& pi) {
    if (b.multiplicity(pi) == 0) throw std::invalid_argument("psi_symmetric: pi is not in B");
    for (const auto& [src, dst] : psi_symmetric_map(u, b))
        if (src == pi) return dst;
    throw internal_error("psi_symmetric: pi not covered by the constructed map");
}

} // namespace tableaux
} // namespace permsym
