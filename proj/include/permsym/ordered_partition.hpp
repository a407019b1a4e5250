#pragma once

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <vector>

#include "permsym/composition.hpp"
#include "permsym/permutation.hpp"

namespace permsym {

/// An ordered set partition of [n]: a sequence of nonempty disjoint sorted
/// blocks whose union is [n]. Block order is semantic.
class OrderedSetPartition {
public:
    OrderedSetPartition() = default;

    OrderedSetPartition(int degree, std::vector<std::vector<int>> blocks)
        : degree_(degree), blocks_(std::move(blocks)) {
        std::vector<char> seen(static_cast<std::size_t>(degree_) + 1, 0);
        int covered = 0;
        for (auto& block : blocks_) {
            if (block.empty()) throw std::invalid_argument("ordered set partition: empty block");
            std::sort(block.begin(), block.end());
            for (int v : block) {
                if (v < 1 || v > degree_ || seen[static_cast<std::size_t>(v)])
                    throw std::invalid_argument("ordered set partition: blocks must partition [n]");
                seen[static_cast<std::size_t>(v)] = 1;
                ++covered;
            }
        }
        if (covered != degree_)
            throw std::invalid_argument("ordered set partition: blocks must cover [n]");
    }

    /// The interval partition of [n] with the given block sizes, blocks in
    /// natural order ([alpha_1], then the next alpha_2 integers, ...).
    static OrderedSetPartition intervals(const std::vector<int>& shape) {
        std::vector<std::vector<int>> blocks;
        int next = 1;
        for (int size : shape) {
            std::vector<int> block;
            for (int i = 0; i < size; ++i) block.push_back(next++);
            blocks.push_back(std::move(block));
        }
        return OrderedSetPartition(next - 1, std::move(blocks));
    }

    int degree() const { return degree_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    std::size_t block_count() const { return blocks_.size(); }

    std::vector<int> shape() const {
        std::vector<int> s;
        for (const auto& b : blocks_) s.push_back(static_cast<int>(b.size()));
        return s;
    }

    /// 0-based index of the block containing value v.
    int block_index_of(int v) const {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), v))
                return static_cast<int>(i);
        throw std::invalid_argument("value outside [n]");
    }

    friend bool operator==(const OrderedSetPartition&, const OrderedSetPartition&) = default;
    friend std::strong_ordering operator<=>(const OrderedSetPartition& a, const OrderedSetPartition& b) {
        if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
        return a.blocks_ <=> b.blocks_;
    }

private:
    int degree_ = 0;
    std::vector<std::vector<int>> blocks_;
};

/// delta_U: positions in U_1 carry 1..|U_1| in increasing position order,
/// positions in U_2 the next |U_2| values, and so on.
inline Permutation delta(const OrderedSetPartition& u) {
    std::vector<int> word(static_cast<std::size_t>(u.degree()));
    int next = 1;
    for (const auto& block : u.blocks())
        for (int pos : block) word[static_cast<std::size_t>(pos) - 1] = next++;
    return Permutation(std::move(word));
}

/// U* = { i in [n-1] : i and i+1 lie in the same block }.
inline std::vector<int> u_star(const OrderedSetPartition& u) {
    std::vector<int> out;
    std::vector<int> block_of(static_cast<std::size_t>(u.degree()) + 1, -1);
    for (std::size_t i = 0; i < u.blocks().size(); ++i)
        for (int v : u.blocks()[i]) block_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
    for (int i = 1; i < u.degree(); ++i)
        if (block_of[static_cast<std::size_t>(i)] == block_of[static_cast<std::size_t>(i) + 1])
            out.push_back(i);
    return out;
}

/// sigma_U(pi): segment pi into runs of lengths shape(U); block U_i receives
/// std(segment_i) shifted past the previous segments, in position order.
inline Permutation sigma(const OrderedSetPartition& u, const Permutation& pi) {
    if (u.degree() != pi.degree())
        throw std::invalid_argument("sigma: degree mismatch");
    std::vector<int> word(static_cast<std::size_t>(pi.degree()));
    int start = 1; // 1-based start of the current segment of pi
    for (const auto& block : u.blocks()) {
        const int len = static_cast<int>(block.size());
        Word segment;
        for (int i = 0; i < len; ++i) segment.push_back(pi(start + i));
        const Permutation std_seg = standardize(segment);
        for (int i = 0; i < len; ++i)
            word[static_cast<std::size_t>(block[static_cast<std::size_t>(i)]) - 1] =
                std_seg(i + 1) + (start - 1);
        start += len;
    }
    return Permutation(std::move(word));
}

/// rho_U(pi) = delta_W . pi where W_i = pi(U_i).
inline Permutation rho(const OrderedSetPartition& u, const Permutation& pi) {
    if (u.degree() != pi.degree())
        throw std::invalid_argument("rho: degree mismatch");
    std::vector<std::vector<int>> image_blocks;
    for (const auto& block : u.blocks()) {
        std::vector<int> image;
        for (int v : block) image.push_back(pi(v));
        image_blocks.push_back(std::move(image));
    }
    const OrderedSetPartition w(u.degree(), std::move(image_blocks));
    return multiply(delta(w), pi);
}

namespace detail {

inline void enumerate_by_shape(const std::vector<int>& remaining, const std::vector<int>& shape,
                               std::size_t depth, std::vector<std::vector<int>>& cur,
                               std::vector<OrderedSetPartition>& out, int degree) {
    if (depth == shape.size()) {
        out.emplace_back(degree, cur);
        return;
    }
    const int take = shape[depth];
    std::vector<int> choice(static_cast<std::size_t>(take));
    auto choose = [&](auto&& self, std::size_t from, int picked) -> void {
        if (picked == take) {
            std::vector<int> rest;
            std::size_t ci = 0;
            for (int v : remaining) {
                if (ci < choice.size() && choice[ci] == v) {
                    ++ci;
                } else {
                    rest.push_back(v);
                }
            }
            cur.push_back(choice);
            enumerate_by_shape(rest, shape, depth + 1, cur, out, degree);
            cur.pop_back();
            return;
        }
        for (std::size_t i = from; i + static_cast<std::size_t>(take - picked) <= remaining.size(); ++i) {
            choice[static_cast<std::size_t>(picked)] = remaining[i];
            self(self, i + 1, picked + 1);
        }
    };
    choose(choose, 0, 0);
}

} // namespace detail

/// Pi(n, J): all ordered set partitions with block sizes co(J), in
/// lexicographic order of the block sequence.
inline std::vector<OrderedSetPartition> enumerate_partitions(int n, const SubsetComposition& shape) {
    if (shape.degree() != n)
        throw std::invalid_argument("enumerate_partitions: shape is not a composition of n");
    std::vector<int> universe(static_cast<std::size_t>(n));
    std::iota(universe.begin(), universe.end(), 1);
    std::vector<OrderedSetPartition> out;
    std::vector<std::vector<int>> cur;
    detail::enumerate_by_shape(universe, shape.composition(), 0, cur, out, n);
    std::sort(out.begin(), out.end());
    return out;
}

/// Pi(n): every ordered set partition of [n] (Fubini(n) of them), in
/// lexicographic order of the block sequence.
inline std::vector<OrderedSetPartition> enumerate_partitions(int n) {
    std::vector<OrderedSetPartition> out;
    for (const auto& comp : compositions_of(n)) {
        std::vector<OrderedSetPartition> part = enumerate_partitions(n, comp);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace permsym
