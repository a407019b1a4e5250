#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "permsym/errors.hpp"

namespace permsym {

/// A word: distinct integer letters, not necessarily forming [n].
using Word = std::vector<int>;

/// A permutation of [n] in one-line notation. Positions and values are
/// 1-based at every interface; degree 0 (the empty word) is allowed.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
        const int n = degree();
        std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
        for (int v : word_) {
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("permutation word is not a bijection on [n]");
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> w(static_cast<std::size_t>(n));
        std::iota(w.begin(), w.end(), 1);
        return Permutation(std::move(w));
    }

    int degree() const { return static_cast<int>(word_.size()); }

    /// Image of i under the permutation, 1-based.
    int operator()(int i) const { return word_[static_cast<std::size_t>(i) - 1]; }

    const std::vector<int>& word() const { return word_; }

    Permutation inverse() const {
        std::vector<int> inv(word_.size());
        for (int i = 1; i <= degree(); ++i)
            inv[static_cast<std::size_t>((*this)(i)) - 1] = i;
        Permutation out;
        out.word_ = std::move(inv);
        return out;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.word_ <=> b.word_;
    }

private:
    std::vector<int> word_;
};

/// Des(pi) = { i in [n-1] : pi(i) > pi(i+1) }, as a sorted 1-based set.
inline std::vector<int> descent_set(const Permutation& pi) {
    std::vector<int> des;
    for (int i = 1; i < pi.degree(); ++i)
        if (pi(i) > pi(i + 1)) des.push_back(i);
    return des;
}

/// Descent set as a bitmask (bit i-1 set when i is a descent).
inline std::uint32_t descent_mask(const Permutation& pi) {
    std::uint32_t mask = 0;
    for (int i = 1; i < pi.degree(); ++i)
        if (pi(i) > pi(i + 1)) mask |= 1u << (i - 1);
    return mask;
}

/// Group product: (pi . tau)(i) = pi(tau(i)).
inline Permutation multiply(const Permutation& pi, const Permutation& tau) {
    if (pi.degree() != tau.degree())
        throw std::invalid_argument("multiply: degree mismatch");
    std::vector<int> w(static_cast<std::size_t>(pi.degree()));
    for (int i = 1; i <= pi.degree(); ++i)
        w[static_cast<std::size_t>(i) - 1] = pi(tau(i));
    return Permutation(std::move(w));
}

/// The unique permutation of [len(w)] order-isomorphic to w.
inline Permutation standardize(const Word& w) {
    std::vector<int> order(w.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return w[static_cast<std::size_t>(a)] < w[static_cast<std::size_t>(b)]; });
    std::vector<int> out(w.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
        if (rank > 0 && w[static_cast<std::size_t>(order[rank])] == w[static_cast<std::size_t>(order[rank - 1])])
            throw std::invalid_argument("standardize: duplicate letters in word");
        out[static_cast<std::size_t>(order[rank])] = static_cast<int>(rank) + 1;
    }
    return Permutation(std::move(out));
}

/// Parses "3412" (degree <= 9) or "4,1,5,6,2,7,8,3,9" (any degree).
inline Permutation parse_permutation(const std::string& token) {
    std::vector<int> w;
    if (token.find(',') != std::string::npos) {
        std::size_t pos = 0;
        while (pos <= token.size()) {
            std::size_t next = token.find(',', pos);
            if (next == std::string::npos) next = token.size();
            const std::string part = token.substr(pos, next - pos);
            if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
                throw parse_error("invalid permutation token '" + token + "'");
            w.push_back(std::stoi(part));
            pos = next + 1;
        }
    } else {
        if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
            throw parse_error("invalid permutation token '" + token + "'");
        for (char c : token) w.push_back(c - '0');
        if (w.size() > 9)
            throw parse_error("digit-string form only covers degree <= 9; use commas: '" + token + "'");
    }
    try {
        return Permutation(std::move(w));
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string(e.what()) + ": '" + token + "'");
    }
}

/// Compact digit string for degree <= 9, comma-separated otherwise.
inline std::string format_permutation(const Permutation& pi) {
    std::string out;
    const bool compact = pi.degree() <= 9;
    for (int i = 1; i <= pi.degree(); ++i) {
        if (!compact && i > 1) out += ',';
        out += std::to_string(pi(i));
    }
    return out;
}

} // namespace permsym
