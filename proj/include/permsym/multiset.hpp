#pragma once

#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "permsym/errors.hpp"
#include "permsym/permutation.hpp"

namespace permsym {

/// Largest accepted multiplicity per file entry. Keeps every count the
/// library produces (sizes, products of two file-backed multisets, descent
/// statistics) inside 64-bit range.
inline constexpr long long kMaxMultiplicity = 1000000000LL;

/// A multiset of permutations of common degree, the B of all the theory
/// here. Entries iterate in lexicographic word order, so every report and
/// serialization derived from one is deterministic.
class PermMultiset {
public:
    explicit PermMultiset(int degree = 0) : degree_(degree) {
        if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
    }

    static PermMultiset from_permutations(int degree, const std::vector<Permutation>& perms) {
        PermMultiset out(degree);
        for (const auto& p : perms) out.add(p);
        return out;
    }

    void add(const Permutation& p, long long multiplicity = 1) {
        if (p.degree() != degree_)
            throw std::invalid_argument("multiset entries must share one degree");
        if (multiplicity < 1)
            throw std::invalid_argument("multiplicity must be positive");
        entries_[p] += multiplicity;
    }

    int degree() const { return degree_; }
    bool empty() const { return entries_.empty(); }

    /// Total size: the sum of multiplicities.
    long long total_size() const {
        long long sum = 0;
        for (const auto& [p, m] : entries_) sum += m;
        return sum;
    }

    long long multiplicity(const Permutation& p) const {
        auto it = entries_.find(p);
        return it == entries_.end() ? 0 : it->second;
    }

    const std::map<Permutation, long long>& entries() const { return entries_; }

    friend bool operator==(const PermMultiset&, const PermMultiset&) = default;

private:
    int degree_;
    std::map<Permutation, long long> entries_;
};

/// The multiset of descent sets of a PermMultiset: subset of [n-1] -> count.
struct DescentStatistic {
    int degree = 0;
    std::map<std::vector<int>, long long> counts;

    long long total() const {
        long long sum = 0;
        for (const auto& [s, c] : counts) sum += c;
        return sum;
    }

    friend bool operator==(const DescentStatistic&, const DescentStatistic&) = default;
};

inline DescentStatistic descent_statistic(const PermMultiset& b) {
    DescentStatistic stat;
    stat.degree = b.degree();
    for (const auto& [p, m] : b.entries()) stat.counts[descent_set(p)] += m;
    return stat;
}

/// A = B in the descent sense: equal descent generating functions.
inline bool equivalent(const PermMultiset& a, const PermMultiset& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("equivalent: degree mismatch");
    return descent_statistic(a) == descent_statistic(b);
}

/// AB: all products pi . tau with multiplicity convolution; |AB| = |A||B|.
inline PermMultiset multiset_product(const PermMultiset& a, const PermMultiset& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("multiset_product: degree mismatch");
    PermMultiset out(a.degree());
    for (const auto& [pi, ma] : a.entries())
        for (const auto& [tau, mb] : b.entries())
            out.add(multiply(pi, tau), ma * mb);
    return out;
}

/// Parses the multiset file format: one `<permutation> [x <multiplicity>]`
/// per line, '#' comments, blank lines ignored. The degree is inferred and
/// must be consistent across lines; `degree_override` pins it (useful for
/// empty files) and conflicts are parse errors.
inline PermMultiset parse_multiset(std::istream& in, std::optional<int> degree_override = {}) {
    std::optional<int> degree = degree_override;
    std::vector<std::pair<Permutation, long long>> parsed;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string token;
        if (!(ls >> token)) continue;
        Permutation p;
        try {
            p = parse_permutation(token);
        } catch (const parse_error& e) {
            throw parse_error(e.what(), lineno);
        }
        long long mult = 1;
        std::string sep;
        if (ls >> sep) {
            if (sep != "x") throw parse_error("expected 'x <multiplicity>', got '" + sep + "'", lineno);
            if (!(ls >> mult)) throw parse_error("missing multiplicity after 'x'", lineno);
            if (mult < 1 || mult > kMaxMultiplicity)
                throw parse_error("multiplicity out of range [1, " + std::to_string(kMaxMultiplicity) + "]",
                                  lineno);
            if (ls >> sep) throw parse_error("trailing content '" + sep + "'", lineno);
        }
        if (degree && p.degree() != *degree)
            throw parse_error("degree " + std::to_string(p.degree()) + " conflicts with degree " +
                                  std::to_string(*degree),
                              lineno);
        if (!degree) degree = p.degree();
        parsed.emplace_back(std::move(p), mult);
    }
    PermMultiset out(degree.value_or(0));
    for (auto& [p, m] : parsed) out.add(p, m);
    return out;
}

inline PermMultiset parse_multiset(const std::string& text, std::optional<int> degree_override = {}) {
    std::istringstream in(text);
    return parse_multiset(in, degree_override);
}

inline std::string format_multiset(const PermMultiset& b) {
    std::string out;
    for (const auto& [p, m] : b.entries()) {
        out += format_permutation(p);
        if (m != 1) out += " x " + std::to_string(m);
        out += '\n';
    }
    return out;
}

} // namespace permsym
