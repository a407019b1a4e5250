#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "permsym/composition.hpp"
#include "permsym/errors.hpp"
#include "permsym/multiset.hpp"
#include "permsym/tableau.hpp"
#include "permsym/util.hpp"

namespace permsym {
namespace qsym {

/// F, M: fundamental and monomial quasisymmetric bases, indexed by
/// compositions. m, s: monomial and Schur symmetric bases, indexed by
/// partitions.
enum class Basis { F, M, m, s };

inline const char* basis_name(Basis b) {
    switch (b) {
        case Basis::F: return "F";
        case Basis::M: return "M";
        case Basis::m: return "m";
        case Basis::s: return "s";
    }
    return "?";
}

/// A sparse integer vector in one graded basis. Indices are part vectors:
/// compositions for F/M, weakly decreasing partitions for m/s. Zero
/// coefficients are never stored and cross-basis arithmetic is rejected.
class GradedCoefficientVector {
public:
    GradedCoefficientVector(int degree, Basis basis) : degree_(degree), basis_(basis) {
        if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
    }

    int degree() const { return degree_; }
    Basis basis() const { return basis_; }
    const std::map<std::vector<int>, long long>& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }

    long long coeff(const std::vector<int>& index) const {
        auto it = terms_.find(index);
        return it == terms_.end() ? 0 : it->second;
    }

    /// F/M coefficient looked up by the subset J with co(J) = index.
    long long coeff_by_subset(const std::vector<int>& j) const {
        if (basis_ != Basis::F && basis_ != Basis::M)
            throw std::invalid_argument("subset lookup only applies to the F and M bases");
        return coeff(SubsetComposition::from_subset(degree_, j).composition());
    }

    void add_term(const std::vector<int>& index, long long c) {
        if (c == 0) return;
        validate_index(index);
        auto [it, inserted] = terms_.try_emplace(index, 0);
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    GradedCoefficientVector& operator+=(const GradedCoefficientVector& other) {
        if (other.degree_ != degree_ || other.basis_ != basis_)
            throw std::invalid_argument("vector arithmetic requires one degree and one basis");
        for (const auto& [idx, c] : other.terms_) add_term(idx, c);
        return *this;
    }

    GradedCoefficientVector& operator-=(const GradedCoefficientVector& other) {
        if (other.degree_ != degree_ || other.basis_ != basis_)
            throw std::invalid_argument("vector arithmetic requires one degree and one basis");
        for (const auto& [idx, c] : other.terms_) add_term(idx, -c);
        return *this;
    }

    friend bool operator==(const GradedCoefficientVector&, const GradedCoefficientVector&) = default;

private:
    void validate_index(const std::vector<int>& index) const {
        int sum = 0;
        for (std::size_t i = 0; i < index.size(); ++i) {
            if (index[i] <= 0) throw std::invalid_argument("index parts must be positive");
            if ((basis_ == Basis::m || basis_ == Basis::s) && i > 0 && index[i] > index[i - 1])
                throw std::invalid_argument("m/s indices must be partitions");
            sum += index[i];
        }
        if (sum != degree_) throw std::invalid_argument("index parts must sum to the degree");
    }

    int degree_;
    Basis basis_;
    std::map<std::vector<int>, long long> terms_;
};

/// Raised when a vector that must be symmetric is not. Carries the
/// lexicographically smallest pair of rearranged indices whose coefficients
/// differ.
class asymmetry_error : public std::invalid_argument {
public:
    asymmetry_error(std::vector<int> alpha, std::vector<int> beta)
        : std::invalid_argument("vector is not symmetric"), alpha_(std::move(alpha)), beta_(std::move(beta)) {}

    const std::vector<int>& alpha() const { return alpha_; }
    const std::vector<int>& beta() const { return beta_; }

private:
    std::vector<int> alpha_, beta_;
};

/// Q(B) = sum over B of F_{Des(pi), n}, multiplicity-weighted.
inline GradedCoefficientVector q_of(const PermMultiset& b) {
    GradedCoefficientVector out(b.degree(), Basis::F);
    for (const auto& [pi, mult] : b.entries())
        out.add_term(SubsetComposition::from_subset(b.degree(), descent_set(pi)).composition(), mult);
    return out;
}

/// F -> M expansion: F_J = sum over supersets K of J of M_{co(K)}.
inline GradedCoefficientVector f_to_m(const GradedCoefficientVector& v) {
    if (v.basis() != Basis::F) throw std::invalid_argument("f_to_m expects the F basis");
    if (v.degree() > 25) throw infeasible_error("f_to_m: degree too large to expand");
    const int n = v.degree();
    const std::uint32_t full = n > 0 ? (1u << (n - 1)) - 1 : 0;
    GradedCoefficientVector out(n, Basis::M);
    for (const auto& [alpha, c] : v.terms()) {
        const std::uint32_t jmask =
            detail::set_to_mask(SubsetComposition::from_composition(alpha).subset());
        const std::uint32_t free = full & ~jmask;
        std::uint32_t sub = 0;
        while (true) {
            out.add_term(SubsetComposition::from_subset(n, detail::mask_to_set(jmask | sub)).composition(),
                         c);
            if (sub == free) break;
            sub = (sub - free) & free; // next submask of free
        }
    }
    return out;
}

/// The lexicographically smallest (alpha, beta) with alpha ~ beta and
/// different coefficients, if any.
inline std::optional<std::pair<std::vector<int>, std::vector<int>>> asymmetry_witness(
    const GradedCoefficientVector& v) {
    if (v.basis() != Basis::M) throw std::invalid_argument("symmetry test expects the M basis");
    std::optional<std::pair<std::vector<int>, std::vector<int>>> best;
    std::vector<Partition> seen;
    for (const auto& [alpha, c] : v.terms()) {
        Partition lambda = sorted_parts(alpha);
        if (std::find(seen.begin(), seen.end(), lambda) != seen.end()) continue;
        seen.push_back(lambda);
        const std::vector<std::vector<int>> cls = rearrangements(lambda);
        for (std::size_t i = 0; i < cls.size() && (!best || cls[i] < best->first); ++i)
            for (std::size_t j = i + 1; j < cls.size(); ++j)
                if (v.coeff(cls[i]) != v.coeff(cls[j])) {
                    std::pair<std::vector<int>, std::vector<int>> cand{cls[i], cls[j]};
                    if (!best || cand < *best) best = cand;
                    break;
                }
    }
    return best;
}

/// True iff coefficients are constant on rearrangement classes.
inline bool is_symmetric(const GradedCoefficientVector& v) { return !asymmetry_witness(v).has_value(); }

/// Collapse a symmetric M vector to the m basis; throws asymmetry_error
/// with a witness pair otherwise.
inline GradedCoefficientVector to_m_basis(const GradedCoefficientVector& v) {
    if (v.basis() != Basis::M) throw std::invalid_argument("to_m_basis expects the M basis");
    if (auto w = asymmetry_witness(v)) throw asymmetry_error(w->first, w->second);
    GradedCoefficientVector out(v.degree(), Basis::m);
    for (const auto& [alpha, c] : v.terms()) {
        std::vector<int> idx = sorted_parts(alpha).parts();
        if (idx == alpha) out.add_term(idx, c); // one representative per class
    }
    return out;
}

/// m -> M expansion: m_lambda = sum over rearrangements alpha of M_alpha.
inline GradedCoefficientVector expand_m(const GradedCoefficientVector& v) {
    if (v.basis() != Basis::m) throw std::invalid_argument("expand_m expects the m basis");
    GradedCoefficientVector out(v.degree(), Basis::M);
    for (const auto& [lambda, c] : v.terms())
        for (const auto& alpha : rearrangements(Partition(lambda))) out.add_term(alpha, c);
    return out;
}

namespace detail2 {

/// Number of semistandard tableaux of the given shape and content, by
/// direct row-major backtracking.
inline long long count_ssyt(const std::vector<int>& shape, const std::vector<int>& content) {
    const int max_value = static_cast<int>(content.size());
    std::vector<int> remaining = content;
    std::vector<std::vector<int>> rows(shape.size());
    long long count = 0;
    auto rec = [&](auto&& self, std::size_t r, std::size_t c) -> void {
        if (r == shape.size()) {
            ++count;
            return;
        }
        std::size_t nr = r, nc = c + 1;
        if (static_cast<int>(nc) >= shape[r]) {
            nr = r + 1;
            nc = 0;
        }
        const int lo_row = c > 0 ? rows[r][c - 1] : 1;                // weak along rows
        const int lo_col = r > 0 ? rows[r - 1][c] + 1 : 1;            // strict down columns
        for (int v = std::max(lo_row, lo_col); v <= max_value; ++v) {
            if (remaining[static_cast<std::size_t>(v) - 1] == 0) continue;
            --remaining[static_cast<std::size_t>(v) - 1];
            rows[r].push_back(v);
            self(self, nr, nc);
            rows[r].pop_back();
            ++remaining[static_cast<std::size_t>(v) - 1];
        }
    };
    if (shape.empty())
        count = 1;
    else
        rec(rec, 0, 0);
    return count;
}

} // namespace detail2

/// Kostka numbers K_{lambda,mu} for all partitions of one degree, computed
/// once and then shared read-only.
class KostkaTable {
public:
    explicit KostkaTable(int degree) : degree_(degree), partitions_(partitions_of(degree)) {
        table_.resize(partitions_.size());
        for (std::size_t i = 0; i < partitions_.size(); ++i) {
            table_[i].resize(partitions_.size());
            for (std::size_t j = 0; j < partitions_.size(); ++j)
                table_[i][j] = detail2::count_ssyt(partitions_[i].parts(), partitions_[j].parts());
        }
    }

    int degree() const { return degree_; }
    const std::vector<Partition>& partitions() const { return partitions_; }

    long long value(const Partition& lambda, const Partition& mu) const {
        return table_[index_of(lambda)][index_of(mu)];
    }

    std::size_t index_of(const Partition& p) const {
        auto it = std::lower_bound(partitions_.begin(), partitions_.end(), p,
                                   [](const Partition& a, const Partition& b) { return b < a; });
        if (it == partitions_.end() || *it != p)
            throw std::invalid_argument("partition has the wrong degree");
        return static_cast<std::size_t>(it - partitions_.begin());
    }

private:
    int degree_;
    std::vector<Partition> partitions_; // decreasing lex order
    std::vector<std::vector<long long>> table_;
};

inline const KostkaTable& kostka_table(int degree) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<KostkaTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[degree];
    if (!slot) slot = std::make_unique<KostkaTable>(degree);
    return *slot;
}

/// K_{lambda,mu}: semistandard tableaux of shape lambda and content mu.
inline long long kostka(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n()) throw std::invalid_argument("kostka: |lambda| != |mu|");
    return kostka_table(lambda.n()).value(lambda, mu);
}

/// Solve v = sum c_lambda s_lambda in the m basis. The Kostka system is
/// unitriangular under decreasing lex order (a linear extension of
/// dominance), so this is exact integer elimination.
inline GradedCoefficientVector m_to_s(const GradedCoefficientVector& v) {
    if (v.basis() != Basis::m) throw std::invalid_argument("m_to_s expects the m basis");
    const KostkaTable& kt = kostka_table(v.degree());
    GradedCoefficientVector residual = v;
    GradedCoefficientVector out(v.degree(), Basis::s);
    for (const Partition& lambda : kt.partitions()) {
        const long long c = residual.coeff(lambda.parts());
        if (c == 0) continue;
        out.add_term(lambda.parts(), c);
        for (const Partition& mu : kt.partitions()) {
            const long long k = kt.value(lambda, mu);
            if (k != 0) residual.add_term(mu.parts(), -c * k);
        }
    }
    if (!residual.zero()) throw internal_error("m_to_s: elimination left a nonzero residual");
    return out;
}

/// s -> m expansion via s_lambda = sum K_{lambda,mu} m_mu.
inline GradedCoefficientVector s_to_m(const GradedCoefficientVector& v) {
    if (v.basis() != Basis::s) throw std::invalid_argument("s_to_m expects the s basis");
    const KostkaTable& kt = kostka_table(v.degree());
    GradedCoefficientVector out(v.degree(), Basis::m);
    for (const auto& [lambda, c] : v.terms())
        for (const Partition& mu : kt.partitions()) {
            const long long k = kt.value(Partition(lambda), mu);
            if (k != 0) out.add_term(mu.parts(), c * k);
        }
    return out;
}

/// s_lambda in the fundamental basis: one F term per standard tableau of
/// shape lambda, indexed by its descent set.
inline GradedCoefficientVector schur_in_f(const Partition& lambda) {
    const int n = lambda.n();
    GradedCoefficientVector out(n, Basis::F);
    for (const StandardTableau& q : enumerate_syt(lambda))
        out.add_term(SubsetComposition::from_subset(n, tableau_descents(q)).composition(), 1);
    return out;
}

enum class SymmetryClass { not_symmetric, symmetric_not_fine, fine };

inline const char* symmetry_class_name(SymmetryClass c) {
    switch (c) {
        case SymmetryClass::not_symmetric: return "not_symmetric";
        case SymmetryClass::symmetric_not_fine: return "symmetric_not_fine";
        case SymmetryClass::fine: return "fine";
    }
    return "?";
}

struct ClassifyResult {
    SymmetryClass status = SymmetryClass::fine;
    /// Present when not symmetric: smallest rearranged pair with unequal
    /// M coefficients.
    std::optional<std::pair<std::vector<int>, std::vector<int>>> witness;
    /// Present when symmetric: the Schur expansion of Q(B).
    std::optional<GradedCoefficientVector> schur;
};

/// The full pipeline Q(B) -> M -> symmetry decision -> m -> s.
inline ClassifyResult classify(const PermMultiset& b) {
    ClassifyResult result;
    const GradedCoefficientVector in_m = f_to_m(q_of(b));
    if (auto w = asymmetry_witness(in_m)) {
        result.status = SymmetryClass::not_symmetric;
        result.witness = *w;
        return result;
    }
    GradedCoefficientVector schur = m_to_s(to_m_basis(in_m));
    bool nonneg = true;
    for (const auto& [idx, c] : schur.terms())
        if (c < 0) nonneg = false;
    result.status = nonneg ? SymmetryClass::fine : SymmetryClass::symmetric_not_fine;
    result.schur = std::move(schur);
    return result;
}

} // namespace qsym
} // namespace permsym
