#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "permsym/classes.hpp"
#include "permsym/errors.hpp"
#include "permsym/multiset.hpp"
#include "permsym/qsym.hpp"
#include "permsym/rs.hpp"
#include "permsym/shuffle.hpp"
#include "permsym/util.hpp"
#include "permsym/verifier.hpp"

namespace permsym {
namespace verifier {

enum class CampaignMode { exhaustive_subsets, random_multisets, structured };

inline const char* campaign_mode_name(CampaignMode m) {
    switch (m) {
        case CampaignMode::exhaustive_subsets: return "exhaustive_subsets";
        case CampaignMode::random_multisets: return "random_multisets";
        case CampaignMode::structured: return "structured";
    }
    return "?";
}

struct CampaignConfig {
    int degree = 3;
    CampaignMode mode = CampaignMode::exhaustive_subsets;
    long long samples = 1000;        // random mode only
    long long max_multiplicity = 1;  // random mode only
    std::optional<std::uint64_t> seed;
    int threads = 0; // 0 = hardware concurrency
};

/// Exhaustive subset enumeration is only offered through degree 4 (2^{n!}
/// subsets beyond that); the degree-4 population is covered through the
/// verified descent-class sweep below.
inline constexpr int kExhaustiveDegreeCeiling = 4;

struct CampaignReport {
    CampaignConfig config;
    std::string method;
    long long items = 0;              // condition reports computed
    long long population_covered = 0; // multisets those reports decide
    bool reduction_verified = false;  // degree-4 sweep premise, checked exactly
    std::array<std::array<long long, 5>, 5> agreement{};
    std::array<long long, 5> true_counts{};
    long long disagreements = 0;
    std::vector<std::pair<std::string, ConditionReport>> disagreement_items; // capped
    std::map<std::string, long long> classification_counts;
    std::vector<std::string> symmetric_not_fine; // serialized specimens, capped
    long long symmetric_not_fine_total = 0;
    std::map<std::string, long long> family_counts;
    std::uint64_t seed_used = 0;
    bool seeded = false;
    double wall_ms = 0;
};

namespace detail {

inline constexpr std::size_t kMaxRecordedDisagreements = 100;
inline constexpr std::size_t kMaxRecordedSpecimens = 200;

struct ItemOutcome {
    std::array<bool, 5> flags{};
    bool agreement = true;
    qsym::SymmetryClass cls = qsym::SymmetryClass::fine;
    std::optional<ConditionReport> full_report; // recorded on disagreement
    std::string serialized;                     // recorded when interesting
};

inline void aggregate(CampaignReport& report, const std::string& label, const ItemOutcome& item) {
    ++report.items;
    for (int i = 0; i < 5; ++i) {
        if (item.flags[static_cast<std::size_t>(i)]) ++report.true_counts[static_cast<std::size_t>(i)];
        for (int j = 0; j < 5; ++j)
            if (item.flags[static_cast<std::size_t>(i)] == item.flags[static_cast<std::size_t>(j)])
                ++report.agreement[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    if (!item.agreement) {
        ++report.disagreements;
        if (report.disagreement_items.size() < kMaxRecordedDisagreements && item.full_report)
            report.disagreement_items.emplace_back(label + "\n" + item.serialized, *item.full_report);
    }
    ++report.classification_counts[qsym::symmetry_class_name(item.cls)];
    if (item.cls == qsym::SymmetryClass::symmetric_not_fine) {
        ++report.symmetric_not_fine_total;
        if (report.symmetric_not_fine.size() < kMaxRecordedSpecimens)
            report.symmetric_not_fine.push_back(item.serialized);
    }
}

inline ItemOutcome run_item(const PermMultiset& b) {
    ItemOutcome out;
    const ConditionReport report = check_theorem(b);
    out.flags = report.flags();
    out.agreement = report.agreement();
    out.cls = qsym::classify(b).status;
    if (!out.agreement) {
        out.full_report = report;
        out.serialized = format_multiset(b);
    } else if (out.cls == qsym::SymmetryClass::symmetric_not_fine) {
        out.serialized = format_multiset(b);
    }
    return out;
}

/// Deterministic parallel map: results land in index order regardless of
/// scheduling.
template <typename Fn>
inline std::vector<ItemOutcome> parallel_map(std::size_t count, int threads, Fn&& fn) {
    std::vector<ItemOutcome> results(count);
    const int workers = threads > 0
                            ? threads
                            : std::max(1u, std::thread::hardware_concurrency());
    if (workers <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&]() {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                results[i] = fn(i);
            }
        });
    for (auto& t : pool) t.join();
    return results;
}

/// Exact per-permutation data for one degree, computed from real products.
/// `verified` certifies, by direct comparison over all of S_n, that every
/// row depends on its permutation only through the descent set; with that
/// established, all five condition flags are functions of the descent
/// histogram, which is what lets a class sweep decide every subset.
struct DegreeTables {
    int n = 0;
    std::size_t nmasks = 0;
    bool verified = false;
    // per descent mask: descent statistic of pi . R_J^{-1} and R_J^{-1} . pi
    std::vector<std::vector<std::vector<long long>>> row_right, row_left; // [jmask][desmask] -> hist
    // per U in Pi(n): per descent mask, the two transported masks of check a)
    std::vector<std::vector<std::uint32_t>> a_lhs, a_rhs; // [u][desmask]
    std::vector<std::uint32_t> sim_class_of_mask;         // rearrangement class id per J-mask
    std::vector<long long> class_sizes;                   // |D_J| per descent mask

    explicit DegreeTables(int degree) : n(degree) {
        nmasks = static_cast<std::size_t>(permsym::detail::mask_count(n - 1));
        const std::vector<Permutation> sn = all_permutations(n);
        class_sizes.assign(nmasks, 0);
        for (const Permutation& pi : sn) ++class_sizes[descent_mask(pi)];

        std::vector<std::vector<Permutation>> jclasses(nmasks);
        for (std::size_t jm = 0; jm < nmasks; ++jm)
            jclasses[jm] = inverse_j_class(n, permsym::detail::mask_to_set(static_cast<std::uint32_t>(jm)));

        row_right.assign(nmasks, std::vector<std::vector<long long>>(nmasks));
        row_left.assign(nmasks, std::vector<std::vector<long long>>(nmasks));
        std::vector<char> have(nmasks, 0);
        verified = true;
        for (const Permutation& pi : sn) {
            const std::uint32_t dm = descent_mask(pi);
            for (std::size_t jm = 0; jm < nmasks; ++jm) {
                std::vector<long long> right(nmasks, 0), left(nmasks, 0);
                verifier::detail::accumulate_products(pi, 1, jclasses[jm], false, right);
                verifier::detail::accumulate_products(pi, 1, jclasses[jm], true, left);
                if (!have[dm]) {
                    row_right[jm][dm] = std::move(right);
                    row_left[jm][dm] = std::move(left);
                } else if (row_right[jm][dm] != right || row_left[jm][dm] != left) {
                    verified = false;
                }
            }
            have[dm] = 1;
        }

        for (const OrderedSetPartition& u : enumerate_partitions(n)) {
            const Permutation d = delta(u);
            const std::uint32_t star = permsym::detail::set_to_mask(u_star(u));
            std::uint32_t star_image = 0;
            std::array<std::uint32_t, 32> image_bit{};
            for (int i = 1; i < n; ++i)
                if (star & (1u << (i - 1))) {
                    image_bit[static_cast<std::size_t>(i)] = 1u << (d(i) - 1);
                    star_image |= 1u << (d(i) - 1);
                }
            std::vector<std::uint32_t> lhs(nmasks), rhs(nmasks);
            for (std::size_t dm = 0; dm < nmasks; ++dm) {
                std::uint32_t from = static_cast<std::uint32_t>(dm) & star;
                std::uint32_t img = 0;
                while (from) {
                    const int i = std::countr_zero(from) + 1;
                    img |= image_bit[static_cast<std::size_t>(i)];
                    from &= from - 1;
                }
                lhs[dm] = img;
                rhs[dm] = static_cast<std::uint32_t>(dm) & star_image;
            }
            a_lhs.push_back(std::move(lhs));
            a_rhs.push_back(std::move(rhs));
        }

        sim_class_of_mask.assign(nmasks, 0);
        std::vector<Partition> reps;
        for (std::size_t jm = 0; jm < nmasks; ++jm) {
            const Partition p = sorted_parts(
                SubsetComposition::from_subset(n, permsym::detail::mask_to_set(static_cast<std::uint32_t>(jm)))
                    .composition());
            auto it = std::find(reps.begin(), reps.end(), p);
            if (it == reps.end()) {
                reps.push_back(p);
                it = reps.end() - 1;
            }
            sim_class_of_mask[jm] = static_cast<std::uint32_t>(it - reps.begin());
        }
    }

    /// Five flags for any multiset with the given descent histogram.
    std::array<bool, 5> check(const std::vector<long long>& hist) const {
        std::array<bool, 5> flags{true, true, true, true, true};

        // a)
        std::vector<long long> lhs(nmasks), rhs(nmasks);
        for (std::size_t u = 0; u < a_lhs.size() && flags[0]; ++u) {
            std::fill(lhs.begin(), lhs.end(), 0);
            std::fill(rhs.begin(), rhs.end(), 0);
            for (std::size_t dm = 0; dm < nmasks; ++dm) {
                if (hist[dm] == 0) continue;
                lhs[a_lhs[u][dm]] += hist[dm];
                rhs[a_rhs[u][dm]] += hist[dm];
            }
            if (lhs != rhs) flags[0] = false;
        }

        // b), c), d): accumulate the product statistics per J once.
        std::vector<std::vector<long long>> right(nmasks), left(nmasks);
        for (std::size_t jm = 0; jm < nmasks; ++jm) {
            right[jm].assign(nmasks, 0);
            left[jm].assign(nmasks, 0);
            for (std::size_t dm = 0; dm < nmasks; ++dm) {
                if (hist[dm] == 0) continue;
                for (std::size_t t = 0; t < nmasks; ++t) {
                    right[jm][t] += hist[dm] * row_right[jm][dm][t];
                    left[jm][t] += hist[dm] * row_left[jm][dm][t];
                }
            }
            if (right[jm] != left[jm]) flags[1] = false;
        }
        for (std::size_t i = 0; i < nmasks && (flags[2] || flags[3]); ++i)
            for (std::size_t j = i + 1; j < nmasks; ++j) {
                if (sim_class_of_mask[i] != sim_class_of_mask[j]) continue;
                if (right[i] != right[j]) flags[2] = false;
                if (left[i] != left[j]) flags[3] = false;
            }

        // e)
        const std::vector<long long> counts = verifier::detail::containment_counts(hist);
        for (std::size_t i = 0; i < nmasks && flags[4]; ++i)
            for (std::size_t j = i + 1; j < nmasks; ++j)
                if (sim_class_of_mask[i] == sim_class_of_mask[j] && counts[i] != counts[j]) {
                    flags[4] = false;
                    break;
                }
        return flags;
    }
};

} // namespace detail

/// Runs the configured verification campaign and aggregates a report.
/// Exhaustive mode covers every subset of S_n: by direct enumeration for
/// n <= 3 and, for n = 4, by sweeping all descent histograms after exactly
/// verifying that the five flags factor through the histogram.
inline CampaignReport run_campaign(const CampaignConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    CampaignReport report;
    report.config = cfg;
    if (cfg.degree < 0) throw std::invalid_argument("campaign: degree must be nonnegative");

    auto finish = [&]() -> CampaignReport& {
        report.wall_ms = verifier::detail::elapsed_ms(start);
        return report;
    };

    if (cfg.mode == CampaignMode::exhaustive_subsets) {
        if (cfg.degree > kExhaustiveDegreeCeiling)
            throw infeasible_error(
                "exhaustive mode enumerates 2^{n!} subsets and is only supported for degree <= " +
                std::to_string(kExhaustiveDegreeCeiling) + " (requested degree " +
                std::to_string(cfg.degree) + ")");
        const int n = cfg.degree;
        if (n <= 3) {
            report.method = "direct_subset_enumeration";
            const std::vector<Permutation> sn = all_permutations(n);
            const std::size_t count = 1ull << sn.size();
            auto outcomes = detail::parallel_map(count, cfg.threads, [&](std::size_t mask) {
                PermMultiset b(n);
                for (std::size_t i = 0; i < sn.size(); ++i)
                    if (mask & (1ull << i)) b.add(sn[i]);
                return detail::run_item(b);
            });
            for (std::size_t mask = 0; mask < count; ++mask)
                detail::aggregate(report, "subset:" + std::to_string(mask), outcomes[mask]);
            report.population_covered = static_cast<long long>(count);
            return finish();
        }

        // Degree 4: descent-class sweep.
        report.method = "descent_class_sweep";
        const detail::DegreeTables tables(n);
        if (!tables.verified)
            throw internal_error(
                "campaign: per-permutation product statistics are not constant on descent classes");
        report.reduction_verified = true;

        std::vector<std::vector<Permutation>> by_descent(tables.nmasks);
        for (const Permutation& pi : all_permutations(n)) by_descent[descent_mask(pi)].push_back(pi);

        // All histograms (k_J with 0 <= k_J <= |D_J|), odometer order.
        std::vector<long long> hist(tables.nmasks, 0);
        std::vector<std::vector<long long>> all_hists;
        while (true) {
            all_hists.push_back(hist);
            std::size_t pos = 0;
            while (pos < tables.nmasks && hist[pos] == tables.class_sizes[pos]) {
                hist[pos] = 0;
                ++pos;
            }
            if (pos == tables.nmasks) break;
            ++hist[pos];
        }

        // Sanity: the classes must tile the full power set of S_n.
        long long covered = 0;
        for (const auto& h : all_hists) {
            long long ways = 1;
            for (std::size_t dm = 0; dm < tables.nmasks; ++dm) {
                long long c = 1;
                for (long long t = 0; t < h[dm]; ++t)
                    c = c * (tables.class_sizes[dm] - t) / (t + 1);
                ways *= c;
            }
            covered += ways;
        }
        if (covered != (1ll << 24))
            throw internal_error("campaign: descent classes do not tile the 2^24 subsets of S_4");

        auto outcomes = detail::parallel_map(all_hists.size(), cfg.threads, [&](std::size_t idx) {
            const std::vector<long long>& h = all_hists[idx];
            PermMultiset rep(n);
            for (std::size_t dm = 0; dm < tables.nmasks; ++dm)
                for (long long t = 0; t < h[dm]; ++t)
                    rep.add(by_descent[dm][static_cast<std::size_t>(t)]);
            detail::ItemOutcome out;
            out.flags = tables.check(h);
            out.agreement = true;
            for (bool f : out.flags)
                if (f != out.flags[0]) out.agreement = false;
            out.cls = qsym::classify(rep).status;
            if (!out.agreement) {
                // Record the full slow-path report for the witness data.
                out.full_report = check_theorem(rep);
                out.serialized = format_multiset(rep);
            } else if (out.cls == qsym::SymmetryClass::symmetric_not_fine) {
                out.serialized = format_multiset(rep);
            }
            return out;
        });
        for (std::size_t i = 0; i < outcomes.size(); ++i) {
            std::string label = "class:[";
            for (std::size_t dm = 0; dm < tables.nmasks; ++dm) {
                if (dm) label += ',';
                label += std::to_string(all_hists[i][dm]);
            }
            label += ']';
            detail::aggregate(report, label, outcomes[i]);
        }
        report.population_covered = covered;
        return finish();
    }

    verifier::detail::require_degree(cfg.degree, "campaign");

    std::vector<std::pair<std::string, PermMultiset>> items;
    if (cfg.mode == CampaignMode::random_multisets) {
        report.method = "seeded_random_multisets";
        if (!cfg.seed) throw std::invalid_argument("random mode requires a seed");
        if (cfg.max_multiplicity < 1)
            throw std::invalid_argument("random mode requires max multiplicity >= 1");
        report.seeded = true;
        report.seed_used = *cfg.seed;
        std::mt19937_64 rng(*cfg.seed);
        const std::vector<Permutation> sn = all_permutations(cfg.degree);
        std::vector<std::size_t> index(sn.size());
        for (long long s = 0; s < cfg.samples; ++s) {
            std::iota(index.begin(), index.end(), 0);
            const std::size_t support =
                static_cast<std::size_t>(permsym::detail::bounded_rand(rng, sn.size() + 1));
            for (std::size_t i = 0; i < support; ++i) {
                const std::size_t j =
                    i + static_cast<std::size_t>(permsym::detail::bounded_rand(rng, index.size() - i));
                std::swap(index[i], index[j]);
            }
            PermMultiset b(cfg.degree);
            for (std::size_t i = 0; i < support; ++i)
                b.add(sn[index[i]],
                      1 + static_cast<long long>(permsym::detail::bounded_rand(
                              rng, static_cast<std::uint64_t>(cfg.max_multiplicity))));
            items.emplace_back("random:" + std::to_string(s), std::move(b));
        }
    } else {
        report.method = "structured_families";
        const int n = cfg.degree;
        for (const Partition& shape : partitions_of(n))
            for (const StandardTableau& p : enumerate_syt(shape)) {
                std::string label = "knuth:";
                for (const auto& row : p.rows()) {
                    for (int v : row) label += std::to_string(v) + ".";
                    label += "/";
                }
                items.emplace_back(label,
                                   PermMultiset::from_permutations(n, knuth_class(p)));
            }
        for (const Partition& lambda : partitions_of(n)) {
            std::string label = "conj:";
            for (int p : lambda.parts()) label += std::to_string(p) + ".";
            items.emplace_back(label, PermMultiset::from_permutations(n, conjugacy_class(n, lambda)));
        }
        for (const auto& subset : permsym::detail::subsets_lex(n - 1)) {
            std::string jtxt;
            for (int v : subset) jtxt += std::to_string(v) + ".";
            items.emplace_back("jclass:" + jtxt,
                               PermMultiset::from_permutations(n, inverse_j_class(n, subset)));
            items.emplace_back("dclass:" + jtxt,
                               PermMultiset::from_permutations(n, d_class(n, subset)));
        }
        for (int a = 1; a < n; ++a)
            for (const Permutation& pi : all_permutations(a))
                for (const Permutation& tau : all_permutations(n - a))
                    items.emplace_back(
                        "shuffle:" + format_permutation(pi) + "|" + format_permutation(tau),
                        PermMultiset::from_permutations(n, shifted_shuffle(pi, tau)));
        for (const auto& [label, b] : items) {
            std::string family = label.substr(0, label.find(':'));
            ++report.family_counts[family];
        }
    }

    // Fixed order independent of construction: canonical serialization.
    std::vector<std::size_t> order(items.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        const std::string sx = format_multiset(items[x].second);
        const std::string sy = format_multiset(items[y].second);
        if (sx != sy) return sx < sy;
        return items[x].first < items[y].first;
    });

    auto outcomes = detail::parallel_map(items.size(), cfg.threads, [&](std::size_t i) {
        return detail::run_item(items[order[i]].second);
    });
    for (std::size_t i = 0; i < outcomes.size(); ++i)
        detail::aggregate(report, items[order[i]].first, outcomes[i]);
    report.population_covered = static_cast<long long>(items.size());
    return finish();
}

} // namespace verifier
} // namespace permsym
