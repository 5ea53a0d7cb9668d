#pragma once

/**
 * @file plactic.hpp
 * @brief Knuth and "forgotten" equivalence classes, Yamanouchi words, and
 *        Greene invariants computed by exhaustive search.
 */

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "symfn/errors.hpp"
#include "symfn/partition.hpp"
#include "symfn/polynomial.hpp"
#include "symfn/tableau.hpp"

namespace symfn {

/// A rewrite of three consecutive letters; returns nullopt when the rule does not apply.
using TripleRule = std::function<std::optional<std::array<int, 3>>(int, int, int)>;

namespace detail {

// xzy <-> zxy for x <= y < z: swap the first two letters.
inline std::optional<std::array<int, 3>> knuth_first(int a, int b, int c) {
    if (std::min(a, b) <= c && c < std::max(a, b)) return std::array{b, a, c};
    return std::nullopt;
}

// yxz <-> yzx for x < y <= z: swap the last two letters.
inline std::optional<std::array<int, 3>> knuth_second(int a, int b, int c) {
    if (std::min(b, c) < a && a <= std::max(b, c)) return std::array{a, c, b};
    return std::nullopt;
}

// xzy <-> yxz for x < y < z.
inline std::optional<std::array<int, 3>> forgotten_first(int a, int b, int c) {
    if (a < c && c < b) return std::array{c, a, b};
    if (b < a && a < c) return std::array{b, c, a};
    return std::nullopt;
}

// zxy <-> yzx for x <= y <= z.
inline std::optional<std::array<int, 3>> forgotten_second(int a, int b, int c) {
    if (b <= c && c <= a) return std::array{c, a, b};
    if (c <= a && a <= b) return std::array{b, c, a};
    return std::nullopt;
}

inline std::set<Word> bfs_closure(const Word& start, const std::vector<TripleRule>& rules, std::size_t bound) {
    std::set<Word> seen{start};
    std::deque<Word> queue{start};
    while (!queue.empty()) {
        Word w = std::move(queue.front());
        queue.pop_front();
        for (std::size_t i = 0; i + 2 < w.size(); ++i) {
            for (const auto& rule : rules) {
                auto r = rule(w[i], w[i + 1], w[i + 2]);
                if (!r) continue;
                Word v = w;
                std::copy(r->begin(), r->end(), v.begin() + static_cast<std::ptrdiff_t>(i));
                if (seen.insert(v).second) {
                    if (seen.size() > bound) throw domain_error("equivalence class exceeds the requested bound");
                    queue.push_back(std::move(v));
                }
            }
        }
    }
    return seen;
}

}  // namespace detail

inline constexpr std::size_t default_class_bound = 1'000'000;

/// Closure of u under both Knuth relations in both directions.
inline std::set<Word> knuth_class(const Word& u, std::size_t bound = default_class_bound) {
    return detail::bfs_closure(u, {detail::knuth_first, detail::knuth_second}, bound);
}

/// Closure of u under the two forgotten relations.
inline std::set<Word> forgotten_class(const Word& u, std::size_t bound = default_class_bound) {
    return detail::bfs_closure(u, {detail::forgotten_first, detail::forgotten_second}, bound);
}

/// Words up to this length are decided by BFS; longer ones by comparing P-tableaux.
inline constexpr std::size_t knuth_bfs_limit = 8;

inline bool knuth_equivalent(const Word& u, const Word& v) {
    if (u.size() != v.size()) return false;
    if (u.size() <= knuth_bfs_limit) return knuth_class(u).contains(v);
    return p_tableau(u) == p_tableau(v);
}

/// Every suffix has at least as many i's as (i+1)'s.
inline bool is_yamanouchi(const Word& w) {
    std::vector<int> count;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        const int a = *it;
        if (a < 1) return false;
        if (static_cast<int>(count.size()) < a) count.resize(static_cast<std::size_t>(a), 0);
        ++count[static_cast<std::size_t>(a - 1)];
        if (a > 1 && count[static_cast<std::size_t>(a - 1)] > count[static_cast<std::size_t>(a - 2)]) return false;
    }
    return true;
}

// ---- Greene invariants -----------------------------------------------------

/// l_k and l'_k for k = 0..|w|; both vectors have |w| + 1 entries.
struct GreeneInvariants {
    std::vector<int> increasing;  ///< l_k: k disjoint weakly increasing subwords
    std::vector<int> decreasing;  ///< l'_k: k disjoint strictly decreasing subwords
};

inline constexpr std::size_t greene_max_length = 16;

namespace detail {

// Least number of chains covering each index subset, over submasks holding the lowest index.
inline std::vector<int> chain_cover_numbers(const Word& w, bool weakly_increasing) {
    const std::size_t n = w.size();
    const std::uint32_t full = (std::uint32_t{1} << n);
    std::vector<char> chain(full, 0);
    for (std::uint32_t s = 0; s < full; ++s) {
        bool ok = true;
        int prev = 0;
        bool first = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
            if (!(s >> i & 1u)) continue;
            if (!first) ok = weakly_increasing ? prev <= w[i] : prev > w[i];
            prev = w[i];
            first = false;
        }
        chain[s] = ok;
    }
    std::vector<int> cover(full, 0);
    for (std::uint32_t s = 1; s < full; ++s) {
        const std::uint32_t low = s & (~s + 1);
        const std::uint32_t rest = s ^ low;
        int best = static_cast<int>(n) + 1;
        // submasks t of rest; the chain is t | low
        for (std::uint32_t t = rest;; t = (t - 1) & rest) {
            if (chain[t | low]) best = std::min(best, 1 + cover[rest ^ t]);
            if (t == 0) break;
        }
        cover[s] = best;
    }
    return cover;
}

inline std::vector<int> best_unions(const std::vector<int>& cover, std::size_t n) {
    std::vector<int> best(n + 1, 0);
    for (std::uint32_t s = 0; s < cover.size(); ++s) {
        const int size = std::popcount(s);
        for (std::size_t k = static_cast<std::size_t>(cover[s]); k <= n; ++k)
            best[k] = std::max(best[k], size);
    }
    return best;
}

}  // namespace detail

inline GreeneInvariants greene_invariants(const Word& w) {
    if (w.size() > greene_max_length) throw domain_error("Greene search is limited to short words");
    return {detail::best_unions(detail::chain_cover_numbers(w, true), w.size()),
            detail::best_unions(detail::chain_cover_numbers(w, false), w.size())};
}

/// (l_k(w), l'_k(w)); k beyond |w| saturates at |w|.
inline std::pair<int, int> greene_invariants(const Word& w, int k) {
    if (k < 0) throw domain_error("k must be non-negative");
    const auto g = greene_invariants(w);
    const std::size_t idx = std::min(static_cast<std::size_t>(k), w.size());
    return {g.increasing[idx], g.decreasing[idx]};
}

/// (row shape, column shape): successive differences of l_k and of l'_k.
/// The second component is the conjugate of the first for every word.
inline std::pair<Partition, Partition> shape_from_greene(const Word& w) {
    const auto g = greene_invariants(w);
    auto diffs = [](const std::vector<int>& l) {
        std::vector<int> d;
        for (std::size_t k = 1; k < l.size(); ++k) d.push_back(l[k] - l[k - 1]);
        while (!d.empty() && d.back() == 0) d.pop_back();
        return d;
    };
    auto lambda = diffs(g.increasing);
    auto columns = diffs(g.decreasing);
    if (!std::is_sorted(lambda.rbegin(), lambda.rend()) || !std::is_sorted(columns.rbegin(), columns.rend()))
        throw internal_fault("Greene differences are not weakly decreasing");
    return {Partition(std::move(lambda)), Partition(std::move(columns))};
}

}  // namespace symfn
