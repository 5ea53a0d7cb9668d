#pragma once

/**
 * @file abacus.hpp
 * @brief Alternants, the Vandermonde, bialternant Schur polynomials and
 *        labeled abaci with the two bead-sliding Pieri involutions.
 *
 * A labeled abacus is a word w_0 w_1 w_2 ... over {0..n} in which every bead
 * label 1..n occurs exactly once; w_k = i places bead i at runner position k.
 * An abacus of shape lambda has its beads at the positions lambda + delta.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "symfn/determinant.hpp"
#include "symfn/errors.hpp"
#include "symfn/partition.hpp"
#include "symfn/polynomial.hpp"

namespace symfn {

/// delta = (n-1, ..., 1, 0)
inline std::vector<int> staircase(int n) {
    std::vector<int> d(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = n - 1 - i;
    return d;
}

/// a_{lambda+delta} = det(x_i^{lambda_j + n - j}).
inline Polynomial alternant_det(const Partition& lambda, int n) {
    if (static_cast<int>(lambda.length()) > n)
        throw domain_error("alternant needs at most n parts");
    const std::vector<int> shifted = [&] {
        std::vector<int> v = lambda.padded(static_cast<std::size_t>(n));
        const std::vector<int> d = staircase(n);
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] += d[static_cast<std::size_t>(i)];
        return v;
    }();
    Matrix<Polynomial> m(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Exponents e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(i)] = shifted[static_cast<std::size_t>(j)];
            m[static_cast<std::size_t>(i)].push_back(Polynomial::monomial(std::move(e)));
        }
    }
    return determinant(m, Polynomial(n), Polynomial::one(n));
}

/// Product formula prod_{i<j} (x_i - x_j).
inline Polynomial vandermonde(int n) {
    Polynomial p = Polynomial::one(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            p *= Polynomial::variable(n, i) - Polynomial::variable(n, j);
    return p;
}

/// s_lambda = a_{lambda+delta} / a_delta; zero when lambda has more than n parts.
inline Polynomial schur_bialternant(const Partition& lambda, int n) {
    if (static_cast<int>(lambda.length()) > n) return Polynomial(n);
    try {
        return exact_div(alternant_det(lambda, n), vandermonde(n));
    } catch (const division_error& e) {
        throw internal_fault(std::string("bialternant quotient failed: ") + e.what());
    }
}

class LabeledAbacus {
public:
    LabeledAbacus() = default;

    /// Validates that the nonzero letters form a permutation of 1..n.
    explicit LabeledAbacus(std::vector<int> slots) : slots_(std::move(slots)) {
        while (!slots_.empty() && slots_.back() == 0) slots_.pop_back();
        std::vector<int> labels;
        for (int s : slots_) {
            if (s < 0) throw domain_error("abacus letters must be non-negative");
            if (s > 0) labels.push_back(s);
        }
        std::vector<int> sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (sorted[i] != static_cast<int>(i) + 1)
                throw domain_error("abacus beads must be labeled by a permutation of 1..n");
        beads_ = static_cast<int>(labels.size());
    }

    const std::vector<int>& slots() const noexcept { return slots_; }
    int beads() const noexcept { return beads_; }

    /// Letter at position k (0 beyond the stored slots).
    int at(std::size_t k) const noexcept { return k < slots_.size() ? slots_[k] : 0; }

    /// Bead labels in position order.
    std::vector<int> permutation() const {
        std::vector<int> out;
        for (int s : slots_)
            if (s > 0) out.push_back(s);
        return out;
    }

    /// Occupied positions, increasing.
    std::vector<int> support() const {
        std::vector<int> out;
        for (std::size_t k = 0; k < slots_.size(); ++k)
            if (slots_[k] > 0) out.push_back(static_cast<int>(k));
        return out;
    }

    /// Position of bead i (1-based label).
    int position_of(int label) const {
        for (std::size_t k = 0; k < slots_.size(); ++k)
            if (slots_[k] == label) return static_cast<int>(k);
        throw domain_error("no such bead");
    }

    int sign() const {
        std::vector<int> perm = permutation();
        for (int& v : perm) --v;
        return permutation_sign(perm);
    }

    Partition shape() const {
        std::vector<int> s = support();
        std::reverse(s.begin(), s.end());
        const std::vector<int> d = staircase(beads_);
        for (std::size_t i = 0; i < s.size(); ++i) s[i] -= d[i];
        return Partition(std::move(s));
    }

    /// Exponent vector of wt(w) = prod x_{w_k}^k.
    Exponents weight_exponents() const {
        Exponents e(static_cast<std::size_t>(beads_), 0);
        for (std::size_t k = 0; k < slots_.size(); ++k)
            if (slots_[k] > 0) e[static_cast<std::size_t>(slots_[k] - 1)] = static_cast<int>(k);
        return e;
    }

    Polynomial weight() const { return Polynomial::monomial(weight_exponents()); }

    /// Copy with the labels of beads a and b interchanged.
    LabeledAbacus with_swapped_labels(int a, int b) const {
        std::vector<int> s = slots_;
        for (int& v : s) {
            if (v == a) v = b;
            else if (v == b) v = a;
        }
        return LabeledAbacus(std::move(s));
    }

    bool operator==(const LabeledAbacus&) const = default;
    auto operator<=>(const LabeledAbacus&) const = default;

private:
    std::vector<int> slots_;
    int beads_ = 0;
};

struct AbacusStats {
    int sign;
    Partition shape;
    Polynomial weight;
};

inline AbacusStats abacus_stats(const LabeledAbacus& w) { return {w.sign(), w.shape(), w.weight()}; }

/// All n! abaci of shape lambda, labels permuted in lexicographic order.
inline std::vector<LabeledAbacus> enumerate_abaci(const Partition& lambda, int n) {
    if (static_cast<int>(lambda.length()) > n) throw domain_error("abacus shape needs at most n parts");
    std::vector<int> positions = lambda.padded(static_cast<std::size_t>(n));
    const std::vector<int> d = staircase(n);
    for (int i = 0; i < n; ++i) positions[static_cast<std::size_t>(i)] += d[static_cast<std::size_t>(i)];
    std::reverse(positions.begin(), positions.end());  // increasing
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    std::vector<LabeledAbacus> out;
    const std::size_t len = n == 0 ? 0 : static_cast<std::size_t>(positions.back()) + 1;
    do {
        std::vector<int> slots(len, 0);
        for (int i = 0; i < n; ++i)
            slots[static_cast<std::size_t>(positions[static_cast<std::size_t>(i)])] = labels[static_cast<std::size_t>(i)];
        out.emplace_back(std::move(slots));
    } while (std::next_permutation(labels.begin(), labels.end()));
    return out;
}

/// (-1)^{floor(n/2)} sum_w sign(w) wt(w) over all abaci of shape lambda.
inline Polynomial alternant_via_abaci(const Partition& lambda, int n) {
    Polynomial p(n);
    for (const auto& w : enumerate_abaci(lambda, n)) p.add_term(w.weight_exponents(), w.sign());
    if ((n / 2) % 2 == 1) p = -p;
    return p;
}

/// The abacus alternant divided by the Vandermonde; zero beyond n parts.
inline Polynomial schur_abacus(const Partition& lambda, int n) {
    if (static_cast<int>(lambda.length()) > n) return Polynomial(n);
    try {
        return exact_div(alternant_via_abaci(lambda, n), vandermonde(n));
    } catch (const division_error& e) {
        throw internal_fault(std::string("abacus alternant quotient failed: ") + e.what());
    }
}

// ---- Pieri involutions -----------------------------------------------------

struct PieriFixed {
    LabeledAbacus result;
    bool operator==(const PieriFixed&) const = default;
};

struct PieriSwapped {
    LabeledAbacus abacus;
    Exponents exponents;
    bool operator==(const PieriSwapped&) const = default;
};

using PieriMove = std::variant<PieriFixed, PieriSwapped>;

/**
 * Involution for s_lambda h_k. Beads are visited left to right; bead j walks
 * alpha_j single steps to the right. The first step onto an occupied slot
 * (bead k, p places right of j's start) swaps labels j,k in the original
 * abacus and moves p units of exponent from alpha_j to alpha_k.
 */
inline PieriMove pieri_involution_h(const LabeledAbacus& w, const Exponents& alpha) {
    const int n = w.beads();
    if (static_cast<int>(alpha.size()) != n) throw domain_error("exponent vector length differs from bead count");
    int total = 0;
    for (int a : alpha) {
        if (a < 0) throw domain_error("negative exponent");
        total += a;
    }
    std::vector<int> occ = w.slots();
    occ.resize(occ.size() + static_cast<std::size_t>(total) + 1, 0);
    for (int start : w.support()) {
        const int j = occ[static_cast<std::size_t>(start)];
        int pos = start;
        for (int step = 0; step < alpha[static_cast<std::size_t>(j - 1)]; ++step) {
            const int k = occ[static_cast<std::size_t>(pos + 1)];
            if (k != 0) {
                const int p = pos + 1 - start;
                Exponents next(alpha);
                next[static_cast<std::size_t>(j - 1)] -= p;
                next[static_cast<std::size_t>(k - 1)] += p;
                return PieriSwapped{w.with_swapped_labels(j, k), std::move(next)};
            }
            occ[static_cast<std::size_t>(pos + 1)] = j;
            occ[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
    }
    return PieriFixed{LabeledAbacus(std::move(occ))};
}

/**
 * Involution for s_lambda e_k. Beads are visited right to left; bead j with
 * alpha_j = 1 tries a single step right. A blocked step (bead k adjacent)
 * swaps labels j,k and the coordinates alpha_j, alpha_k.
 */
inline PieriMove pieri_involution_e(const LabeledAbacus& w, const Exponents& alpha) {
    const int n = w.beads();
    if (static_cast<int>(alpha.size()) != n) throw domain_error("exponent vector length differs from bead count");
    for (int a : alpha)
        if (a != 0 && a != 1) throw domain_error("elementary Pieri move needs a 0/1 vector");
    std::vector<int> occ = w.slots();
    occ.resize(occ.size() + 2, 0);
    std::vector<int> support = w.support();
    for (auto it = support.rbegin(); it != support.rend(); ++it) {
        const int pos = *it;
        const int j = occ[static_cast<std::size_t>(pos)];
        if (alpha[static_cast<std::size_t>(j - 1)] == 0) continue;
        const int k = occ[static_cast<std::size_t>(pos + 1)];
        if (k != 0) {
            Exponents next(alpha);
            std::swap(next[static_cast<std::size_t>(j - 1)], next[static_cast<std::size_t>(k - 1)]);
            return PieriSwapped{w.with_swapped_labels(j, k), std::move(next)};
        }
        occ[static_cast<std::size_t>(pos + 1)] = j;
        occ[static_cast<std::size_t>(pos)] = 0;
    }
    return PieriFixed{LabeledAbacus(std::move(occ))};
}

enum class PieriKind { h, e };

/// Vectors of the Pieri domain: M(n,k) for h, N(n,k) (0/1 entries) for e.
inline std::vector<Exponents> pieri_exponent_domain(int n, int k, PieriKind kind) {
    std::vector<Exponents> out;
    for_each_composition(k, static_cast<std::size_t>(n), [&](const Exponents& a) {
        if (kind == PieriKind::e && std::any_of(a.begin(), a.end(), [](int v) { return v > 1; })) return;
        out.push_back(a);
    });
    return out;
}

/**
 * Schur expansion of s_lambda h_k (or e_k) in n variables, read off the fixed
 * points of the bead involution on the identity-labeled abacus of shape
 * lambda: each fixed point yields one abacus of the resulting shape.
 */
inline std::map<Partition, BigInt, std::greater<>> pieri_product(const Partition& lambda, int k, int n,
                                                                 PieriKind kind) {
    std::map<Partition, BigInt, std::greater<>> out;
    if (static_cast<int>(lambda.length()) > n || k < 0) return out;
    const LabeledAbacus base = enumerate_abaci(lambda, n).front();
    for (const auto& alpha : pieri_exponent_domain(n, k, kind)) {
        const PieriMove move = kind == PieriKind::h ? pieri_involution_h(base, alpha) : pieri_involution_e(base, alpha);
        if (const auto* fixed = std::get_if<PieriFixed>(&move)) out[fixed->result.shape()] += 1;
    }
    return out;
}

// ---- text form -----------------------------------------------------------

/// Digit string for n <= 9 beads, comma-separated slot list otherwise.
inline std::string to_string(const LabeledAbacus& w) {
    std::string out;
    const bool digits = w.beads() <= 9;
    for (std::size_t k = 0; k < w.slots().size(); ++k) {
        if (!digits && k > 0) out += ',';
        out += std::to_string(w.slots()[k]);
    }
    return out;
}

inline LabeledAbacus parse_abacus(std::string_view text) {
    std::string_view s = detail::trim(text);
    std::vector<int> slots;
    try {
        if (s.find(',') != std::string_view::npos) {
            slots = detail::parse_int_list(s, ',');
        } else {
            for (char c : s) {
                if (c < '0' || c > '9') throw parse_error("abacus must be a digit string");
                slots.push_back(c - '0');
            }
        }
        return LabeledAbacus(std::move(slots));
    } catch (const domain_error& e) {
        throw parse_error(e.what());
    }
}

}  // namespace symfn
