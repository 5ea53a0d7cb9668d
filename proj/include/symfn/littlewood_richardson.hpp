#pragma once

/**
 * @file littlewood_richardson.hpp
 * @brief Littlewood-Richardson coefficients, Schur products, skew-Schur
 *        expansions and skew Kostka numbers.
 */

#include <cstddef>
#include <functional>
#include <map>
#include <set>

#include "symfn/partition.hpp"
#include "symfn/plactic.hpp"
#include "symfn/polynomial.hpp"
#include "symfn/tableau.hpp"

namespace symfn {

using Expansion = std::map<Partition, BigInt, std::greater<>>;

/// Skew tableaux of shape lambda/alpha and type beta with a Yamanouchi reading word.
inline BigInt lr_coefficient(const Partition& lambda, const Partition& alpha, const Partition& beta) {
    if (lambda.size() != alpha.size() + beta.size() || !contains(lambda, alpha)) return 0;
    BigInt count = 0;
    for (const auto& t : enumerate_ssyt(SkewShape{lambda, alpha}, beta.parts()))
        if (is_yamanouchi(reading_word(t))) ++count;
    return count;
}

/// Same count with the condition "reading word Knuth-equivalent to the reading word of t_beta".
inline BigInt lr_coefficient_knuth(const Partition& lambda, const Partition& alpha, const Partition& beta) {
    if (lambda.size() != alpha.size() + beta.size() || !contains(lambda, alpha)) return 0;
    const std::set<Word> cls = knuth_class(reading_word(unit_tableau(beta)));
    BigInt count = 0;
    for (const auto& t : enumerate_ssyt(SkewShape{lambda, alpha}, beta.parts()))
        if (cls.contains(reading_word(t))) ++count;
    return count;
}

/// s_alpha s_beta = sum over lambda of c^lambda_{alpha beta} s_lambda.
inline Expansion schur_product(const Partition& alpha, const Partition& beta) {
    Expansion out;
    for (const auto& lambda : partitions_of(alpha.size() + beta.size())) {
        BigInt c = lr_coefficient(lambda, alpha, beta);
        if (c != 0) out.emplace(lambda, c);
    }
    return out;
}

/// s_{lambda/alpha} = sum over beta of c^lambda_{alpha beta} s_beta.
inline Expansion skew_expansion(const SkewShape& s) {
    if (!contains(s.outer, s.inner)) throw domain_error("skew shape requires inner ⊆ outer");
    Expansion out;
    for (const auto& beta : partitions_of(s.size())) {
        BigInt c = lr_coefficient(s.outer, s.inner, beta);
        if (c != 0) out.emplace(beta, c);
    }
    return out;
}

struct SkewKostka {
    BigInt direct;  ///< skew tableaux of the shape and type, counted
    BigInt via_lr;  ///< sum over beta of c^lambda_{alpha beta} K_{beta mu}
    bool holds() const { return direct == via_lr; }
};

inline SkewKostka skew_kostka(const SkewShape& s, const std::vector<int>& mu) {
    if (!contains(s.outer, s.inner)) throw domain_error("skew shape requires inner ⊆ outer");
    SkewKostka k;
    k.direct = enumerate_ssyt(s, mu).size();
    for (const auto& [beta, c] : skew_expansion(s)) k.via_lr += c * kostka(beta, mu);
    return k;
}

}  // namespace symfn
