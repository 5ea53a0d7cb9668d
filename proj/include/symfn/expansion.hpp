#pragma once

/**
 * @file expansion.hpp
 * @brief Conversions among the m, e, h and Schur bases.
 */

#include <cstddef>
#include <functional>
#include <map>

#include "symfn/errors.hpp"
#include "symfn/lattice_paths.hpp"
#include "symfn/littlewood_richardson.hpp"
#include "symfn/partition.hpp"
#include "symfn/polynomial.hpp"
#include "symfn/rsk.hpp"
#include "symfn/tableau.hpp"

namespace symfn {

/// Matrices with non-negative entries, row sums lambda and column sums mu.
inline BigInt count_M(const Partition& lambda, const Partition& mu) {
    BigInt n = 0;
    for_each_matrix(lambda.parts(), mu.parts(), false, [&](const IntMatrix&) { ++n; });
    return n;
}

/// The same count restricted to zero-one matrices.
inline BigInt count_N(const Partition& lambda, const Partition& mu) {
    BigInt n = 0;
    for_each_matrix(lambda.parts(), mu.parts(), true, [&](const IntMatrix&) { ++n; });
    return n;
}

inline Expansion h_in_m(const Partition& lambda) {
    Expansion out;
    for (const auto& mu : partitions_of(lambda.size()))
        if (BigInt c = count_M(lambda, mu); c != 0) out.emplace(mu, c);
    return out;
}

inline Expansion e_in_m(const Partition& lambda) {
    Expansion out;
    for (const auto& mu : partitions_of(lambda.size()))
        if (BigInt c = count_N(lambda, mu); c != 0) out.emplace(mu, c);
    return out;
}

/// h_mu = sum over lambda of K_{lambda mu} s_lambda.
inline Expansion h_in_s(const Partition& mu) {
    Expansion out;
    for (const auto& lambda : partitions_of(mu.size()))
        if (BigInt c = kostka(lambda, mu); c != 0) out.emplace(lambda, c);
    return out;
}

/// e_mu = sum over lambda of K_{lambda' mu} s_lambda.
inline Expansion e_in_s(const Partition& mu) {
    Expansion out;
    for (const auto& lambda : partitions_of(mu.size()))
        if (BigInt c = kostka(conjugate(lambda), mu); c != 0) out.emplace(lambda, c);
    return out;
}

namespace detail {

inline void check_symmetric_homogeneous(const Polynomial& p) {
    if (!is_symmetric(p)) throw domain_error("expected a symmetric polynomial");
    if (!p.is_homogeneous()) throw domain_error("expected a homogeneous polynomial");
}

// Greedy lex-leading-term subtraction against a family whose member for lambda leads with x^lambda.
template <class Basis>
Expansion peel_leading(Polynomial p, Basis&& basis) {
    check_symmetric_homogeneous(p);
    Expansion out;
    std::size_t guard = 0;
    while (!p.is_zero()) {
        const auto& [alpha, c] = p.leading_term();
        const BigInt coeff = c;
        const Partition lambda = shape_of(alpha);
        if (lambda.padded(alpha.size()) != alpha) throw internal_fault("leading exponent of a symmetric polynomial is not a partition");
        p -= basis(lambda) * coeff;
        out[lambda] += coeff;
        if (++guard > 100000) throw internal_fault("basis decomposition did not terminate");
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace detail

/// Coefficients in the monomial basis.
inline Expansion to_m_basis(const Polynomial& p) {
    const int n = p.nvars();
    return detail::peel_leading(p, [n](const Partition& l) { return m_poly(l, n); });
}

/// Unique integer coefficients of p in the Schur basis in its n variables.
inline Expansion to_schur_basis(const Polynomial& p) {
    const int n = p.nvars();
    std::map<Partition, Polynomial> cache;
    return detail::peel_leading(p, [&](const Partition& l) -> const Polynomial& {
        auto it = cache.find(l);
        if (it == cache.end()) it = cache.emplace(l, schur_tableaux(l, n)).first;
        return it->second;
    });
}

namespace detail {

// Solve s = sum_mu a_mu sum_lambda K_{shift(lambda), mu} s_lambda by unitriangularity.
// Only Schur functions with at most n rows survive in n variables, so mu runs
// over the partitions whose diagonal term s_{shift(mu)} has at most n rows.
inline Expansion solve_kostka_system(const Expansion& schur, int d, int n, bool conjugated) {
    Expansion a;
    auto parts = partitions_of(d);
    // ascending lex is a linear extension of dominance from below
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        const Partition& nu = *it;
        const Partition lambda = conjugated ? conjugate(nu) : nu;
        if (lambda.length() > static_cast<std::size_t>(n)) continue;
        auto f = schur.find(lambda);
        BigInt c = f == schur.end() ? BigInt(0) : f->second;
        for (const auto& [mu, am] : a) c -= am * kostka(nu, mu);
        if (c != 0) a.emplace(nu, c);
    }
    return a;
}

}  // namespace detail

/// Coefficients in the basis h_mu, mu with at most n parts.
inline Expansion to_h_basis(const Polynomial& p) {
    const auto s = to_schur_basis(p);
    const auto d = p.degree();
    return d ? detail::solve_kostka_system(s, *d, p.nvars(), false) : Expansion{};
}

/// Coefficients in the basis e_mu, mu with largest part at most n.
inline Expansion to_e_basis(const Polynomial& p) {
    const auto s = to_schur_basis(p);
    const auto d = p.degree();
    return d ? detail::solve_kostka_system(s, *d, p.nvars(), true) : Expansion{};
}

/// Checks s_{(j+1, 1^k)} = sum_l (-1)^l h_{j+l+1} e_{k-l} in j+k+1 variables.
struct HookAudit {
    Polynomial schur;
    Polynomial alternating_sum;
    bool holds() const { return schur == alternating_sum; }
};

inline HookAudit hook_via_he(int j, int k) {
    if (j < 0 || k < 0) throw domain_error("hook arm and leg must be non-negative");
    const int n = j + k + 1;
    std::vector<int> parts{j + 1};
    parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
    return {schur_tableaux(Partition(parts), n), hook_schur(j, k, n)};
}

inline Polynomial from_expansion(const Expansion& e, int n, const std::function<Polynomial(const Partition&)>& basis) {
    Polynomial p(n);
    for (const auto& [lambda, c] : e) p += basis(lambda) * c;
    return p;
}

inline std::string to_string(const Expansion& e, std::string_view basis = "s") {
    std::string out;
    for (const auto& [lambda, c] : e) out += std::string(basis) + to_string(lambda) + " " + c.str() + "\n";
    return out;
}

}  // namespace symfn
