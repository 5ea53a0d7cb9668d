#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "symfn/errors.hpp"

namespace symfn {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Sign of a permutation of 0..n-1 given in one-line notation.
inline int permutation_sign(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

namespace detail {

template <class T>
T det_permutation_sum(const Matrix<T>& m, const T& zero, const T& one) {
    const std::size_t n = m.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    T total = zero;
    do {
        T term = one;
        bool vanished = false;
        for (std::size_t i = 0; i < n && !vanished; ++i) {
            const T& entry = m[i][static_cast<std::size_t>(perm[i])];
            if (entry == zero) vanished = true;
            else term = term * entry;
        }
        if (vanished) continue;
        if (permutation_sign(perm) > 0) total = total + term;
        else total = total - term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

template <class T>
T det_cofactor(const Matrix<T>& m, const T& zero, const T& one) {
    const std::size_t n = m.size();
    if (n <= 5) return det_permutation_sum(m, zero, one);
    T total = zero;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == zero) continue;
        Matrix<T> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<T> row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        T term = m[0][j] * det_cofactor(minor, zero, one);
        if (j % 2 == 0) total = total + term;
        else total = total - term;
    }
    return total;
}

}  // namespace detail

/**
 * Exact determinant over a commutative ring: permutation sum up to 5x5,
 * first-row cofactor expansion beyond. `zero` and `one` are the ring's
 * identities (they carry e.g. the variable count of a polynomial ring).
 */
template <class T>
T determinant(const Matrix<T>& m, const T& zero, const T& one) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw domain_error("determinant of a non-square matrix");
    if (m.empty()) return one;
    return detail::det_cofactor(m, zero, one);
}

}  // namespace symfn
