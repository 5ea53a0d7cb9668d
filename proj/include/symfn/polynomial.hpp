#pragma once

/**
 * @file polynomial.hpp
 * @brief Sparse multivariate polynomials with arbitrary-precision integer
 *        coefficients in a fixed number of variables.
 *
 * Terms are kept in a map ordered by descending lexicographic exponent
 * vector, so iteration order is display order and the first term is the
 * leading term used by long division and by Schur-basis decomposition.
 */

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "symfn/errors.hpp"
#include "symfn/partition.hpp"

namespace symfn {

using BigInt = boost::multiprecision::cpp_int;

/// x^alpha as (alpha_1, ..., alpha_n).
using Exponents = std::vector<int>;

/// A word over {1..n}; letters are stored as ints.
using Word = std::vector<int>;

/// Sorting an exponent vector gives its shape.
inline Partition shape_of(const Exponents& alpha) {
    Exponents v(alpha);
    std::sort(v.begin(), v.end(), std::greater<>());
    return Partition(std::move(v));
}

class Polynomial {
public:
    using TermMap = std::map<Exponents, BigInt, std::greater<>>;

    explicit Polynomial(int nvars = 0) : nvars_(nvars) {
        if (nvars < 0) throw domain_error("negative variable count");
    }

    static Polynomial constant(int nvars, const BigInt& c) {
        Polynomial p(nvars);
        p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), c);
        return p;
    }
    static Polynomial one(int nvars) { return constant(nvars, 1); }

    static Polynomial monomial(Exponents alpha, const BigInt& c = 1) {
        Polynomial p(static_cast<int>(alpha.size()));
        p.add_term(alpha, c);
        return p;
    }

    /// x_i for 1-based i.
    static Polynomial variable(int nvars, int i) {
        if (i < 1 || i > nvars) throw domain_error("variable index out of range");
        Exponents e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(i - 1)] = 1;
        return monomial(std::move(e));
    }

    int nvars() const noexcept { return nvars_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    const TermMap& terms() const noexcept { return terms_; }

    BigInt coefficient(const Exponents& alpha) const {
        auto it = terms_.find(alpha);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    void add_term(const Exponents& alpha, const BigInt& c) {
        if (static_cast<int>(alpha.size()) != nvars_)
            throw domain_error("exponent vector length does not match variable count");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(alpha, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Leading term under lex order; throws on the zero polynomial.
    const std::pair<const Exponents, BigInt>& leading_term() const {
        if (terms_.empty()) throw domain_error("zero polynomial has no leading term");
        return *terms_.begin();
    }

    std::optional<int> degree() const {
        if (terms_.empty()) return std::nullopt;
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
        return d;
    }

    bool is_homogeneous() const {
        std::optional<int> d;
        for (const auto& [e, c] : terms_) {
            const int td = std::accumulate(e.begin(), e.end(), 0);
            if (d && *d != td) return false;
            d = td;
        }
        return true;
    }

    /// Interchange x_i and x_j (1-based).
    Polynomial swapped(int i, int j) const {
        Polynomial out(nvars_);
        for (const auto& [e, c] : terms_) {
            Exponents f(e);
            std::swap(f[static_cast<std::size_t>(i - 1)], f[static_cast<std::size_t>(j - 1)]);
            out.terms_.emplace(std::move(f), c);
        }
        return out;
    }

    /// Substitute x_n = 0, giving a polynomial in n-1 variables.
    Polynomial drop_last_variable() const {
        if (nvars_ == 0) throw domain_error("no variable to drop");
        Polynomial out(nvars_ - 1);
        for (const auto& [e, c] : terms_)
            if (e.back() == 0) out.terms_.emplace(Exponents(e.begin(), e.end() - 1), c);
        return out;
    }

    /// Same polynomial viewed in more variables (new ones absent).
    Polynomial extended(int nvars) const {
        if (nvars < nvars_) throw domain_error("cannot shrink variable count");
        Polynomial out(nvars);
        for (const auto& [e, c] : terms_) {
            Exponents f(e);
            f.resize(static_cast<std::size_t>(nvars), 0);
            out.terms_.emplace(std::move(f), c);
        }
        return out;
    }

    Polynomial& operator+=(const Polynomial& q) {
        check_same(q);
        for (const auto& [e, c] : q.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& q) {
        check_same(q);
        for (const auto& [e, c] : q.terms_) add_term(e, -c);
        return *this;
    }
    Polynomial& operator*=(const BigInt& s) {
        if (s == 0) {
            terms_.clear();
        } else {
            for (auto& [e, c] : terms_) c *= s;
        }
        return *this;
    }

    friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
    friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
    friend Polynomial operator-(Polynomial p) {
        for (auto& [e, c] : p.terms_) c = -c;
        return p;
    }
    friend Polynomial operator*(Polynomial p, const BigInt& s) { return p *= s; }
    friend Polynomial operator*(const BigInt& s, Polynomial p) { return p *= s; }

    friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
        p.check_same(q);
        Polynomial out(p.nvars_);
        Exponents e(static_cast<std::size_t>(p.nvars_));
        for (const auto& [a, ca] : p.terms_) {
            for (const auto& [b, cb] : q.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] + b[i];
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }
    Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

    bool operator==(const Polynomial& q) const { return nvars_ == q.nvars_ && terms_ == q.terms_; }

private:
    void check_same(const Polynomial& q) const {
        if (nvars_ != q.nvars_) throw domain_error("polynomials live in different variable counts");
    }

    int nvars_;
    TermMap terms_;
};

inline Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

inline Polynomial pow(const Polynomial& p, int k) {
    Polynomial out = Polynomial::one(p.nvars());
    for (int i = 0; i < k; ++i) out *= p;
    return out;
}

/// Exact quotient p / q by lex long division; division_error on a remainder.
inline Polynomial exact_div(const Polynomial& p, const Polynomial& q) {
    if (p.nvars() != q.nvars()) throw domain_error("polynomials live in different variable counts");
    if (q.is_zero()) throw division_error("division by the zero polynomial");
    const auto& [lead_e, lead_c] = q.leading_term();
    Polynomial quotient(p.nvars());
    Polynomial rem = p;
    Exponents e(lead_e.size());
    while (!rem.is_zero()) {
        const auto& [re, rc] = rem.leading_term();
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] = re[i] - lead_e[i];
            if (e[i] < 0) throw division_error("polynomial is not divisible: leading monomial mismatch");
        }
        if (rc % lead_c != 0) throw division_error("polynomial is not divisible: coefficient mismatch");
        const Polynomial t = Polynomial::monomial(e, rc / lead_c);
        quotient += t;
        rem -= t * q;
    }
    return quotient;
}

/// Invariance under every adjacent transposition of variables.
inline bool is_symmetric(const Polynomial& p) {
    for (int i = 1; i < p.nvars(); ++i)
        if (!(p.swapped(i, i + 1) == p)) return false;
    return true;
}

/// Sign reversal under every adjacent transposition of variables.
inline bool is_alternating(const Polynomial& p) {
    for (int i = 1; i < p.nvars(); ++i)
        if (!(p.swapped(i, i + 1) == -p)) return false;
    return true;
}

namespace detail {
/// Visits every distinct rearrangement of an exponent vector.
template <class F>
void for_each_rearrangement(Exponents v, F&& f) {
    std::sort(v.begin(), v.end());
    do {
        f(v);
    } while (std::next_permutation(v.begin(), v.end()));
}

template <class F>
void for_each_composition(int total, std::size_t parts, Exponents& cur, std::size_t idx, F& f) {
    if (idx + 1 == parts) {
        cur[idx] = total;
        f(cur);
        return;
    }
    for (int v = total; v >= 0; --v) {
        cur[idx] = v;
        for_each_composition(total - v, parts, cur, idx + 1, f);
    }
}
}  // namespace detail

/// Calls f on every weak composition of total into `parts` parts.
template <class F>
void for_each_composition(int total, std::size_t parts, F&& f) {
    if (parts == 0) {
        if (total == 0) {
            Exponents empty;
            f(empty);
        }
        return;
    }
    Exponents cur(parts, 0);
    detail::for_each_composition(total, parts, cur, 0, f);
}

/// Monomial symmetric polynomial m_lambda in n variables.
inline Polynomial m_poly(const Partition& lambda, int n) {
    Polynomial p(n);
    if (static_cast<int>(lambda.length()) > n) return p;
    detail::for_each_rearrangement(lambda.padded(static_cast<std::size_t>(n)),
                                   [&](const Exponents& e) { p.add_term(e, 1); });
    return p;
}

/// Elementary symmetric polynomial e_k; zero for k < 0 or k > n.
inline Polynomial e_poly(int k, int n) {
    Polynomial p(n);
    if (k < 0 || k > n) return p;
    Exponents e(static_cast<std::size_t>(n), 0);
    std::fill(e.begin(), e.begin() + k, 1);
    detail::for_each_rearrangement(e, [&](const Exponents& v) { p.add_term(v, 1); });
    return p;
}

/// Complete homogeneous symmetric polynomial h_k; zero for k < 0.
inline Polynomial h_poly(int k, int n) {
    Polynomial p(n);
    if (k < 0) return p;
    if (n == 0) return k == 0 ? Polynomial::one(0) : p;
    for_each_composition(k, static_cast<std::size_t>(n), [&](const Exponents& e) { p.add_term(e, 1); });
    return p;
}

inline Polynomial e_mu(const Partition& mu, int n) {
    Polynomial p = Polynomial::one(n);
    for (int part : mu.parts()) p *= e_poly(part, n);
    return p;
}

inline Polynomial h_mu(const Partition& mu, int n) {
    Polynomial p = Polynomial::one(n);
    for (int part : mu.parts()) p *= h_poly(part, n);
    return p;
}

/// x^w = x_{a1} x_{a2} ... x_{ak}.
inline Polynomial word_weight(const Word& w, int n) {
    Exponents e(static_cast<std::size_t>(n), 0);
    for (int a : w) {
        if (a < 1 || a > n) throw domain_error("word letter outside 1..n");
        ++e[static_cast<std::size_t>(a - 1)];
    }
    return Polynomial::monomial(std::move(e));
}

inline std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        BigInt mag = c;
        if (first) {
            if (c < 0) {
                os << '-';
                mag = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) mag = -c;
        }
        first = false;
        os << mag;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*x" << (i + 1);
            if (e[i] != 1) os << '^' << e[i];
        }
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

}  // namespace symfn
