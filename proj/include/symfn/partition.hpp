#pragma once

/**
 * @file partition.hpp
 * @brief Integer partitions, Young diagrams and skew shapes.
 *
 * A Partition stores only its positive parts; any comparison that needs a
 * longer sequence pads with zeros on the fly. Enumeration is in
 * reverse-lexicographic order so every listing is deterministic.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "symfn/errors.hpp"

namespace symfn {

class Partition {
public:
    Partition() = default;

    /// Trailing zeros are dropped; throws if the parts increase or go negative.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw domain_error("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw domain_error("partition parts must be weakly decreasing");
        }
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// Zero-padded access, i is 0-based.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    /// Parts padded with zeros to length n (n must be >= length()).
    std::vector<int> padded(std::size_t n) const {
        std::vector<int> v(parts_);
        v.resize(std::max(n, parts_.size()), 0);
        return v;
    }

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

struct SkewShape {
    Partition outer;
    Partition inner;

    bool operator==(const SkewShape&) const = default;
    auto operator<=>(const SkewShape&) const = default;
    int size() const { return outer.size() - inner.size(); }
};

/// Arms and legs along the Durfee diagonal.
struct FrobeniusCoords {
    std::vector<int> arms;
    std::vector<int> legs;

    std::size_t rank() const noexcept { return arms.size(); }
    bool operator==(const FrobeniusCoords&) const = default;
};

inline Partition conjugate(const Partition& lambda) {
    std::vector<int> out;
    const int cols = lambda[0];
    out.reserve(static_cast<std::size_t>(cols));
    for (int j = 1; j <= cols; ++j) {
        int count = 0;
        for (int p : lambda.parts())
            if (p >= j) ++count;
        out.push_back(count);
    }
    return Partition(std::move(out));
}

/// Dominance order; false whenever the sizes differ.
inline bool dominates(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) return false;
    const std::size_t len = std::max(lambda.length(), mu.length());
    int a = 0, b = 0;
    for (std::size_t i = 0; i < len; ++i) {
        a += lambda[i];
        b += mu[i];
        if (a < b) return false;
    }
    return true;
}

/// Containment of Young diagrams: lambda ⊇ mu.
inline bool contains(const Partition& lambda, const Partition& mu) {
    if (mu.length() > lambda.length()) return false;
    for (std::size_t i = 0; i < mu.length(); ++i)
        if (lambda[i] < mu[i]) return false;
    return true;
}

inline SkewShape make_skew(Partition outer, Partition inner) {
    if (!contains(outer, inner))
        throw domain_error("skew shape requires inner ⊆ outer");
    return SkewShape{std::move(outer), std::move(inner)};
}

/// At most one box in every column.
inline bool is_horizontal_strip(const SkewShape& s) {
    if (!contains(s.outer, s.inner)) return false;
    const Partition oc = conjugate(s.outer);
    const Partition ic = conjugate(s.inner);
    for (std::size_t j = 0; j < oc.length(); ++j)
        if (oc[j] - ic[j] > 1) return false;
    return true;
}

/// At most one box in every row.
inline bool is_vertical_strip(const SkewShape& s) {
    if (!contains(s.outer, s.inner)) return false;
    for (std::size_t i = 0; i < s.outer.length(); ++i)
        if (s.outer[i] - s.inner[i] > 1) return false;
    return true;
}

inline FrobeniusCoords to_frobenius(const Partition& lambda) {
    const Partition conj = conjugate(lambda);
    FrobeniusCoords f;
    for (std::size_t i = 0; i < lambda.length() && lambda[i] > static_cast<int>(i); ++i) {
        f.arms.push_back(lambda[i] - static_cast<int>(i) - 1);
        f.legs.push_back(conj[i] - static_cast<int>(i) - 1);
    }
    return f;
}

inline Partition from_frobenius(const FrobeniusCoords& f) {
    const std::size_t d = f.rank();
    if (f.legs.size() != d) throw domain_error("Frobenius arms and legs differ in length");
    for (std::size_t i = 0; i < d; ++i) {
        if (f.arms[i] < 0 || f.legs[i] < 0) throw domain_error("negative Frobenius coordinate");
        if (i > 0 && (f.arms[i] >= f.arms[i - 1] || f.legs[i] >= f.legs[i - 1]))
            throw domain_error("Frobenius coordinates must strictly decrease");
    }
    if (d == 0) return {};
    // rows 1..d come from the arms; rows below the diagonal block from the legs
    const std::size_t rows = d + static_cast<std::size_t>(f.legs[0]);
    std::vector<int> parts(rows, 0);
    for (std::size_t i = 0; i < d; ++i) parts[i] = static_cast<int>(i) + 1 + f.arms[i];
    for (std::size_t r = d; r < rows; ++r) {
        int count = 0;
        for (std::size_t j = 0; j < d; ++j)
            if (static_cast<int>(j) + f.legs[j] >= static_cast<int>(r)) ++count;
        parts[r] = count;
    }
    return Partition(std::move(parts));
}

namespace detail {
inline void partitions_rec(int remaining, int max_part, std::size_t max_parts,
                           std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (cur.size() == max_parts) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, max_parts, cur, out);
        cur.pop_back();
    }
}
}  // namespace detail

/// All partitions of d with optional bounds, reverse-lexicographic.
inline std::vector<Partition> partitions_of(int d, std::optional<int> max_parts = std::nullopt,
                                            std::optional<int> max_part = std::nullopt) {
    if (d < 0) throw domain_error("partitions_of requires d >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    const std::size_t mp = max_parts ? static_cast<std::size_t>(std::max(*max_parts, 0))
                                     : static_cast<std::size_t>(d);
    detail::partitions_rec(d, max_part.value_or(d), mp, cur, out);
    return out;
}

/// Partitions contained in the rows x cols box, all sizes, ordered by size then reverse-lex.
inline std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    for (int d = 0; d <= rows * cols; ++d)
        for (auto& p : partitions_of(d, rows, cols)) out.push_back(std::move(p));
    return out;
}

enum class StripKind { horizontal, vertical };

namespace detail {
inline void strip_rec(const std::vector<int>& base, std::size_t row, int remaining,
                      StripKind kind, std::vector<int>& cur, std::vector<Partition>& out) {
    if (row == cur.size()) {
        if (remaining == 0) out.emplace_back(cur);
        return;
    }
    // horizontal strip: mu_i <= lambda_{i-1}; vertical strip: mu_i - lambda_i <= 1
    const int upper = row == 0 ? base[0] + remaining : base[row - 1];
    const int cap = kind == StripKind::horizontal ? upper : base[row] + 1;
    const int limit = std::min(cap, base[row] + remaining);
    for (int v = limit; v >= base[row]; --v) {
        if (row > 0 && v > cur[row - 1]) continue;
        cur[row] = v;
        strip_rec(base, row + 1, remaining - (v - base[row]), kind, cur, out);
    }
    cur[row] = base[row];
}
}  // namespace detail

/// All mu ⊇ lambda with mu/lambda a k-strip of the given kind and at most max_parts rows.
inline std::vector<Partition> strip_extensions(const Partition& lambda, int k, StripKind kind,
                                               int max_parts) {
    if (k < 0 || max_parts < 0) return {};
    if (static_cast<int>(lambda.length()) > max_parts) return {};
    std::vector<int> base = lambda.padded(static_cast<std::size_t>(max_parts));
    std::vector<int> cur = base;
    std::vector<Partition> out;
    if (max_parts == 0) {
        if (k == 0) out.emplace_back();
        return out;
    }
    detail::strip_rec(base, 0, k, kind, cur, out);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

/// The partitions obtained by removing one corner box.
inline std::vector<Partition> remove_one_box(const Partition& lambda) {
    std::vector<Partition> out;
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        if (lambda[i] > lambda[i + 1]) {
            std::vector<int> p = lambda.parts();
            --p[i];
            out.emplace_back(std::move(p));
        }
    }
    return out;
}

// ---- text forms -----------------------------------------------------------

inline std::string to_string(const Partition& p) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < p.length(); ++i) os << (i ? "," : "") << p[i];
    os << ']';
    return os.str();
}

inline std::string to_string(const SkewShape& s) {
    return to_string(s.outer) + "/" + to_string(s.inner);
}

inline std::string to_string(const FrobeniusCoords& f) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < f.arms.size(); ++i) os << (i ? "," : "") << f.arms[i];
    os << '|';
    for (std::size_t i = 0; i < f.legs.size(); ++i) os << (i ? "," : "") << f.legs[i];
    os << ')';
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const SkewShape& s) { return os << to_string(s); }

namespace detail {
inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

inline std::vector<int> parse_int_list(std::string_view s, char sep) {
    std::vector<int> out;
    s = trim(s);
    if (s.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        std::string_view tok = trim(s.substr(start, pos == std::string_view::npos ? s.size() - start : pos - start));
        if (tok.empty()) throw parse_error("empty list entry");
        int value = 0;
        bool neg = false;
        std::size_t i = 0;
        if (tok[0] == '-') { neg = true; i = 1; }
        if (i == tok.size()) throw parse_error("bad integer '" + std::string(tok) + "'");
        for (; i < tok.size(); ++i) {
            if (tok[i] < '0' || tok[i] > '9') throw parse_error("bad integer '" + std::string(tok) + "'");
            value = value * 10 + (tok[i] - '0');
        }
        out.push_back(neg ? -value : value);
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}
}  // namespace detail

/// Parses "[3,3,2,2]" (or "[]"); throws parse_error on malformed text.
inline Partition parse_partition(std::string_view text) {
    std::string_view s = detail::trim(text);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw parse_error("partition must be written as [a,b,...]");
    std::vector<int> parts = detail::parse_int_list(s.substr(1, s.size() - 2), ',');
    try {
        return Partition(std::move(parts));
    } catch (const domain_error& e) {
        throw parse_error(e.what());
    }
}

/// Parses "[outer]/[inner]"; a bare "[outer]" means an empty inner shape.
inline SkewShape parse_skew_shape(std::string_view text) {
    std::string_view s = detail::trim(text);
    const std::size_t slash = s.find('/');
    if (slash == std::string_view::npos) return SkewShape{parse_partition(s), {}};
    Partition outer = parse_partition(s.substr(0, slash));
    Partition inner = parse_partition(s.substr(slash + 1));
    if (!contains(outer, inner)) throw parse_error("skew shape requires inner ⊆ outer");
    return SkewShape{std::move(outer), std::move(inner)};
}

}  // namespace symfn
