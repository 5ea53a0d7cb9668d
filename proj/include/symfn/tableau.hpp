#pragma once

/**
 * @file tableau.hpp
 * @brief Semistandard tableaux, skew tableaux, reading words and Schensted
 *        row insertion / deletion.
 *
 * Rows are stored top row first. Row indices in this API are 0-based.
 */

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symfn/errors.hpp"
#include "symfn/partition.hpp"
#include "symfn/polynomial.hpp"

namespace symfn {

using Row = std::vector<int>;

namespace detail {
inline bool rows_semistandard(const std::vector<Row>& rows) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].empty()) return false;
        if (r > 0 && rows[r].size() > rows[r - 1].size()) return false;
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (rows[r][c] < 1) return false;
            if (c > 0 && rows[r][c] < rows[r][c - 1]) return false;
            if (r > 0 && rows[r][c] <= rows[r - 1][c]) return false;
        }
    }
    return true;
}
}  // namespace detail

class Tableau {
public:
    Tableau() = default;

    explicit Tableau(std::vector<Row> rows) : rows_(std::move(rows)) {
        if (!detail::rows_semistandard(rows_)) throw domain_error("not a semistandard tableau");
    }
    Tableau(std::initializer_list<Row> rows) : Tableau(std::vector<Row>(rows)) {}

    /// Non-throwing construction.
    static std::optional<Tableau> make(std::vector<Row> rows) {
        if (!detail::rows_semistandard(rows)) return std::nullopt;
        Tableau t;
        t.rows_ = std::move(rows);
        return t;
    }

    const std::vector<Row>& rows() const noexcept { return rows_; }
    bool empty() const noexcept { return rows_.empty(); }

    int size() const noexcept {
        int s = 0;
        for (const auto& r : rows_) s += static_cast<int>(r.size());
        return s;
    }

    Partition shape() const {
        std::vector<int> s;
        for (const auto& r : rows_) s.push_back(static_cast<int>(r.size()));
        return Partition(std::move(s));
    }

    int max_entry() const noexcept {
        int m = 0;
        for (const auto& r : rows_)
            if (!r.empty()) m = std::max(m, r.back());
        return m;
    }

    /// Letter multiplicities (type), length = max(n, largest letter).
    std::vector<int> content(int n = 0) const {
        std::vector<int> c(static_cast<std::size_t>(std::max(n, max_entry())), 0);
        for (const auto& r : rows_)
            for (int a : r) ++c[static_cast<std::size_t>(a - 1)];
        return c;
    }

    bool operator==(const Tableau&) const = default;
    auto operator<=>(const Tableau&) const = default;

private:
    std::vector<Row> rows_;
};

/// A semistandard filling of lambda/mu; row r holds outer[r] - inner[r] entries.
class SkewTableau {
public:
    SkewTableau() = default;

    SkewTableau(SkewShape shape, std::vector<Row> rows) : shape_(std::move(shape)), rows_(std::move(rows)) {
        if (!valid()) throw domain_error("not a semistandard skew tableau");
    }

    static std::optional<SkewTableau> make(SkewShape shape, std::vector<Row> rows) {
        SkewTableau t;
        t.shape_ = std::move(shape);
        t.rows_ = std::move(rows);
        if (!t.valid()) return std::nullopt;
        return t;
    }

    const SkewShape& shape() const noexcept { return shape_; }
    const std::vector<Row>& rows() const noexcept { return rows_; }

    /// Entry at (r, c) in diagram coordinates, 0 for inner cells.
    int at(std::size_t r, std::size_t c) const {
        const std::size_t off = static_cast<std::size_t>(shape_.inner[r]);
        return c < off ? 0 : rows_[r][c - off];
    }

    /// Only meaningful when the inner shape is empty.
    Tableau to_tableau() const {
        if (!shape_.inner.empty()) throw domain_error("skew tableau has a nonempty inner shape");
        std::vector<Row> rows;
        for (const auto& r : rows_)
            if (!r.empty()) rows.push_back(r);
        return Tableau(std::move(rows));
    }

    std::vector<int> content(int n = 0) const {
        int m = n;
        for (const auto& r : rows_)
            for (int a : r) m = std::max(m, a);
        std::vector<int> c(static_cast<std::size_t>(m), 0);
        for (const auto& r : rows_)
            for (int a : r) ++c[static_cast<std::size_t>(a - 1)];
        return c;
    }

    bool operator==(const SkewTableau&) const = default;

private:
    bool valid() const {
        if (!contains(shape_.outer, shape_.inner)) return false;
        if (rows_.size() != shape_.outer.length()) return false;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (static_cast<int>(rows_[r].size()) != shape_.outer[r] - shape_.inner[r]) return false;
            for (std::size_t i = 0; i < rows_[r].size(); ++i) {
                if (rows_[r][i] < 1) return false;
                if (i > 0 && rows_[r][i] < rows_[r][i - 1]) return false;
            }
            if (r == 0) continue;
            const std::size_t lo = static_cast<std::size_t>(shape_.inner[r]);
            const std::size_t hi = static_cast<std::size_t>(shape_.outer[r]);
            for (std::size_t c = lo; c < hi; ++c) {
                const int above = at(r - 1, c);
                if (above != 0 && at(r, c) <= above) return false;
            }
        }
        return true;
    }

    SkewShape shape_;
    std::vector<Row> rows_;
};

inline SkewTableau as_skew(const Tableau& t) {
    return SkewTableau(SkewShape{t.shape(), {}}, t.rows());
}

/// Rows strictly increase and columns weakly increase; the transpose is semistandard.
class DualTableau {
public:
    DualTableau() = default;

    explicit DualTableau(std::vector<Row> rows) : rows_(std::move(rows)) {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (rows_[r].empty() || (r > 0 && rows_[r].size() > rows_[r - 1].size()))
                throw domain_error("dual tableau rows must have weakly decreasing lengths");
            for (std::size_t c = 0; c < rows_[r].size(); ++c) {
                if (c > 0 && rows_[r][c] <= rows_[r][c - 1]) throw domain_error("dual tableau rows must strictly increase");
                if (r > 0 && rows_[r][c] < rows_[r - 1][c]) throw domain_error("dual tableau columns must weakly increase");
            }
        }
    }

    const std::vector<Row>& rows() const noexcept { return rows_; }

    Partition shape() const {
        std::vector<int> s;
        for (const auto& r : rows_) s.push_back(static_cast<int>(r.size()));
        return Partition(std::move(s));
    }

    Tableau transpose() const {
        std::vector<Row> cols;
        for (std::size_t c = 0; !rows_.empty() && c < rows_[0].size(); ++c) {
            Row col;
            for (const auto& r : rows_)
                if (c < r.size()) col.push_back(r[c]);
            cols.push_back(std::move(col));
        }
        return Tableau(std::move(cols));
    }

    bool operator==(const DualTableau&) const = default;
    auto operator<=>(const DualTableau&) const = default;

private:
    std::vector<Row> rows_;
};

// ---- reading words ---------------------------------------------------------

/// Rows left to right, bottom row first.
inline Word reading_word(const Tableau& t) {
    Word w;
    for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it) w.insert(w.end(), it->begin(), it->end());
    return w;
}

inline Word reading_word(const SkewTableau& t) {
    Word w;
    for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it) w.insert(w.end(), it->begin(), it->end());
    return w;
}

/// Cut at descents and stack the segments right to left; nullopt if not a tableau.
inline std::optional<Tableau> word_to_tableau(const Word& w) {
    std::vector<Row> segments;
    Row cur;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0 && w[i] < w[i - 1]) {
            segments.push_back(std::move(cur));
            cur.clear();
        }
        cur.push_back(w[i]);
    }
    if (!cur.empty()) segments.push_back(std::move(cur));
    std::reverse(segments.begin(), segments.end());
    return Tableau::make(std::move(segments));
}

// ---- Schensted insertion ----------------------------------------------------

struct RowInsertion {
    std::optional<int> bumped;
    Row row;
};

/// Insert x into a weakly increasing row; bumps the leftmost entry > x.
inline RowInsertion row_insert(Row row, int x) {
    if (!std::is_sorted(row.begin(), row.end())) throw domain_error("row_insert needs a weakly increasing row");
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
        row.push_back(x);
        return {std::nullopt, std::move(row)};
    }
    const int bumped = *it;
    *it = x;
    return {bumped, std::move(row)};
}

struct InsertResult {
    Tableau tableau;
    std::size_t row;  ///< row (0-based) that received the new box
};

inline InsertResult insert_with_row(const Tableau& t, int x) {
    if (x < 1) throw domain_error("letters must be positive");
    std::vector<Row> rows = t.rows();
    std::optional<int> carry = x;
    std::size_t r = 0;
    for (; carry && r < rows.size(); ++r) {
        RowInsertion ins = row_insert(std::move(rows[r]), *carry);
        rows[r] = std::move(ins.row);
        carry = ins.bumped;
        if (!carry) break;
    }
    if (carry) {
        rows.push_back(Row{*carry});
        r = rows.size() - 1;
    }
    auto result = Tableau::make(std::move(rows));
    if (!result) throw internal_fault("insertion produced a non-semistandard tableau");
    return {std::move(*result), r};
}

inline Tableau insert(const Tableau& t, int x) { return insert_with_row(t, x).tableau; }

/// Inverse of insertion: remove the last box of row r (0-based) and reverse-bump upward.
inline std::pair<Tableau, int> remove(const Tableau& t, std::size_t r) {
    std::vector<Row> rows = t.rows();
    if (r >= rows.size()) throw domain_error("DELETE row index out of range");
    if (r + 1 < rows.size() && rows[r + 1].size() == rows[r].size())
        throw domain_error("DELETE row does not end in a corner");
    int carry = rows[r].back();
    rows[r].pop_back();
    if (rows[r].empty()) rows.pop_back();
    for (std::size_t i = r; i-- > 0;) {
        Row& row = rows[i];
        // rightmost entry strictly below the carried letter
        auto it = std::lower_bound(row.begin(), row.end(), carry);
        if (it == row.begin()) throw internal_fault("reverse bump found no smaller entry");
        --it;
        std::swap(*it, carry);
    }
    auto result = Tableau::make(std::move(rows));
    if (!result) throw internal_fault("deletion produced a non-semistandard tableau");
    return {std::move(*result), carry};
}

/// Left fold of insert over the word.
inline Tableau p_tableau(const Word& w) {
    Tableau t;
    for (int a : w) t = insert(t, a);
    return t;
}

/// Dual insertion: x bumps the leftmost entry >= x.
inline DualTableau p_star_tableau(const Word& w) {
    std::vector<Row> rows;
    for (int a : w) {
        if (a < 1) throw domain_error("letters must be positive");
        int carry = a;
        bool placed = false;
        for (auto& row : rows) {
            auto it = std::lower_bound(row.begin(), row.end(), carry);
            if (it == row.end()) {
                row.push_back(carry);
                placed = true;
                break;
            }
            std::swap(*it, carry);
        }
        if (!placed) rows.push_back(Row{carry});
    }
    return DualTableau(std::move(rows));
}

// ---- enumeration -----------------------------------------------------------

namespace detail {

struct FillState {
    const SkewShape* shape;
    std::vector<std::vector<int>> grid;  // 0 = inner / unfilled
    std::vector<int> remaining;          // per-letter budget (type constraint)
    bool typed;
    int max_letter;
};

template <class F>
void fill_cells(FillState& st, std::size_t r, std::size_t c, F& emit) {
    const SkewShape& s = *st.shape;
    if (r == s.outer.length()) {
        if (st.typed && std::any_of(st.remaining.begin(), st.remaining.end(), [](int v) { return v != 0; })) return;
        emit(st.grid);
        return;
    }
    if (c == static_cast<std::size_t>(s.outer[r])) {
        fill_cells(st, r + 1, static_cast<std::size_t>(s.inner[r + 1]), emit);
        return;
    }
    int lo = 1;
    if (c > static_cast<std::size_t>(s.inner[r])) lo = std::max(lo, st.grid[r][c - 1]);
    if (r > 0 && st.grid[r - 1][c] != 0) lo = std::max(lo, st.grid[r - 1][c] + 1);
    for (int v = lo; v <= st.max_letter; ++v) {
        if (st.typed) {
            if (st.remaining[static_cast<std::size_t>(v - 1)] == 0) continue;
            --st.remaining[static_cast<std::size_t>(v - 1)];
        }
        st.grid[r][c] = v;
        fill_cells(st, r, c + 1, emit);
        st.grid[r][c] = 0;
        if (st.typed) ++st.remaining[static_cast<std::size_t>(v - 1)];
    }
}

inline std::vector<SkewTableau> enumerate_skew(const SkewShape& shape, const std::vector<int>* type, int max_letter) {
    if (!contains(shape.outer, shape.inner)) throw domain_error("skew shape requires inner ⊆ outer");
    std::vector<SkewTableau> out;
    if (type) {
        int total = 0;
        for (int v : *type) {
            if (v < 0) throw domain_error("negative type entry");
            total += v;
        }
        if (total != shape.size()) return out;
    }
    FillState st{&shape, {}, type ? *type : std::vector<int>{}, type != nullptr,
                 type ? static_cast<int>(type->size()) : max_letter};
    for (std::size_t r = 0; r < shape.outer.length(); ++r)
        st.grid.emplace_back(static_cast<std::size_t>(shape.outer[r]), 0);
    auto emit = [&](const std::vector<std::vector<int>>& grid) {
        std::vector<Row> rows;
        for (std::size_t r = 0; r < grid.size(); ++r)
            rows.emplace_back(grid[r].begin() + shape.inner[r], grid[r].end());
        out.emplace_back(shape, std::move(rows));
    };
    if (shape.outer.length() == 0) {
        out.emplace_back(shape, std::vector<Row>{});
        return out;
    }
    fill_cells(st, 0, static_cast<std::size_t>(shape.inner[0]), emit);
    std::sort(out.begin(), out.end(), [](const SkewTableau& a, const SkewTableau& b) {
        return reading_word(a) < reading_word(b);
    });
    return out;
}

inline std::vector<Tableau> to_tableaux(const std::vector<SkewTableau>& skew) {
    std::vector<Tableau> out;
    out.reserve(skew.size());
    for (const auto& t : skew) out.push_back(t.to_tableau());
    return out;
}

}  // namespace detail

/// Semistandard skew tableaux of the given type, ordered by reading word.
inline std::vector<SkewTableau> enumerate_ssyt(const SkewShape& shape, const std::vector<int>& type) {
    return detail::enumerate_skew(shape, &type, 0);
}

/// Semistandard skew tableaux with entries in 1..n, ordered by reading word.
inline std::vector<SkewTableau> enumerate_ssyt(const SkewShape& shape, int n) {
    return detail::enumerate_skew(shape, nullptr, n);
}

inline std::vector<Tableau> enumerate_ssyt(const Partition& shape, const std::vector<int>& type) {
    return detail::to_tableaux(enumerate_ssyt(SkewShape{shape, {}}, type));
}

inline std::vector<Tableau> enumerate_ssyt(const Partition& shape, int n) {
    return detail::to_tableaux(enumerate_ssyt(SkewShape{shape, {}}, n));
}

/// Kostka number: chains of horizontal strips of sizes mu_1, mu_2, ... ending at lambda.
inline BigInt kostka(const Partition& lambda, const std::vector<int>& mu) {
    int total = 0;
    for (int v : mu) {
        if (v < 0) throw domain_error("negative type entry");
        total += v;
    }
    if (total != lambda.size()) return 0;
    // memo over intermediate shapes, built letter by letter
    std::map<Partition, BigInt> layer{{Partition{}, BigInt(1)}};
    const int rows = static_cast<int>(lambda.length());
    for (int part : mu) {
        std::map<Partition, BigInt> next;
        for (const auto& [shape, count] : layer) {
            for (const auto& ext : strip_extensions(shape, part, StripKind::horizontal, rows))
                if (contains(lambda, ext)) next[ext] += count;
        }
        layer = std::move(next);
    }
    auto it = layer.find(lambda);
    return it == layer.end() ? BigInt(0) : it->second;
}

inline BigInt kostka(const Partition& lambda, const Partition& mu) { return kostka(lambda, mu.parts()); }

/// Standard tableau count K_{lambda,(1^n)}.
inline BigInt f_number(const Partition& lambda) {
    return kostka(lambda, std::vector<int>(static_cast<std::size_t>(lambda.size()), 1));
}

/**
 * The tableau built by the constructive proof of Kostka triangularity: the
 * largest letter m fills the bottom box of each of the lambda_{i+1} leftmost
 * columns plus the rightmost mu_m - lambda_{i+1} boxes of row i, where i is
 * the last row of length >= mu_m; then recurse on the unfilled shape.
 */
inline Tableau canonical_tableau(const Partition& lambda, const Partition& mu) {
    if (!dominates(lambda, mu)) throw domain_error("canonical tableau requires lambda to dominate mu");
    const std::size_t rows = lambda.length();
    std::vector<Row> grid;
    for (std::size_t r = 0; r < rows; ++r) grid.emplace_back(static_cast<std::size_t>(lambda[r]), 0);
    std::vector<int> eta = lambda.padded(rows + 1);
    for (std::size_t m = mu.length(); m-- > 0;) {
        const int letter = static_cast<int>(m) + 1;
        const int need = mu[m];
        std::size_t i = 0;
        bool found = false;
        for (std::size_t r = 0; r < rows; ++r)
            if (eta[r] >= need) { i = r; found = true; }
        if (!found) throw internal_fault("canonical tableau lost dominance");
        for (std::size_t r = i + 1; r < rows; ++r) {
            for (int c = eta[r + 1]; c < eta[r]; ++c) grid[r][static_cast<std::size_t>(c)] = letter;
        }
        const int from_row_i = need - eta[i + 1];
        for (int c = eta[i] - from_row_i; c < eta[i]; ++c) grid[i][static_cast<std::size_t>(c)] = letter;
        const int new_i = eta[i] - need + eta[i + 1];
        for (std::size_t r = i + 1; r < rows; ++r) eta[r] = eta[r + 1];
        eta[i] = new_i;
    }
    auto t = Tableau::make(std::move(grid));
    if (!t) throw internal_fault("canonical tableau is not semistandard");
    return std::move(*t);
}

/// The unique tableau of shape and type lambda (row i filled with i).
inline Tableau unit_tableau(const Partition& lambda) {
    std::vector<Row> rows;
    for (std::size_t r = 0; r < lambda.length(); ++r)
        rows.emplace_back(static_cast<std::size_t>(lambda[r]), static_cast<int>(r) + 1);
    return Tableau(std::move(rows));
}

/// x^t summed over semistandard (skew) tableaux with entries <= n.
inline Polynomial schur_tableaux(const SkewShape& shape, int n) {
    Polynomial p(n);
    for (const auto& t : enumerate_ssyt(shape, n)) {
        Exponents e(static_cast<std::size_t>(n), 0);
        for (const auto& r : t.rows())
            for (int a : r) ++e[static_cast<std::size_t>(a - 1)];
        p.add_term(e, 1);
    }
    return p;
}

inline Polynomial schur_tableaux(const Partition& lambda, int n) { return schur_tableaux(SkewShape{lambda, {}}, n); }

// ---- text forms ----------------------------------------------------------

/// Words over 1..9 as digit strings, e.g. "1374433254".
inline Word parse_word(std::string_view text) {
    Word w;
    for (char c : detail::trim(text)) {
        if (c < '1' || c > '9') throw parse_error("words are digit strings over 1..9");
        w.push_back(c - '0');
    }
    return w;
}

inline std::string to_string(const Word& w) {
    std::string s;
    for (int a : w) {
        if (a >= 1 && a <= 9) s += static_cast<char>('0' + a);
        else s += "(" + std::to_string(a) + ")";
    }
    return s;
}

/// One row per line, letters space-separated, top row first.
inline std::string to_string(const Tableau& t) {
    std::ostringstream os;
    for (const auto& r : t.rows()) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? " " : "") << r[i];
        os << '\n';
    }
    return os.str();
}

inline std::string to_string(const DualTableau& t) {
    std::ostringstream os;
    for (const auto& r : t.rows()) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? " " : "") << r[i];
        os << '\n';
    }
    return os.str();
}

/// Inner cells are rendered as ".".
inline std::string to_string(const SkewTableau& t) {
    std::ostringstream os;
    for (std::size_t r = 0; r < t.rows().size(); ++r) {
        const int inner = t.shape().inner[r];
        for (int c = 0; c < inner; ++c) os << (c ? " " : "") << '.';
        for (std::size_t i = 0; i < t.rows()[r].size(); ++i)
            os << ((inner > 0 || i > 0) ? " " : "") << t.rows()[r][i];
        os << '\n';
    }
    return os.str();
}

/// Compact "12334/345/4/7" form used in logs and tests.
inline std::string to_compact(const Tableau& t) {
    std::string s;
    for (std::size_t r = 0; r < t.rows().size(); ++r) {
        if (r) s += '/';
        s += to_string(t.rows()[r]);
    }
    return s;
}

/// Parses the line form (one row per line) or the compact "123/45" digit form.
inline Tableau parse_tableau(std::string_view text) {
    std::vector<Row> rows;
    std::string_view s = detail::trim(text);
    const bool compact = s.find('\n') == std::string_view::npos && s.find(' ') == std::string_view::npos;
    const char sep = compact ? '/' : '\n';
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) pos = s.size();
        std::string_view line = detail::trim(s.substr(start, pos - start));
        if (!line.empty()) {
            Row row;
            if (compact) {
                row = parse_word(line);
            } else {
                std::istringstream is{std::string(line)};
                std::string tok;
                while (is >> tok) {
                    Row one = detail::parse_int_list(tok, ',');
                    row.insert(row.end(), one.begin(), one.end());
                }
            }
            rows.push_back(std::move(row));
        }
        start = pos + 1;
    }
    auto t = Tableau::make(std::move(rows));
    if (!t) throw parse_error("not a semistandard tableau");
    return std::move(*t);
}

inline std::ostream& operator<<(std::ostream& os, const Tableau& t) { return os << to_compact(t); }

}  // namespace symfn
