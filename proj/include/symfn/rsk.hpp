#pragma once

/**
 * @file rsk.hpp
 * @brief Matrix words and the RSK, dual RSK and Burge correspondences,
 *        with the inverse of RSK and exhaustive bijection audits.
 */

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symfn/errors.hpp"
#include "symfn/partition.hpp"
#include "symfn/polynomial.hpp"
#include "symfn/tableau.hpp"

namespace symfn {

/// Dense rectangle of non-negative integers.
class IntMatrix {
public:
    IntMatrix() = default;

    IntMatrix(std::size_t rows, std::size_t cols) : cols_(cols), a_(rows, std::vector<int>(cols, 0)) {}

    explicit IntMatrix(std::vector<std::vector<int>> entries) : a_(std::move(entries)) {
        cols_ = a_.empty() ? 0 : a_[0].size();
        for (const auto& r : a_) {
            if (r.size() != cols_) throw domain_error("matrix rows have different lengths");
            for (int v : r)
                if (v < 0) throw domain_error("matrix entries must be non-negative");
        }
    }
    IntMatrix(std::initializer_list<std::vector<int>> rows) : IntMatrix(std::vector<std::vector<int>>(rows)) {}

    std::size_t rows() const noexcept { return a_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    int operator()(std::size_t i, std::size_t j) const { return a_[i][j]; }
    int& operator()(std::size_t i, std::size_t j) { return a_[i][j]; }
    const std::vector<std::vector<int>>& entries() const noexcept { return a_; }

    bool is_zero_one() const {
        for (const auto& r : a_)
            for (int v : r)
                if (v > 1) return false;
        return true;
    }

    std::vector<int> row_sums() const {
        std::vector<int> s;
        for (const auto& r : a_) {
            int t = 0;
            for (int v : r) t += v;
            s.push_back(t);
        }
        return s;
    }

    std::vector<int> col_sums() const {
        std::vector<int> s(cols_, 0);
        for (const auto& r : a_)
            for (std::size_t j = 0; j < cols_; ++j) s[j] += r[j];
        return s;
    }

    bool operator==(const IntMatrix&) const = default;
    auto operator<=>(const IntMatrix&) const = default;

private:
    std::size_t cols_ = 0;
    std::vector<std::vector<int>> a_;
};

/// The column word, row word and their block-reversed forms.
struct MatrixWords {
    Word u;           ///< column numbers, row by row
    Word v;           ///< row numbers, column by column
    Word u_reversed;  ///< u with each row block reversed
    Word v_reversed;  ///< v with each column block reversed
};

inline MatrixWords matrix_words(const IntMatrix& A) {
    MatrixWords w;
    for (std::size_t i = 0; i < A.rows(); ++i) {
        Word block;
        for (std::size_t j = 0; j < A.cols(); ++j) block.insert(block.end(), static_cast<std::size_t>(A(i, j)), static_cast<int>(j) + 1);
        w.u.insert(w.u.end(), block.begin(), block.end());
        w.u_reversed.insert(w.u_reversed.end(), block.rbegin(), block.rend());
    }
    for (std::size_t j = 0; j < A.cols(); ++j) {
        Word block;
        for (std::size_t i = 0; i < A.rows(); ++i) block.insert(block.end(), static_cast<std::size_t>(A(i, j)), static_cast<int>(i) + 1);
        w.v.insert(w.v.end(), block.begin(), block.end());
        w.v_reversed.insert(w.v_reversed.end(), block.rbegin(), block.rend());
    }
    return w;
}

/// The dual tableau whose rows are the columns of t.
inline DualTableau dual_of(const Tableau& t) {
    std::vector<Row> rows;
    const auto& tr = t.rows();
    for (std::size_t c = 0; !tr.empty() && c < tr[0].size(); ++c) {
        Row col;
        for (const auto& r : tr)
            if (c < r.size()) col.push_back(r[c]);
        rows.push_back(std::move(col));
    }
    return DualTableau(std::move(rows));
}

inline std::pair<Tableau, Tableau> rsk(const IntMatrix& A) {
    const auto w = matrix_words(A);
    return {p_tableau(w.u), p_tableau(w.v)};
}

/// Which column word feeds the dual insertion of RSK*.
enum class DualColumnWord { plain, reversed };

inline std::pair<DualTableau, Tableau> rsk_star(const IntMatrix& A, DualColumnWord variant = DualColumnWord::plain) {
    if (!A.is_zero_one()) throw domain_error("RSK* is defined on zero-one matrices");
    const auto w = matrix_words(A);
    return {p_star_tableau(variant == DualColumnWord::plain ? w.u : w.u_reversed), p_tableau(w.v_reversed)};
}

inline std::pair<DualTableau, DualTableau> burge(const IntMatrix& A) {
    const auto w = matrix_words(A);
    return {p_star_tableau(w.u_reversed), p_star_tableau(w.v_reversed)};
}

/**
 * The unique A with rsk(A) = (P, Q), with m rows and n columns. Peels the
 * largest letter of Q: its boxes form a horizontal strip, and un-inserting
 * from P at those boxes right to left returns the last row of A.
 */
inline IntMatrix rsk_inverse(const Tableau& P, const Tableau& Q, std::size_t m, std::size_t n) {
    if (P.empty() != Q.empty() || (!P.empty() && P.shape() != Q.shape()))
        throw domain_error("RSK inverse needs tableaux of the same shape");
    if (P.max_entry() > static_cast<int>(n) || Q.max_entry() > static_cast<int>(m))
        throw domain_error("tableau letters exceed the matrix dimensions");
    IntMatrix A(m, n);
    Tableau p = P;
    std::vector<Row> q = Q.rows();
    for (std::size_t row = m; row-- > 0;) {
        const int letter = static_cast<int>(row) + 1;
        // boxes holding the letter, rightmost first
        std::vector<std::pair<std::size_t, std::size_t>> cells;
        for (std::size_t r = 0; r < q.size(); ++r)
            for (std::size_t c = 0; c < q[r].size(); ++c)
                if (q[r][c] == letter) cells.emplace_back(c, r);
        std::sort(cells.rbegin(), cells.rend());
        for (const auto& [c, r] : cells) {
            if (c + 1 != q[r].size() || (r + 1 < q.size() && q[r + 1].size() > c))
                throw domain_error("inconsistent peel: largest letters of Q do not form a horizontal strip");
            q[r].pop_back();
            if (q[r].empty()) q.pop_back();
            auto [smaller, x] = remove(p, r);
            p = std::move(smaller);
            ++A(row, static_cast<std::size_t>(x - 1));
        }
    }
    if (!p.empty()) throw domain_error("inconsistent peel: letters of P remain");
    if (rsk(A) != std::pair{P, Q}) throw domain_error("inconsistent peel: not an RSK pair");
    return A;
}

// ---- matrix enumeration and bijection audits --------------------------------

/// Calls f on every matrix with the given row and column sums (entries 0/1 when zero_one).
template <class F>
void for_each_matrix(const std::vector<int>& row_sums, const std::vector<int>& col_sums, bool zero_one, F&& f) {
    const std::size_t m = row_sums.size();
    const std::size_t n = col_sums.size();
    int rs = 0, cs = 0;
    for (int v : row_sums) rs += v;
    for (int v : col_sums) cs += v;
    if (rs != cs) return;
    IntMatrix A(m, n);
    std::vector<int> remaining = col_sums;
    // row-major fill; the last cell of each row takes what is left of the row sum
    std::function<void(std::size_t, std::size_t, int)> fill = [&](std::size_t i, std::size_t j, int left) {
        if (i == m) {
            if (std::all_of(remaining.begin(), remaining.end(), [](int v) { return v == 0; })) f(std::as_const(A));
            return;
        }
        if (j == n) {
            if (left == 0) fill(i + 1, 0, i + 1 < m ? row_sums[i + 1] : 0);
            return;
        }
        const int hi = std::min({left, remaining[j], zero_one ? 1 : left});
        const int lo = j + 1 == n ? left : 0;
        for (int v = hi; v >= lo; --v) {
            A(i, j) = v;
            remaining[j] -= v;
            fill(i, j + 1, left - v);
            remaining[j] += v;
        }
        A(i, j) = 0;
    };
    fill(0, 0, m > 0 ? row_sums[0] : 0);
}

inline std::vector<IntMatrix> enumerate_matrices(const std::vector<int>& row_sums, const std::vector<int>& col_sums,
                                                 bool zero_one) {
    std::vector<IntMatrix> out;
    for_each_matrix(row_sums, col_sums, zero_one, [&](const IntMatrix& A) { out.push_back(A); });
    return out;
}

enum class RskFlavor { rsk, rsk_star, burge };

struct BijectionReport {
    std::size_t matrix_count = 0;      ///< matrices on the domain side
    std::size_t tableau_pair_count = 0;  ///< independently enumerated target pairs
    bool injective = true;
    bool type_correct = true;   ///< contents and shapes as the theorem prescribes
    bool surjective = true;     ///< image equals the enumerated target set

    bool ok() const { return injective && type_correct && surjective && matrix_count == tableau_pair_count; }
};

namespace detail {

inline std::string pair_key(const std::string& a, const std::string& b) { return a + "|" + b; }

inline std::vector<int> padded_content(const std::vector<Row>& rows, std::size_t n) {
    std::vector<int> c(n, 0);
    for (const auto& r : rows)
        for (int a : r) {
            if (a < 1 || static_cast<std::size_t>(a) > n) return {};
            ++c[static_cast<std::size_t>(a - 1)];
        }
    return c;
}

}  // namespace detail

/**
 * Enumerates both sides of the correspondence for row sums mu and column sums
 * nu and checks the map is a type-correct bijection. The domain is 0/1
 * matrices for rsk_star, and for the others unless zero_one is requested.
 */
inline BijectionReport verify_knuth_bijection(const std::vector<int>& mu, const std::vector<int>& nu, RskFlavor flavor,
                                              bool zero_one = false,
                                              DualColumnWord variant = DualColumnWord::plain) {
    if (flavor == RskFlavor::rsk_star) zero_one = true;
    BijectionReport rep;
    std::set<std::string> image;
    for_each_matrix(mu, nu, zero_one, [&](const IntMatrix& A) {
        ++rep.matrix_count;
        std::string key;
        std::vector<Row> first, second;
        Partition s1, s2;
        switch (flavor) {
            case RskFlavor::rsk: {
                auto [P, Q] = rsk(A);
                first = P.rows(), second = Q.rows(), s1 = P.shape(), s2 = Q.shape();
                key = detail::pair_key(to_string(P), to_string(Q));
                break;
            }
            case RskFlavor::rsk_star: {
                auto [P, Q] = rsk_star(A, variant);
                first = P.rows(), second = Q.rows(), s1 = P.shape(), s2 = Q.shape();
                key = detail::pair_key(to_string(P), to_string(Q));
                break;
            }
            case RskFlavor::burge: {
                auto [P, Q] = burge(A);
                first = P.rows(), second = Q.rows(), s1 = P.shape(), s2 = Q.shape();
                key = detail::pair_key(to_string(P), to_string(Q));
                break;
            }
        }
        if (s1 != s2 || detail::padded_content(first, nu.size()) != nu ||
            detail::padded_content(second, mu.size()) != mu)
            rep.type_correct = false;
        if (!image.insert(key).second) rep.injective = false;
    });

    std::set<std::string> target;
    int total = 0;
    for (int v : nu) total += v;
    for (const auto& lambda : partitions_of(total)) {
        const Partition lc = conjugate(lambda);
        const bool first_dual = flavor != RskFlavor::rsk;
        const bool second_dual = flavor == RskFlavor::burge;
        std::vector<std::string> lefts, rights;
        for (const auto& t : enumerate_ssyt(first_dual ? lc : lambda, nu))
            lefts.push_back(first_dual ? to_string(dual_of(t)) : to_string(t));
        for (const auto& t : enumerate_ssyt(second_dual ? lc : lambda, mu))
            rights.push_back(second_dual ? to_string(dual_of(t)) : to_string(t));
        for (const auto& l : lefts)
            for (const auto& r : rights) target.insert(detail::pair_key(l, r));
    }
    rep.tableau_pair_count = target.size();
    rep.surjective = image == target;
    return rep;
}

// ---- text forms -------------------------------------------------------------

/// "1,0;0,1": comma-separated entries, semicolon-separated rows.
inline IntMatrix parse_matrix(std::string_view text) {
    std::string_view s = detail::trim(text);
    if (s.empty()) return IntMatrix{};
    std::vector<std::vector<int>> rows;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t pos = s.find(';', start);
        if (pos == std::string_view::npos) pos = s.size();
        std::vector<int> row = detail::parse_int_list(s.substr(start, pos - start), ',');
        if (row.empty()) throw parse_error("empty matrix row");
        for (int v : row)
            if (v < 0) throw parse_error("matrix entries must be non-negative");
        rows.push_back(std::move(row));
        start = pos + 1;
    }
    for (const auto& r : rows)
        if (r.size() != rows[0].size()) throw parse_error("matrix rows have different lengths");
    return IntMatrix(std::move(rows));
}

inline std::string to_string(const IntMatrix& A) {
    std::ostringstream os;
    for (std::size_t i = 0; i < A.rows(); ++i) {
        if (i) os << ';';
        for (std::size_t j = 0; j < A.cols(); ++j) os << (j ? "," : "") << A(i, j);
    }
    return os.str();
}

}  // namespace symfn
