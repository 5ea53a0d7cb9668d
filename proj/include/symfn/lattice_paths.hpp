#pragma once

/**
 * @file lattice_paths.hpp
 * @brief Weighted lattice paths, the Lindström-Gessel-Viennot determinant
 *        audit, and the Jacobi-Trudi / Giambelli determinant formulas.
 *
 * Three grid models are supported:
 *  - h:   right steps in row y weigh x_y, up steps weigh 1 (rows 1..n);
 *  - e:   up steps weigh 1, up-right diagonals ending in row y weigh x_y (rows 0..n);
 *  - giambelli: for x < 0 (rows 1..n+1) down steps weigh 1 and down-right
 *         diagonals leaving row y weigh x_{y-1}; for x >= 0 the h rules apply.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "symfn/determinant.hpp"
#include "symfn/errors.hpp"
#include "symfn/partition.hpp"
#include "symfn/polynomial.hpp"
#include "symfn/tableau.hpp"

namespace symfn {

struct Point {
    int x = 0;
    int y = 0;
    auto operator<=>(const Point&) const = default;
};

enum class PathModel { h, e, giambelli };

struct Step {
    Point to;
    int var;  ///< 0 for weight 1, otherwise the index of x_var
};

/// One of the three grid models, cut to the window x <= max_x.
class WeightedGrid {
public:
    WeightedGrid(PathModel model, int n, int max_x) : model_(model), n_(n), max_x_(max_x) {
        if (n < 0) throw domain_error("variable count must be non-negative");
    }

    PathModel model() const noexcept { return model_; }
    int nvars() const noexcept { return n_; }
    int max_x() const noexcept { return max_x_; }

    bool contains(Point p) const {
        if (p.x > max_x_) return false;
        switch (model_) {
            case PathModel::h: return p.x >= 0 && p.y >= 1 && p.y <= n_;
            case PathModel::e: return p.x >= 0 && p.y >= 0 && p.y <= n_;
            case PathModel::giambelli:
                return p.x < 0 ? (p.y >= 1 && p.y <= n_ + 1) : (p.y >= 1 && p.y <= n_);
        }
        return false;
    }

    /// Nonzero-weight steps out of p that stay inside the window.
    std::vector<Step> steps(Point p) const {
        std::vector<Step> out;
        if (!contains(p)) return out;
        auto push = [&](Point q, int var) {
            if (contains(q)) out.push_back({q, var});
        };
        if (model_ == PathModel::e) {
            push({p.x, p.y + 1}, 0);
            push({p.x + 1, p.y + 1}, p.y + 1);
        } else if (model_ == PathModel::h || p.x >= 0) {
            push({p.x + 1, p.y}, p.y);
            push({p.x, p.y + 1}, 0);
        } else {
            push({p.x, p.y - 1}, 0);
            if (p.y - 1 >= 1) push({p.x + 1, p.y - 1}, p.y - 1);
        }
        return out;
    }

    /// Strictly increases along every step, so paths are simple and finite.
    long potential(Point p) const {
        const long width = n_ + 2;
        if (model_ == PathModel::giambelli && p.x < 0) return width * p.x + (n_ + 1 - p.y);
        return width * p.x + p.y;
    }

private:
    PathModel model_;
    int n_;
    int max_x_;
};

struct LatticePath {
    std::vector<Point> points;
    std::vector<int> vars;  ///< one entry per step

    Exponents exponents(int n) const {
        Exponents e(static_cast<std::size_t>(n), 0);
        for (int v : vars)
            if (v > 0) ++e[static_cast<std::size_t>(v - 1)];
        return e;
    }

    bool operator==(const LatticePath&) const = default;
    auto operator<=>(const LatticePath&) const = default;
};

/// Paths from sources[i] to sinks[perm[i]].
struct PathSystem {
    std::vector<Point> sources;
    std::vector<Point> sinks;
    std::vector<int> perm;
    std::vector<LatticePath> paths;

    Exponents exponents(int n) const {
        Exponents e(static_cast<std::size_t>(n), 0);
        for (const auto& p : paths) {
            const auto pe = p.exponents(n);
            for (std::size_t k = 0; k < e.size(); ++k) e[k] += pe[k];
        }
        return e;
    }

    int sign() const { return permutation_sign(perm); }

    bool operator==(const PathSystem&) const = default;
};

inline std::vector<LatticePath> enumerate_paths(const WeightedGrid& grid, Point a, Point b) {
    std::vector<LatticePath> out;
    if (!grid.contains(a) || !grid.contains(b)) return out;
    LatticePath cur{{a}, {}};
    auto dfs = [&](auto&& self, Point p) -> void {
        if (p == b) {
            out.push_back(cur);
            return;
        }
        if (grid.potential(p) >= grid.potential(b)) return;
        for (const auto& s : grid.steps(p)) {
            cur.points.push_back(s.to);
            cur.vars.push_back(s.var);
            self(self, s.to);
            cur.points.pop_back();
            cur.vars.pop_back();
        }
    };
    dfs(dfs, a);
    return out;
}

/// Sum of the weights of all paths a -> b.
inline Polynomial path_sum(const WeightedGrid& grid, Point a, Point b) {
    const int n = grid.nvars();
    std::map<Point, Polynomial> memo;
    auto go = [&](auto&& self, Point p) -> Polynomial {
        if (p == b) return Polynomial::one(n);
        if (grid.potential(p) >= grid.potential(b)) return Polynomial(n);
        if (auto it = memo.find(p); it != memo.end()) return it->second;
        Polynomial total(n);
        for (const auto& s : grid.steps(p)) {
            Polynomial rest = self(self, s.to);
            if (rest.is_zero()) continue;
            if (s.var > 0) rest = rest * Polynomial::variable(n, s.var);
            total += rest;
        }
        memo.emplace(p, total);
        return total;
    };
    if (!grid.contains(a) || !grid.contains(b)) return Polynomial(n);
    return go(go, a);
}

// ---- crossing tests and the cancelling involution ---------------------------

namespace detail {

inline bool on_path(const LatticePath& p, Point q) {
    return std::find(p.points.begin(), p.points.end(), q) != p.points.end();
}

inline bool paths_cross(const LatticePath& a, const LatticePath& b) {
    for (const auto& q : a.points)
        if (on_path(b, q)) return true;
    return false;
}

inline void swap_tails(PathSystem& s, std::size_t i, std::size_t j, std::size_t m, std::size_t r) {
    LatticePath& wi = s.paths[i];
    LatticePath& wj = s.paths[j];
    LatticePath ni{{wi.points.begin(), wi.points.begin() + static_cast<std::ptrdiff_t>(m) + 1},
                   {wi.vars.begin(), wi.vars.begin() + static_cast<std::ptrdiff_t>(m)}};
    LatticePath nj{{wj.points.begin(), wj.points.begin() + static_cast<std::ptrdiff_t>(r) + 1},
                   {wj.vars.begin(), wj.vars.begin() + static_cast<std::ptrdiff_t>(r)}};
    ni.points.insert(ni.points.end(), wj.points.begin() + static_cast<std::ptrdiff_t>(r) + 1, wj.points.end());
    ni.vars.insert(ni.vars.end(), wj.vars.begin() + static_cast<std::ptrdiff_t>(r), wj.vars.end());
    nj.points.insert(nj.points.end(), wi.points.begin() + static_cast<std::ptrdiff_t>(m) + 1, wi.points.end());
    nj.vars.insert(nj.vars.end(), wi.vars.begin() + static_cast<std::ptrdiff_t>(m), wi.vars.end());
    wi = std::move(ni);
    wj = std::move(nj);
    std::swap(s.perm[i], s.perm[j]);
}

inline std::size_t index_of(const LatticePath& p, Point q) {
    return static_cast<std::size_t>(std::find(p.points.begin(), p.points.end(), q) - p.points.begin());
}

}  // namespace detail

inline bool is_noncrossing(const PathSystem& s) {
    for (std::size_t i = 0; i < s.paths.size(); ++i)
        for (std::size_t j = i + 1; j < s.paths.size(); ++j)
            if (detail::paths_cross(s.paths[i], s.paths[j])) return false;
    return true;
}

/**
 * The cancelling involution: take the least i whose path meets another path,
 * the first point of that path lying on any other path, and the least j whose
 * path passes through it; exchange the two tails after that point.
 * Non-crossing systems are fixed.
 */
inline PathSystem lgv_involution(PathSystem s) {
    const std::size_t k = s.paths.size();
    for (std::size_t i = 0; i < k; ++i) {
        const auto& wi = s.paths[i];
        for (std::size_t m = 0; m < wi.points.size(); ++m) {
            for (std::size_t j = 0; j < k; ++j) {
                if (j == i || !detail::on_path(s.paths[j], wi.points[m])) continue;
                detail::swap_tails(s, i, j, m, detail::index_of(s.paths[j], wi.points[m]));
                return s;
            }
        }
    }
    return s;
}

/**
 * The rule exactly as often stated: least i meeting another path, then the
 * least j meeting path i, then the first point of path i on path j. Kept as a
 * diagnostic; it need not be an involution when three paths share points.
 */
inline PathSystem lgv_involution_literal(PathSystem s) {
    const std::size_t k = s.paths.size();
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (j == i || !detail::paths_cross(s.paths[i], s.paths[j])) continue;
            const auto& wi = s.paths[i];
            for (std::size_t m = 0; m < wi.points.size(); ++m) {
                if (!detail::on_path(s.paths[j], wi.points[m])) continue;
                detail::swap_tails(s, i, j, m, detail::index_of(s.paths[j], wi.points[m]));
                return s;
            }
        }
    }
    return s;
}

struct LgvOptions {
    bool check_crossing_condition = true;
    bool audit_involution = true;  ///< enumerates every path tuple for every permutation
};

struct LgvReport {
    bool crossing_condition = true;
    Polynomial determinant;
    Polynomial noncrossing_sum;      ///< identity-permutation non-crossing tuples
    std::size_t noncrossing_count = 0;
    std::size_t tuple_count = 0;     ///< all tuples over all permutations (when audited)
    std::size_t crossing_tuples = 0;
    std::size_t involution_failures = 0;  ///< sign, weight, involutivity or fixed-point violations
    std::size_t literal_rule_failures = 0;
    std::size_t stray_noncrossing = 0;    ///< non-crossing tuples with a non-identity permutation

    bool identity_holds() const { return determinant == noncrossing_sum; }
    bool ok() const {
        return crossing_condition && identity_holds() && involution_failures == 0 && stray_noncrossing == 0;
    }
};

namespace detail {

template <class F>
void for_each_tuple(const std::vector<std::vector<LatticePath>>& choices, bool prune_crossing, F&& f) {
    std::vector<LatticePath> cur;
    auto go = [&](auto&& self, std::size_t i) -> void {
        if (i == choices.size()) {
            f(std::as_const(cur));
            return;
        }
        for (const auto& p : choices[i]) {
            if (prune_crossing) {
                bool clash = false;
                for (const auto& q : cur)
                    if (paths_cross(p, q)) { clash = true; break; }
                if (clash) continue;
            }
            cur.push_back(p);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    go(go, 0);
}

}  // namespace detail

/// Non-crossing systems sources[i] -> sinks[i].
inline std::vector<PathSystem> noncrossing_systems(const WeightedGrid& grid, const std::vector<Point>& sources,
                                                   const std::vector<Point>& sinks) {
    if (sources.size() != sinks.size()) throw domain_error("sources and sinks differ in number");
    std::vector<std::vector<LatticePath>> choices;
    for (std::size_t i = 0; i < sources.size(); ++i) choices.push_back(enumerate_paths(grid, sources[i], sinks[i]));
    std::vector<int> id(sources.size());
    std::iota(id.begin(), id.end(), 0);
    std::vector<PathSystem> out;
    detail::for_each_tuple(choices, true, [&](const std::vector<LatticePath>& t) {
        out.push_back({sources, sinks, id, t});
    });
    return out;
}

inline LgvReport lgv_check(const WeightedGrid& grid, const std::vector<Point>& sources, const std::vector<Point>& sinks,
                           LgvOptions opt = {}) {
    const std::size_t k = sources.size();
    if (sinks.size() != k) throw domain_error("sources and sinks differ in number");
    const int n = grid.nvars();
    LgvReport rep;

    std::vector<std::vector<std::vector<LatticePath>>> paths(k, std::vector<std::vector<LatticePath>>(k));
    Matrix<Polynomial> a(k, std::vector<Polynomial>(k, Polynomial(n)));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            a[i][j] = path_sum(grid, sources[i], sinks[j]);
            if (opt.check_crossing_condition || opt.audit_involution || i == j)
                paths[i][j] = enumerate_paths(grid, sources[i], sinks[j]);
        }
    rep.determinant = determinant(a, Polynomial(n), Polynomial::one(n));

    if (opt.check_crossing_condition) {
        for (std::size_t i = 0; i < k && rep.crossing_condition; ++i)
            for (std::size_t j = i + 1; j < k && rep.crossing_condition; ++j)
                for (std::size_t i2 = 0; i2 < k && rep.crossing_condition; ++i2)
                    for (std::size_t j2 = i2 + 1; j2 < k && rep.crossing_condition; ++j2)
                        for (const auto& p : paths[i][j2]) {
                            for (const auto& q : paths[j][i2])
                                if (!detail::paths_cross(p, q)) { rep.crossing_condition = false; break; }
                            if (!rep.crossing_condition) break;
                        }
    }

    std::vector<int> id(k);
    std::iota(id.begin(), id.end(), 0);
    {
        std::vector<std::vector<LatticePath>> diag;
        for (std::size_t i = 0; i < k; ++i) diag.push_back(paths[i][i]);
        rep.noncrossing_sum = Polynomial(n);
        detail::for_each_tuple(diag, true, [&](const std::vector<LatticePath>& t) {
            PathSystem s{sources, sinks, id, t};
            rep.noncrossing_sum.add_term(s.exponents(n), 1);
            ++rep.noncrossing_count;
        });
    }

    if (opt.audit_involution) {
        std::vector<int> perm = id;
        do {
            std::vector<std::vector<LatticePath>> choices;
            for (std::size_t i = 0; i < k; ++i) choices.push_back(paths[i][static_cast<std::size_t>(perm[i])]);
            detail::for_each_tuple(choices, false, [&](const std::vector<LatticePath>& t) {
                ++rep.tuple_count;
                PathSystem s{sources, sinks, perm, t};
                if (is_noncrossing(s)) {
                    if (perm != id) ++rep.stray_noncrossing;
                    if (lgv_involution(s) != s) ++rep.involution_failures;
                    return;
                }
                ++rep.crossing_tuples;
                const PathSystem img = lgv_involution(s);
                if (img.sign() != -s.sign() || img.exponents(n) != s.exponents(n) || is_noncrossing(img) ||
                    lgv_involution(img) != s)
                    ++rep.involution_failures;
                const PathSystem lit = lgv_involution_literal(s);
                if (lit.sign() != -s.sign() || lgv_involution_literal(lit) != s) ++rep.literal_rule_failures;
            });
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return rep;
}

// ---- endpoints for the determinant identities -------------------------------

struct Endpoints {
    std::vector<Point> sources;
    std::vector<Point> sinks;
    int max_x = 0;
};

namespace detail {
inline Endpoints finish(Endpoints e) {
    e.max_x = 0;
    for (const auto& b : e.sinks) e.max_x = std::max(e.max_x, b.x);
    return e;
}
}  // namespace detail

/// h-model sources (mu_i + l - i, 1) and sinks (lambda_i + l - i, n), i = 1..l.
inline Endpoints h_endpoints(const SkewShape& s, int n) {
    if (!contains(s.outer, s.inner)) throw domain_error("skew shape requires inner ⊆ outer");
    const int l = static_cast<int>(s.outer.length());
    Endpoints e;
    for (int i = 0; i < l; ++i) {
        e.sources.push_back({s.inner[static_cast<std::size_t>(i)] + l - 1 - i, 1});
        e.sinks.push_back({s.outer[static_cast<std::size_t>(i)] + l - 1 - i, n});
    }
    return detail::finish(std::move(e));
}

/// e-model endpoints built from the conjugate shapes.
inline Endpoints e_endpoints(const SkewShape& s, int n) {
    if (!contains(s.outer, s.inner)) throw domain_error("skew shape requires inner ⊆ outer");
    const Partition oc = conjugate(s.outer), ic = conjugate(s.inner);
    const int k = static_cast<int>(oc.length());
    Endpoints e;
    for (int i = 0; i < k; ++i) {
        e.sources.push_back({ic[static_cast<std::size_t>(i)] + k - 1 - i, 0});
        e.sinks.push_back({oc[static_cast<std::size_t>(i)] + k - 1 - i, n});
    }
    return detail::finish(std::move(e));
}

/// Sources (-(leg_i + 1), n + 1) and sinks (arm_i, n) from the Frobenius coordinates.
inline Endpoints giambelli_endpoints(const Partition& lambda, int n) {
    const auto f = to_frobenius(lambda);
    Endpoints e;
    for (std::size_t i = 0; i < f.rank(); ++i) {
        e.sources.push_back({-(f.legs[i] + 1), n + 1});
        e.sinks.push_back({f.arms[i], n});
    }
    return detail::finish(std::move(e));
}

inline WeightedGrid grid_for(PathModel model, int n, const Endpoints& e) { return WeightedGrid(model, n, e.max_x); }

// ---- determinant formulas ----------------------------------------------------

namespace detail {
inline Polynomial det_of(const Matrix<Polynomial>& m, int n) {
    return determinant(m, Polynomial(n), Polynomial::one(n));
}
}  // namespace detail

/// det(h_{lambda_j - mu_i + i - j}) over the rows of the outer shape.
inline Polynomial skew_jacobi_trudi_h(const SkewShape& s, int n) {
    if (!contains(s.outer, s.inner)) throw domain_error("skew shape requires inner ⊆ outer");
    const std::size_t l = s.outer.length();
    Matrix<Polynomial> m(l, std::vector<Polynomial>(l, Polynomial(n)));
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j)
            m[i][j] = h_poly(s.outer[j] - s.inner[i] + static_cast<int>(i) - static_cast<int>(j), n);
    return detail::det_of(m, n);
}

/// det(e_{lambda'_j - mu'_i + i - j}) over the columns of the outer shape.
inline Polynomial skew_jacobi_trudi_e(const SkewShape& s, int n) {
    if (!contains(s.outer, s.inner)) throw domain_error("skew shape requires inner ⊆ outer");
    const Partition oc = conjugate(s.outer), ic = conjugate(s.inner);
    const std::size_t k = oc.length();
    Matrix<Polynomial> m(k, std::vector<Polynomial>(k, Polynomial(n)));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            m[i][j] = e_poly(oc[j] - ic[i] + static_cast<int>(i) - static_cast<int>(j), n);
    return detail::det_of(m, n);
}

inline Polynomial jacobi_trudi_h(const Partition& lambda, int n) { return skew_jacobi_trudi_h({lambda, {}}, n); }
inline Polynomial jacobi_trudi_e(const Partition& lambda, int n) { return skew_jacobi_trudi_e({lambda, {}}, n); }

enum class SkewMethod { det_h, det_e, tableaux };

inline Polynomial skew_schur(const SkewShape& s, int n, SkewMethod method = SkewMethod::tableaux) {
    switch (method) {
        case SkewMethod::det_h: return skew_jacobi_trudi_h(s, n);
        case SkewMethod::det_e: return skew_jacobi_trudi_e(s, n);
        case SkewMethod::tableaux: break;
    }
    if (!contains(s.outer, s.inner)) throw domain_error("skew shape requires inner ⊆ outer");
    return schur_tableaux(s, n);
}

/// Schur polynomial of the hook (a+1, 1^b) as an alternating sum of h e products.
inline Polynomial hook_schur(int a, int b, int n) {
    if (a < 0 || b < 0) throw domain_error("hook arm and leg must be non-negative");
    Polynomial total(n);
    for (int l = 0; l <= b; ++l) {
        Polynomial term = h_poly(a + l + 1, n) * e_poly(b - l, n);
        if (l % 2 == 0) total += term;
        else total -= term;
    }
    return total;
}

/// det(s_{(arm_j | leg_i)}) over the Durfee square.
inline Polynomial giambelli(const Partition& lambda, int n) {
    const auto f = to_frobenius(lambda);
    const std::size_t d = f.rank();
    Matrix<Polynomial> m(d, std::vector<Polynomial>(d, Polynomial(n)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m[i][j] = hook_schur(f.arms[j], f.legs[i], n);
    return detail::det_of(m, n);
}

// ---- paths to tableaux -------------------------------------------------------

/**
 * The bijection from non-crossing systems to tableaux. h: the rows of the
 * right steps of path i fill row i. e: the rows where the diagonal steps of
 * path i end fill column i. giambelli: path i fills the hook through (i,i),
 * diagonal steps giving the column read upward and right steps the row.
 */
inline SkewTableau paths_to_tableau(const PathSystem& sys, PathModel model, const SkewShape& shape) {
    if (!is_noncrossing(sys)) throw domain_error("paths_to_tableau needs a non-crossing system");
    const std::size_t rows = shape.outer.length();
    std::vector<std::vector<int>> grid(rows);
    for (std::size_t r = 0; r < rows; ++r) grid[r].assign(static_cast<std::size_t>(shape.outer[r]), 0);
    auto put = [&](std::size_t r, std::size_t c, int v) {
        if (r >= rows || c >= grid[r].size() || c < static_cast<std::size_t>(shape.inner[r]) || grid[r][c] != 0)
            throw domain_error("path system does not match the shape");
        grid[r][c] = v;
    };
    for (std::size_t i = 0; i < sys.paths.size(); ++i) {
        const auto& p = sys.paths[i];
        std::vector<int> right, diag;
        for (std::size_t s = 0; s < p.vars.size(); ++s) {
            const Point a = p.points[s], b = p.points[s + 1];
            if (p.vars[s] == 0) continue;
            if (b.y == a.y) right.push_back(p.vars[s]);
            else diag.push_back(p.vars[s]);
        }
        if (model == PathModel::h) {
            for (std::size_t c = 0; c < right.size(); ++c) put(i, static_cast<std::size_t>(shape.inner[i]) + c, right[c]);
        } else if (model == PathModel::e) {
            const std::size_t top = static_cast<std::size_t>(conjugate(shape.inner)[i]);
            for (std::size_t r = 0; r < diag.size(); ++r) put(top + r, i, diag[r]);
        } else {
            // diagonals run downward, so the last one is the corner
            if (diag.empty()) throw domain_error("giambelli path without diagonal steps");
            for (std::size_t t = 0; t < diag.size(); ++t) put(i + diag.size() - 1 - t, i, diag[t]);
            for (std::size_t c = 0; c < right.size(); ++c) put(i, i + 1 + c, right[c]);
        }
    }
    std::vector<Row> out;
    for (std::size_t r = 0; r < rows; ++r)
        out.emplace_back(grid[r].begin() + shape.inner[r], grid[r].end());
    auto t = SkewTableau::make(shape, std::move(out));
    if (!t) throw internal_fault("non-crossing paths produced a non-semistandard filling");
    return std::move(*t);
}

// ---- ASCII rendering ---------------------------------------------------------

/**
 * Lattice points top row first: '.' free, digit k for a point of path k
 * (1-based), '*' where paths share a point. One line per path lists its
 * steps: R right, U up, D down, / up-right, \ down-right.
 */
inline std::string render_paths(const WeightedGrid& grid, const PathSystem& sys) {
    int min_x = 0, max_x = grid.max_x(), min_y = 0, max_y = 0;
    bool first = true;
    for (const auto& p : sys.paths)
        for (const auto& q : p.points) {
            if (first) { min_x = q.x; min_y = max_y = q.y; first = false; }
            min_x = std::min(min_x, q.x);
            min_y = std::min(min_y, q.y);
            max_y = std::max(max_y, q.y);
        }
    for (const auto& q : sys.sources) { min_x = std::min(min_x, q.x); min_y = std::min(min_y, q.y); max_y = std::max(max_y, q.y); }
    for (const auto& q : sys.sinks) { max_x = std::max(max_x, q.x); min_y = std::min(min_y, q.y); max_y = std::max(max_y, q.y); }
    std::ostringstream os;
    for (int y = max_y; y >= min_y; --y) {
        os << (y < 10 && y >= 0 ? " " : "") << y << " ";
        for (int x = min_x; x <= max_x; ++x) {
            char c = grid.contains({x, y}) ? '.' : ' ';
            for (std::size_t i = 0; i < sys.paths.size(); ++i)
                if (detail::on_path(sys.paths[i], {x, y})) c = (c == '.' || c == ' ') ? static_cast<char>('1' + i % 9) : '*';
            os << c;
        }
        os << '\n';
    }
    for (std::size_t i = 0; i < sys.paths.size(); ++i) {
        const auto& p = sys.paths[i];
        os << "path " << i + 1 << ": (" << p.points.front().x << "," << p.points.front().y << ") ";
        for (std::size_t s = 0; s + 1 < p.points.size(); ++s) {
            const Point a = p.points[s], b = p.points[s + 1];
            if (b.x == a.x) os << (b.y > a.y ? 'U' : 'D');
            else if (b.y == a.y) os << 'R';
            else os << (b.y > a.y ? '/' : '\\');
        }
        os << " (" << p.points.back().x << "," << p.points.back().y << ")\n";
    }
    return os.str();
}

}  // namespace symfn
