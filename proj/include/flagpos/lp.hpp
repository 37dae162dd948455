#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "flagpos/errors.hpp"
#include "flagpos/rational.hpp"

namespace flagpos {

namespace detail {

// Phase-one simplex with Bland's rule: is there x >= 0 with M x = rhs?
// Exact rational pivots; sized for small systems (a handful of rows,
// up to a few hundred columns).
inline bool exists_nonneg_solution(std::vector<std::vector<Rat>> m, std::vector<Rat> rhs) {
    const std::size_t rows = m.size();
    const std::size_t vars = rows ? m.front().size() : 0;
    for (std::size_t i = 0; i < rows; ++i) {
        if (rhs[i] < 0) {
            rhs[i] = -rhs[i];
            for (auto& x : m[i]) x = -x;
        }
    }

    const std::size_t total = vars + rows;  // original variables + artificials
    std::vector<std::vector<Rat>> t(rows, std::vector<Rat>(total + 1, Rat(0)));
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < vars; ++j) t[i][j] = m[i][j];
        t[i][vars + i] = 1;
        t[i][total] = rhs[i];
        basis[i] = vars + i;
    }

    for (;;) {
        // reduced cost of column j for the objective "sum of artificials"
        std::size_t entering = total;
        for (std::size_t j = 0; j < total && entering == total; ++j) {
            Rat reduced = (j >= vars) ? Rat(1) : Rat(0);
            for (std::size_t i = 0; i < rows; ++i)
                if (basis[i] >= vars) reduced -= t[i][j];
            if (reduced < 0) entering = j;
        }
        if (entering == total) break;

        std::size_t leaving = rows;
        Rat best;
        for (std::size_t i = 0; i < rows; ++i) {
            if (t[i][entering] <= 0) continue;
            const Rat ratio = t[i][total] / t[i][entering];
            if (leaving == rows || ratio < best || (ratio == best && basis[i] < basis[leaving])) {
                leaving = i;
                best = ratio;
            }
        }
        if (leaving == rows) throw StateError("simplex: phase-one objective unbounded");

        const Rat pivot = t[leaving][entering];
        for (auto& x : t[leaving]) x /= pivot;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leaving || t[i][entering] == 0) continue;
            const Rat f = t[i][entering];
            for (std::size_t j = 0; j <= total; ++j) t[i][j] -= f * t[leaving][j];
        }
        basis[leaving] = entering;
    }

    Rat objective(0);
    for (std::size_t i = 0; i < rows; ++i)
        if (basis[i] >= vars) objective += t[i][total];
    return objective == 0;
}

}  // namespace detail

/// Is p a convex combination of the given points? Exact.
inline bool in_convex_hull(const std::vector<Int>& p, const std::vector<std::vector<Int>>& points) {
    if (points.empty()) return false;
    const std::size_t dim = p.size();
    std::vector<std::vector<Rat>> m(dim + 1, std::vector<Rat>(points.size()));
    std::vector<Rat> rhs(dim + 1);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t j = 0; j < points.size(); ++j) m[r][j] = Rat(points[j][r]);
        rhs[r] = Rat(p[r]);
    }
    for (std::size_t j = 0; j < points.size(); ++j) m[dim][j] = 1;
    rhs[dim] = 1;
    return detail::exists_nonneg_solution(std::move(m), std::move(rhs));
}

/// Extreme points of the convex hull of a finite point set: a point is
/// extreme iff it is not in the hull of the others. Returns them sorted.
inline std::vector<std::vector<Int>> extreme_points(std::vector<std::vector<Int>> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() <= 1) return points;
    std::vector<std::vector<Int>> out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::vector<std::vector<Int>> others;
        others.reserve(points.size() - 1);
        for (std::size_t j = 0; j < points.size(); ++j)
            if (j != i) others.push_back(points[j]);
        if (!in_convex_hull(points[i], others)) out.push_back(points[i]);
    }
    return out;
}

}  // namespace flagpos
