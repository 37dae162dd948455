#pragma once

// Independent reference implementations used only by the tests: slow but
// straight from the definitions, so the library paths can be checked
// against a second route.

#include <set>
#include <vector>

#include "flagpos/coxeter.hpp"
#include "flagpos/matrix.hpp"

namespace oracle {

// Determinant by cofactor expansion along the first row.
inline flagpos::Rat det_cofactor(const flagpos::Mat& a) {
    const std::size_t n = a.rows();
    if (n == 0) return flagpos::Rat(1);
    if (n == 1) return a(0, 0);
    flagpos::Rat sum(0);
    for (std::size_t c = 0; c < n; ++c) {
        if (a(0, c) == 0) continue;
        flagpos::Mat sub(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                sub(i - 1, jj++) = a(i, j);
            }
        }
        const flagpos::Rat term = a(0, c) * det_cofactor(sub);
        sum += (c % 2 == 0) ? term : -term;
    }
    return sum;
}

// Everything below w in Bruhat order, straight from the subword definition:
// the products of all subwords of one fixed reduced word of w.
inline std::set<flagpos::Perm> bruhat_downset_by_subwords(const flagpos::Perm& w) {
    const flagpos::Word word = flagpos::reduced_word(w);
    std::set<flagpos::Perm> out;
    const std::size_t count = std::size_t(1) << word.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
        flagpos::Perm p = flagpos::Perm::identity(w.n());
        for (std::size_t i = 0; i < word.size(); ++i)
            if (mask & (std::size_t(1) << i)) p = p.times_simple(word[i]);
        out.insert(p);
    }
    return out;
}

inline bool bruhat_leq_subword(const flagpos::Perm& v, const flagpos::Perm& w) {
    return bruhat_downset_by_subwords(w).contains(v);
}

// Demazure products from the max/min-over-interval definition, using the
// subword downset and pairwise comparisons. The comparison defaults to the
// subword definition; passing a faster order makes exhaustive sweeps cheap.
using BruhatLeq = bool (*)(const flagpos::Perm&, const flagpos::Perm&);

inline flagpos::Perm demazure_star_by_enumeration(const flagpos::Perm& v, const flagpos::Perm& w,
                                                  BruhatLeq leq = &bruhat_leq_subword) {
    std::set<flagpos::Perm> products;
    for (const auto& x : bruhat_downset_by_subwords(w)) products.insert(v * x);
    for (const auto& cand : products) {
        bool top = true;
        for (const auto& other : products)
            if (!leq(other, cand)) {
                top = false;
                break;
            }
        if (top) return cand;
    }
    throw std::logic_error("no maximum in the translated downset");
}

inline flagpos::Perm demazure_down_by_enumeration(const flagpos::Perm& v, const flagpos::Perm& w,
                                                  BruhatLeq leq = &bruhat_leq_subword) {
    std::set<flagpos::Perm> products;
    for (const auto& x : bruhat_downset_by_subwords(w)) products.insert(v * x);
    for (const auto& cand : products) {
        bool bottom = true;
        for (const auto& other : products)
            if (!leq(cand, other)) {
                bottom = false;
                break;
            }
        if (bottom) return cand;
    }
    throw std::logic_error("no minimum in the translated downset");
}

// Exact 2-d convex hull (monotone chain, integer arithmetic); returns the
// extreme points sorted, collinear boundary points dropped.
inline std::vector<std::vector<flagpos::Int>> hull_2d(std::vector<std::vector<flagpos::Int>> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    const auto cross = [](const std::vector<flagpos::Int>& o, const std::vector<flagpos::Int>& a,
                          const std::vector<flagpos::Int>& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    std::vector<std::vector<flagpos::Int>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
        hull.push_back(p);
    }
    const std::size_t lower = hull.size() + 1;
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (hull.size() >= lower && cross(hull[hull.size() - 2], hull.back(), *it) <= 0)
            hull.pop_back();
        hull.push_back(*it);
    }
    hull.pop_back();
    std::sort(hull.begin(), hull.end());
    return hull;
}

// Interval by filtering the whole symmetric group.
inline std::vector<flagpos::Perm> interval_brute(const flagpos::Perm& v, const flagpos::Perm& w) {
    std::vector<flagpos::Perm> out;
    for (const auto& x : flagpos::all_perms(v.n()))
        if (bruhat_leq_subword(v, x) && bruhat_leq_subword(x, w)) out.push_back(x);
    return out;
}

}  // namespace oracle
