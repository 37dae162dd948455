#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <deque>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "flagpos/errors.hpp"

namespace flagpos {

/// Word in the simple transpositions s_1, ..., s_{n-1}, stored as indices.
using Word = std::vector<int>;

/// Permutation of {1, ..., n} in one-line notation.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> one_line) : line_(std::move(one_line)) {
        std::vector<bool> seen(line_.size(), false);
        for (int v : line_) {
            if (v < 1 || v > static_cast<int>(line_.size()) || seen[v - 1])
                throw ArgumentError("Perm: one-line notation is not a bijection");
            seen[v - 1] = true;
        }
    }

    static Perm identity(int n) {
        std::vector<int> l(n);
        for (int i = 0; i < n; ++i) l[i] = i + 1;
        return Perm(std::move(l));
    }

    // The simple transposition exchanging i and i+1.
    static Perm simple(int n, int i) {
        Perm p = identity(n);
        if (i < 1 || i >= n) throw ArgumentError("Perm::simple: index out of range");
        std::swap(p.line_[i - 1], p.line_[i]);
        return p;
    }

    int n() const { return static_cast<int>(line_.size()); }
    int operator()(int i) const { return line_[i - 1]; }  // 1-based
    const std::vector<int>& one_line() const { return line_; }

    Perm inverse() const {
        std::vector<int> inv(line_.size());
        for (int i = 1; i <= n(); ++i) inv[line_[i - 1] - 1] = i;
        Perm p;
        p.line_ = std::move(inv);
        return p;
    }

    // Composition of functions: (a*b)(i) = a(b(i)).
    friend Perm operator*(const Perm& a, const Perm& b) {
        if (a.n() != b.n()) throw ArgumentError("Perm product: sizes differ");
        std::vector<int> l(a.line_.size());
        for (int i = 1; i <= a.n(); ++i) l[i - 1] = a(b(i));
        Perm p;
        p.line_ = std::move(l);
        return p;
    }

    // Right multiplication by s_i swaps the entries in positions i, i+1.
    Perm times_simple(int i) const {
        if (i < 1 || i >= n()) throw ArgumentError("times_simple: index out of range");
        Perm p = *this;
        std::swap(p.line_[i - 1], p.line_[i]);
        return p;
    }

    bool right_descent(int i) const { return line_[i - 1] > line_[i]; }

    // Image of the prefix {1, ..., k} as a bitmask (bit v-1 for value v).
    std::uint32_t prefix_mask(int k) const {
        std::uint32_t m = 0;
        for (int i = 0; i < k; ++i) m |= (1u << (line_[i] - 1));
        return m;
    }

    // Packs the one-line form into an integer key; needs n <= 15.
    std::uint64_t key() const {
        std::uint64_t k = 0;
        for (int v : line_) k = (k << 4) | static_cast<std::uint64_t>(v);
        return k;
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < line_.size(); ++i) {
            if (n() > 9 && i) s += ',';
            s += std::to_string(line_[i]);
        }
        return s;
    }

    friend bool operator==(const Perm& a, const Perm& b) { return a.line_ == b.line_; }
    friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) { return a.line_ <=> b.line_; }

private:
    std::vector<int> line_;
};

/// Coxeter length: the number of inversions.
inline int length(const Perm& w) {
    int inv = 0;
    for (int i = 1; i <= w.n(); ++i)
        for (int j = i + 1; j <= w.n(); ++j)
            if (w(i) > w(j)) ++inv;
    return inv;
}

inline Perm word_to_perm(int n, const Word& word) {
    Perm p = Perm::identity(n);
    for (int letter : word) p = p.times_simple(letter);
    return p;
}

/// Canonical reduced word: repeatedly strip the smallest right descent.
/// The product of the letters equals w and the letter count equals length(w).
inline Word reduced_word(const Perm& w) {
    Word rev;
    Perm cur = w;
    for (;;) {
        int i = 0;
        for (int j = 1; j < cur.n(); ++j)
            if (cur.right_descent(j)) {
                i = j;
                break;
            }
        if (i == 0) break;
        rev.push_back(i);
        cur = cur.times_simple(i);
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

/// Strong Bruhat order by the rank criterion: v <= w iff, for every (i, j),
/// |{a <= i : v(a) >= j}| <= |{a <= i : w(a) >= j}|.
inline bool bruhat_leq(const Perm& v, const Perm& w) {
    if (v.n() != w.n()) throw ArgumentError("bruhat_leq: sizes differ");
    const int n = v.n();
    for (int j = 2; j <= n; ++j) {
        int cv = 0, cw = 0;
        for (int i = 1; i <= n - 1; ++i) {
            if (v(i) >= j) ++cv;
            if (w(i) >= j) ++cw;
            if (cv > cw) return false;
        }
    }
    return true;
}

/// Unique length-additive factorization w = u * x with u in the parabolic
/// quotient W^J (ascending across J) and x in the parabolic subgroup W_J.
inline std::pair<Perm, Perm> parabolic_factor(const Perm& w, const std::vector<int>& J) {
    const int n = w.n();
    for (int j : J)
        if (j < 1 || j >= n) throw ArgumentError("parabolic_factor: J must lie in [1, n-1]");
    std::vector<bool> in_J(n, false);
    for (int j : J) in_J[j] = true;  // in_J[j] true means positions j, j+1 linked

    // sort the values of w within each J-linked block of positions
    std::vector<int> quotient_line(w.one_line());
    int start = 1;
    while (start <= n) {
        int stop = start;
        while (stop < n && in_J[stop]) ++stop;
        std::sort(quotient_line.begin() + (start - 1), quotient_line.begin() + stop);
        start = stop + 1;
    }
    Perm quotient(quotient_line);
    Perm part = quotient.inverse() * w;
    return {std::move(quotient), std::move(part)};
}

namespace detail {

inline Perm demazure_letters(const Perm& v, const Perm& w, bool upwards) {
    if (v.n() != w.n()) throw ArgumentError("demazure product: sizes differ");
    Perm cur = v;
    for (int i : reduced_word(w)) {
        const bool ascent = cur(i) < cur(i + 1);
        if (upwards ? ascent : !ascent) cur = cur.times_simple(i);
    }
    return cur;
}

}  // namespace detail

/// Demazure product: the Bruhat-maximum of {v x : x <= w}, computed letter
/// by letter over a reduced word of w.
inline Perm demazure_star(const Perm& v, const Perm& w) { return detail::demazure_letters(v, w, true); }

/// Downwards Demazure product: the Bruhat-minimum of {v x : x <= w}.
inline Perm demazure_down(const Perm& v, const Perm& w) { return detail::demazure_letters(v, w, false); }

namespace detail {

// All u obtained from w by one Bruhat cover step down (u = w t, one fewer
// inversion than w).
inline std::vector<Perm> covers_down(const Perm& w) {
    std::vector<Perm> out;
    const int n = w.n();
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            if (w(a) <= w(b)) continue;
            bool cover = true;
            for (int c = a + 1; c < b && cover; ++c)
                if (w(b) < w(c) && w(c) < w(a)) cover = false;
            if (!cover) continue;
            std::vector<int> line = w.one_line();
            std::swap(line[a - 1], line[b - 1]);
            out.emplace_back(std::move(line));
        }
    return out;
}

}  // namespace detail

/// The Bruhat interval {x : v <= x <= w}, enumerated by breadth-first
/// descent from w filtered by v <= x. Sorted by one-line notation.
inline std::vector<Perm> interval(const Perm& v, const Perm& w) {
    if (!bruhat_leq(v, w)) throw ArgumentError("interval: lower bound is not below upper bound");
    std::vector<Perm> members;
    std::unordered_set<std::uint64_t> seen;
    std::deque<Perm> queue;
    queue.push_back(w);
    seen.insert(w.key());
    while (!queue.empty()) {
        Perm x = std::move(queue.front());
        queue.pop_front();
        for (const Perm& y : detail::covers_down(x)) {
            if (seen.contains(y.key())) continue;
            if (!bruhat_leq(v, y)) continue;
            seen.insert(y.key());
            queue.push_back(y);
        }
        members.push_back(std::move(x));
    }
    std::sort(members.begin(), members.end());
    return members;
}

/// The interval [v, w] modulo W_J: the set {x^J : x in [v, w]}, sorted.
inline std::vector<Perm> interval_mod_parabolic(const Perm& v, const Perm& w, const std::vector<int>& J) {
    std::set<Perm> reps;
    for (const Perm& x : interval(v, w)) reps.insert(parabolic_factor(x, J).first);
    return {reps.begin(), reps.end()};
}

/// Replaces (v, w) by the smaller pair (v <| w_J^{-1}, w^J) indexing the
/// same interval modulo W_J.
inline std::pair<Perm, Perm> demazure_reduce(const Perm& v, const Perm& w, const std::vector<int>& J) {
    if (!bruhat_leq(v, w)) throw ArgumentError("demazure_reduce: lower bound is not below upper bound");
    auto [quotient, part] = parabolic_factor(w, J);
    return {demazure_down(v, part.inverse()), std::move(quotient)};
}

/// All permutations of {1, ..., n} in lexicographic one-line order.
inline std::vector<Perm> all_perms(int n) {
    std::vector<int> line(n);
    for (int i = 0; i < n; ++i) line[i] = i + 1;
    std::vector<Perm> out;
    do {
        out.push_back(Perm(line));
    } while (std::next_permutation(line.begin(), line.end()));
    return out;
}

}  // namespace flagpos
