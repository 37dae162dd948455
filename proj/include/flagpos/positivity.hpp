#pragma once

#include <utility>
#include <vector>

#include "flagpos/errors.hpp"
#include "flagpos/matrix.hpp"

namespace flagpos {

/// A point of the Grassmannian of k-dimensional subspaces of R^n,
/// held as an n x k representative matrix of full column rank.
struct GrPoint {
    int n = 0;
    int k = 0;
    Mat rep;

    GrPoint() = default;
    explicit GrPoint(Mat m) : n(static_cast<int>(m.rows())), k(static_cast<int>(m.cols())), rep(std::move(m)) {
        if (rank(rep) != static_cast<std::size_t>(k))
            throw ArgumentError("GrPoint: representative is not of full column rank");
    }

    static GrPoint zero_space(int ambient) { return GrPoint(Mat(ambient, 0)); }

    bool contains(const Mat& v) const { return in_span(rep, v); }
    bool contains_subspace(const GrPoint& other) const {
        if (other.n != n) return false;
        return rank(rep.hstack(other.rep)) == static_cast<std::size_t>(k);
    }
};

/// Sign pattern of the top-order (k x k) minors of an n x k matrix.
/// Plucker coordinates are projective, so "positive" means a shared strict
/// sign and "nonnegative" a shared weak sign. A full-rank representative
/// always has a nonzero top minor, so the all-zero pattern cannot occur.
enum class MinorSigns {
    kStrictlyPositive,
    kStrictlyNegative,
    kWeaklyPositive,  // all >= 0 with at least one zero
    kWeaklyNegative,  // all <= 0 with at least one zero
    kMixed,
};

inline MinorSigns top_minor_signs(const Mat& rep) {
    const int n = static_cast<int>(rep.rows()), k = static_cast<int>(rep.cols());
    if (k == 0) return MinorSigns::kStrictlyPositive;  // empty minor is 1
    bool pos = false, neg = false, zero = false;
    const auto all = k_subsets(k, k).front();
    for (const auto& I : k_subsets(n, k)) {
        const int s = sign_of(minor(rep, I, all));
        pos = pos || s > 0;
        neg = neg || s < 0;
        zero = zero || s == 0;
        if (pos && neg) return MinorSigns::kMixed;
    }
    if (pos) return zero ? MinorSigns::kWeaklyPositive : MinorSigns::kStrictlyPositive;
    return zero ? MinorSigns::kWeaklyNegative : MinorSigns::kStrictlyNegative;
}

inline bool plucker_positive(const Mat& rep) {
    const auto s = top_minor_signs(rep);
    return s == MinorSigns::kStrictlyPositive || s == MinorSigns::kStrictlyNegative;
}

inline bool plucker_nonneg(const Mat& rep) { return top_minor_signs(rep) != MinorSigns::kMixed; }

/// True iff every minor of every order is strictly positive.
inline bool is_totally_positive(const Mat& a) {
    if (!a.square()) throw ArgumentError("is_totally_positive: matrix not square");
    const int n = static_cast<int>(a.rows());
    for (int order = 1; order <= n; ++order)
        for (const auto& [I, J, value] : all_minors(a, order))
            if (value <= 0) return false;
    return true;
}

/// The n x n Gauss kernel matrix with entries t^((i-j)^2), using 0^0 = 1:
/// the identity at t = 0 and totally positive for 0 < t < 1. The family is
/// singular at t = 1, so the domain is [0, 1).
inline Mat gauss_kernel_matrix(int n, const Rat& t) {
    if (t < 0 || t >= 1) throw ArgumentError("gauss_kernel_matrix: t must lie in [0, 1)");
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const long d = i - j;
            m(i, j) = (d == 0) ? Rat(1) : rat_pow(t, static_cast<unsigned long>(d * d));
        }
    return m;
}

/// Fekete criterion for an n x (k+1) matrix: all left-justified k x k minors
/// positive and all (k+1) x (k+1) consecutive-row minors positive. This
/// implies every (k+1)-order minor is positive.
inline bool fekete_positive(const Mat& a) {
    const int n = static_cast<int>(a.rows());
    const int kp1 = static_cast<int>(a.cols());
    if (kp1 < 1 || n < kp1) throw ArgumentError("fekete_positive: need an n x (k+1) matrix with n >= k+1");
    const int k = kp1 - 1;
    if (k > 0) {
        const SubsetIndex left(kp1, [&] {
            std::vector<int> c(k);
            for (int i = 0; i < k; ++i) c[i] = i + 1;
            return c;
        }());
        for (const auto& I : k_subsets(n, k))
            if (minor(a, I, left) <= 0) return false;
    }
    const SubsetIndex all_cols(kp1, [&] {
        std::vector<int> c(kp1);
        for (int i = 0; i < kp1; ++i) c[i] = i + 1;
        return c;
    }());
    for (int start = 1; start + k <= n; ++start) {
        std::vector<int> win(kp1);
        for (int i = 0; i < kp1; ++i) win[i] = start + i;
        if (minor(a, SubsetIndex(n, win), all_cols) <= 0) return false;
    }
    return true;
}

namespace detail {

// Representative with all top minors nonnegative; flips one column's sign
// when the shared sign is negative. Mixed signs are rejected.
inline Mat nonneg_signed_rep(const GrPoint& v, const char* who) {
    const auto s = top_minor_signs(v.rep);
    if (s == MinorSigns::kMixed) throw StateError(std::string(who) + ": input is not Plucker-nonnegative");
    if (s == MinorSigns::kStrictlyNegative || s == MinorSigns::kWeaklyNegative) {
        Mat m = v.rep;
        for (std::size_t i = 0; i < m.rows(); ++i) m(i, 0) = -m(i, 0);
        return m;
    }
    return v.rep;
}

}  // namespace detail

/// Extends a Plucker-positive V in Gr(k, n) to a Plucker-positive point of
/// Gr(k+1, n) containing it. The appended column starts with k zeros; each
/// following entry is the least positive integer making the consecutive-row
/// window minor positive, which by the Fekete criterion forces every
/// top-order minor of the result positive. Boundary inputs are accepted as
/// long as the consecutive-row cofactors stay positive; the output is
/// always verified strictly.
inline GrPoint extend_up(const GrPoint& v) {
    if (v.k > v.n - 1) throw StateError("extend_up: subspace dimension must be at most n-1");
    const Mat a = detail::nonneg_signed_rep(v, "extend_up");
    const int n = v.n, k = v.k;

    Mat b(n, k + 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) b(i, j) = a(i, j);

    const SubsetIndex win_cols(k + 1, [&] {
        std::vector<int> c(k + 1);
        for (int i = 0; i <= k; ++i) c[i] = i + 1;
        return c;
    }());
    for (int i = k + 1; i <= n; ++i) {
        // window rows [i-k, i]; the minor is affine in the new entry b(i-1, k)
        std::vector<int> win(k + 1);
        for (int j = 0; j <= k; ++j) win[j] = i - k + j;
        const SubsetIndex rows(n, win);
        const Rat base = minor(b, rows, win_cols);  // entry still zero here
        std::vector<int> top(k);
        for (int j = 0; j < k; ++j) top[j] = i - k + j;
        std::vector<int> firstk(k);
        for (int j = 0; j < k; ++j) firstk[j] = j + 1;
        const Rat coeff = k == 0 ? Rat(1) : minor(b, SubsetIndex(n, top), SubsetIndex(k + 1, firstk));
        if (coeff <= 0) throw StateError("extend_up: vanishing consecutive-row cofactor");
        // least positive integer w with base + w * coeff > 0
        Int w = rat_floor(-base / coeff) + 1;
        if (w < 1) w = 1;
        b(i - 1, k) = Rat(w);
    }
    if (top_minor_signs(b) != MinorSigns::kStrictlyPositive)
        throw StateError("extend_up: result is not strictly Plucker-positive");
    return GrPoint(std::move(b));
}

/// Orthogonal complement under the alternating-sign pairing
/// <v, w> = v1 w1 - v2 w2 + v3 w3 - ...; complementary minors of V and
/// perp(V) agree up to one global scalar.
inline GrPoint perp(const GrPoint& v) {
    Mat pairing = v.rep.transpose();  // k x n
    for (std::size_t i = 0; i < pairing.rows(); ++i)
        for (std::size_t j = 1; j < pairing.cols(); j += 2) pairing(i, j) = -pairing(i, j);
    return GrPoint(nullspace(pairing));
}

/// Strictly Plucker-positive codimension-one subspace of V, obtained by
/// extending the complement and dualizing back. Accepts the same boundary
/// inputs as extend_up, read through the complement.
inline GrPoint extend_down(const GrPoint& v) {
    if (v.k < 1) throw StateError("extend_down: subspace dimension must be at least 1");
    if (!plucker_nonneg(v.rep)) throw StateError("extend_down: input is not Plucker-nonnegative");
    return perp(extend_up(perp(v)));
}

/// Intersection with the span of the first m coordinates, as a point of
/// Gr(d, m). A Plucker-nonnegative input yields a Plucker-nonnegative
/// result. The representative is returned in reduced column echelon form.
inline GrPoint restrict_to(const GrPoint& v, int m) {
    if (m < 0 || m > v.n) throw ArgumentError("restrict_to: m out of range");
    const Mat bottom = v.rep.row_range(m, v.n - m);  // rows m+1..n, must vanish
    const Mat coeffs = nullspace(bottom);            // k x d
    const Mat inside = v.rep * coeffs;               // n x d, zero below row m
    return GrPoint(column_echelon(inside.row_range(0, m)).first);
}

/// For nested Plucker-nonnegative V in Gr(k, n) and W in Gr(k+1, n) with
/// e_1 + c e_n in V, the first unit vector is forced into W; returns whether
/// e_1 lies in W. A false return on valid inputs indicates a bug.
inline bool nonneg_extension_contains_e1(const GrPoint& v, const GrPoint& w, const Rat& c) {
    if (v.n != w.n) throw ArgumentError("nonneg_extension_contains_e1: ambient dimensions differ");
    if (w.k != v.k + 1) throw ArgumentError("nonneg_extension_contains_e1: dimensions must differ by one");
    if (!w.contains_subspace(v)) throw ArgumentError("nonneg_extension_contains_e1: V is not contained in W");
    if (!plucker_nonneg(v.rep) || !plucker_nonneg(w.rep))
        throw ArgumentError("nonneg_extension_contains_e1: inputs must be Plucker-nonnegative");
    Mat probe(v.n, 1);
    probe(0, 0) = 1;
    probe(v.n - 1, 0) += c;
    if (!v.contains(probe)) throw ArgumentError("nonneg_extension_contains_e1: e_1 + c e_n is not in V");
    return w.contains(Mat::basis_column(w.n, 1));
}

}  // namespace flagpos
