#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "flagpos/errors.hpp"
#include "flagpos/matrix.hpp"
#include "flagpos/positivity.hpp"

namespace flagpos {

/// A partial flag in R^n with dimension set K: the span of the first k
/// columns of rep is the k-dimensional constituent, for each k in K.
/// K may be empty only for n = 1 (the one-point complete flag variety).
struct Flag {
    int n = 0;
    std::vector<int> K;
    Mat rep;

    Flag() = default;
    Flag(int ambient, std::vector<int> dims, Mat m) : n(ambient), K(std::move(dims)), rep(std::move(m)) {
        if (n < 1) throw ArgumentError("Flag: ambient dimension must be positive");
        if (K.empty() && n != 1) throw ArgumentError("Flag: K must be nonempty");
        int prev = 0;
        for (int k : K) {
            if (k <= prev || k > n - 1) throw ArgumentError("Flag: K must be strictly increasing within [1, n-1]");
            prev = k;
        }
        if (static_cast<int>(rep.rows()) != n) throw ArgumentError("Flag: representative has wrong row count");
        if (static_cast<int>(rep.cols()) < prev) throw ArgumentError("Flag: representative has too few columns");
        for (int k : K)
            if (rank(rep.columns(0, k)) != static_cast<std::size_t>(k))
                throw ArgumentError("Flag: first " + std::to_string(k) + " columns are rank deficient");
    }

    bool has_level(int k) const { return std::find(K.begin(), K.end(), k) != K.end(); }
    GrPoint level(int k) const { return GrPoint(rep.columns(0, k)); }
    bool complete() const { return static_cast<int>(K.size()) == n - 1; }
    bool interval_K() const {
        return K.empty() || K.back() - K.front() + 1 == static_cast<int>(K.size());
    }
};

/// Projective Plucker vector: the order-k flag minors normalized to a
/// primitive integer vector whose lexicographically first nonzero
/// coordinate is positive. Coordinates are listed in lexicographic subset
/// order.
struct PluckerVector {
    int n = 0;
    int k = 0;
    std::vector<std::pair<SubsetIndex, Int>> coords;

    static PluckerVector from_values(int n, int k, const std::vector<std::pair<SubsetIndex, Rat>>& values) {
        Int scale = 1;
        for (const auto& [I, q] : values) scale = lcm(scale, rat_den(q));
        std::vector<std::pair<SubsetIndex, Int>> entries;
        entries.reserve(values.size());
        Int common = 0;
        for (const auto& [I, q] : values) {
            Int z = rat_num(q) * (scale / rat_den(q));
            common = gcd(common, z);
            entries.emplace_back(I, std::move(z));
        }
        if (common == 0) throw StateError("PluckerVector: all coordinates vanish");
        int flip = 0;
        for (auto& [I, z] : entries) {
            z /= common;
            if (flip == 0 && z != 0) flip = (z < 0) ? -1 : 1;
        }
        if (flip < 0)
            for (auto& [I, z] : entries) z = -z;
        PluckerVector p;
        p.n = n;
        p.k = k;
        p.coords = std::move(entries);
        return p;
    }

    const Int& at(const SubsetIndex& I) const {
        for (const auto& [J, z] : coords)
            if (J == I) return z;
        throw ArgumentError("PluckerVector: no coordinate for subset {" + I.str() + "}");
    }

    bool all_positive() const {
        for (const auto& [I, z] : coords)
            if (z <= 0) return false;
        return true;
    }
    bool all_nonnegative() const {
        for (const auto& [I, z] : coords)
            if (z < 0) return false;
        return true;
    }

    friend bool operator==(const PluckerVector& a, const PluckerVector& b) {
        return a.n == b.n && a.k == b.k && a.coords == b.coords;
    }
};

/// Order-k Plucker vector of the flag: left-justified minors of the
/// representative, independent of the chosen representative.
inline PluckerVector plucker(const Flag& v, int k) {
    if (!v.has_level(k)) throw ArgumentError("plucker: level " + std::to_string(k) + " is not in K");
    const Mat a = v.rep.columns(0, k);
    const auto cols = k_subsets(k, k).front();
    std::vector<std::pair<SubsetIndex, Rat>> values;
    for (const auto& I : k_subsets(v.n, k)) values.emplace_back(I, minor(a, I, cols));
    return PluckerVector::from_values(v.n, k, values);
}

enum class PluckerClass { kPositive, kNonnegNotPositive, kNotNonneg };

enum class LusztigStatus {
    kPositiveWithWitness,
    kNotPositive,  // determined not totally positive (boundary or worse)
    kNotTnnWithCertificate,
    kUndecided,
};

enum class CertificateKind { kNegativeCoordinate, kRestrictionPattern };

/// Machine-checkable evidence that a flag lies outside the totally
/// nonnegative region. Either a mixed-sign pair of Plucker coordinates at
/// one level, or the restriction pattern: the lower level meets the span of
/// the first m coordinates in a line through e_1 + c e_m while the higher
/// level's restriction grows in dimension yet misses e_1 entirely, which is
/// incompatible with any totally nonnegative completion.
struct ObstructionCertificate {
    CertificateKind kind = CertificateKind::kRestrictionPattern;

    // restriction pattern
    int level_lo = 0, level_hi = 0;  // pair k < l in K
    int m = 0;                       // restriction size
    Rat c;                           // e_1 + c e_m spans the restricted lower level's line
    Mat restricted_lo, restricted_hi;

    // negative coordinate
    int level = 0;
    SubsetIndex positive_subset, negative_subset;
    Int positive_value, negative_value;
};

struct PositivityClass {
    PluckerClass plucker = PluckerClass::kNotNonneg;
    std::optional<LusztigStatus> lusztig;
    std::optional<Mat> witness;
    std::optional<ObstructionCertificate> certificate;
};

/// Classifies the flag by the signs of all its Plucker coordinates.
inline PositivityClass classify_plucker(const Flag& v) {
    bool positive = true, nonneg = true;
    for (int k : v.K) {
        const PluckerVector p = plucker(v, k);
        positive = positive && p.all_positive();
        nonneg = nonneg && p.all_nonnegative();
    }
    PositivityClass out;
    out.plucker = positive ? PluckerClass::kPositive
                           : (nonneg ? PluckerClass::kNonnegNotPositive : PluckerClass::kNotNonneg);
    return out;
}

namespace detail {

// Completes the first n-1 columns of the representative to an invertible
// n x n matrix with positive determinant.
inline Mat complete_to_square(const Flag& v) {
    Mat a = v.rep.columns(0, static_cast<std::size_t>(v.n) - 1);
    for (int i = 1; i <= v.n; ++i) {
        const Mat candidate = a.hstack(Mat::basis_column(v.n, i));
        const Rat d = det(candidate);
        if (d == 0) continue;
        if (d < 0) {
            Mat flipped = candidate;
            for (int r = 0; r < v.n; ++r) flipped(r, v.n - 1) = -flipped(r, v.n - 1);
            return flipped;
        }
        return candidate;
    }
    throw StateError("complete_to_square: representative is rank deficient");
}

// Left-to-right column elimination to lower-triangular form; preserves all
// left-justified minors.
inline Mat lower_triangularize(Mat a) {
    const std::size_t n = a.rows();
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t m2 = j + 1; m2 < n; ++m2) {
            if (a(j, m2) == 0) continue;
            const Rat f = a(j, m2) / a(j, j);
            for (std::size_t i = 0; i < n; ++i) a(i, m2) -= f * a(i, j);
        }
    }
    return a;
}

}  // namespace detail

/// Totally positive witness for a Plucker-positive complete flag: after
/// lower-triangularizing a representative A, the symmetrized product
/// g = A Diag(t^{n-1}, ..., t, 1) A^T represents the same flag and is
/// totally positive for large t. Searches t over powers of two starting at
/// one; returns the witness together with the t used.
inline std::pair<Mat, Int> tp_witness_complete_detail(const Flag& v) {
    if (v.n == 1) return {Mat::identity(1), Int(1)};
    if (!v.complete()) throw StateError("tp_witness_complete: flag must be complete");
    if (classify_plucker(v).plucker != PluckerClass::kPositive)
        throw StateError("tp_witness_complete: flag is not Plucker-positive");

    const Mat a = detail::lower_triangularize(detail::complete_to_square(v));
    const std::size_t n = a.rows();
    Int t = 1;
    for (int attempt = 0; attempt <= 64; ++attempt, t *= 2) {
        Mat d(n, n);
        Rat power(1);
        for (std::size_t j = n; j-- > 0;) {
            d(j, j) = power;
            power *= Rat(t);
        }
        const Mat g = a * d * a.transpose();
        if (is_totally_positive(g)) return {g, t};
    }
    throw StateError("tp_witness_complete: no totally positive witness up to t = 2^64");
}

inline Mat tp_witness_complete(const Flag& v) { return tp_witness_complete_detail(v).first; }

/// Completes a Plucker-positive flag on a dimension interval K = [k, l] to
/// a complete flag, Plucker-positive at every level 1..n-1 and agreeing
/// with the input on K.
inline Flag complete_flag(const Flag& v) {
    if (!v.interval_K()) throw ArgumentError("complete_flag: K must be an interval of integers");
    if (v.n == 1 || v.complete()) return v;
    if (classify_plucker(v).plucker != PluckerClass::kPositive)
        throw StateError("complete_flag: flag is not Plucker-positive");

    const int lo = v.K.front(), hi = v.K.back();

    // chain below lo by repeated codimension-one cuts
    std::vector<GrPoint> lower(lo);  // lower[j-1] spans the level-j subspace, j <= lo
    lower[lo - 1] = v.level(lo);
    for (int j = lo - 1; j >= 1; --j) lower[j - 1] = extend_down(lower[j]);

    std::vector<std::vector<Rat>> columns;
    for (int j = 1; j <= lo; ++j) {
        // a vector of level j outside level j-1
        const Mat chosen = [&] {
            if (j == 1) return lower[0].rep.columns(0, 1);
            for (int c = 0; c < lower[j - 1].k; ++c) {
                Mat cand = lower[j - 1].rep.columns(c, 1);
                if (!lower[j - 2].contains(cand)) return cand;
            }
            throw StateError("complete_flag: nested levels are not properly nested");
        }();
        columns.push_back(chosen.column(0));
    }
    for (int j = lo; j < hi; ++j) columns.push_back(v.rep.column(j));

    GrPoint top = v.level(hi);
    for (int j = hi + 1; j <= v.n - 1; ++j) {
        top = extend_up(top);
        columns.push_back(top.rep.column(top.k - 1));
    }

    std::vector<int> full(v.n - 1);
    for (int i = 0; i < v.n - 1; ++i) full[i] = i + 1;
    return Flag(v.n, std::move(full), Mat::from_columns(columns));
}

inline SubsetIndex cyclic_rotate_up(const SubsetIndex& I) {
    std::vector<int> shifted;
    shifted.reserve(I.members.size());
    for (int x : I.members) shifted.push_back(x == I.n ? 1 : x + 1);
    std::sort(shifted.begin(), shifted.end());
    return SubsetIndex(I.n, std::move(shifted));
}

enum class Parity { kEven, kOdd };

inline Parity parity_of(int x) { return (x % 2 == 0) ? Parity::kEven : Parity::kOdd; }

/// Signed left cyclic shift: coordinates rotate down one slot and the first
/// coordinate wraps to the last with sign +1 for odd parity, -1 for even.
/// When every k in K has parity matching eps, the Plucker coordinates of
/// the result are the input's with all indices rotated down by one.
inline Flag cyclic_shift(const Flag& v, Parity eps) {
    Mat sigma(v.n, v.n);
    for (int i = 0; i + 1 < v.n; ++i) sigma(i, i + 1) = 1;
    sigma(v.n - 1, 0) = (eps == Parity::kOdd) ? Rat(1) : Rat(-1);
    return Flag(v.n, v.K, sigma * v.rep);
}

namespace detail {

// Looks for c != 0 with e_1 + c e_m inside the span of an m x d echelon
// representative. Returns nothing when the span meets span(e_1, e_m) in a
// line missing e_1-with-e_m support, or in dimension 0 or 2.
inline std::optional<Rat> wrap_vector_coefficient(const GrPoint& g) {
    const int m = g.n;
    if (m < 2 || g.k == 0) return std::nullopt;
    const Mat middle = g.rep.row_range(1, m - 2);  // coordinates 2..m-1 must vanish
    const Mat coeffs = nullspace(middle);
    if (coeffs.cols() != 1) return std::nullopt;  // 0: empty meet; 2: e_1 already inside
    const Mat u = g.rep * coeffs;
    if (u(0, 0) == 0 || u(m - 1, 0) == 0) return std::nullopt;
    return u(m - 1, 0) / u(0, 0);
}

}  // namespace detail

/// Searches for machine-checkable evidence that the flag is outside the
/// totally nonnegative region: the restriction pattern over m = 2..n and
/// level pairs k < l in K, then a mixed-sign pair of Plucker coordinates.
/// Returns nothing when neither pattern is present; absence is
/// inconclusive, not a membership proof.
inline std::optional<ObstructionCertificate> certify_not_tnn(const Flag& v) {
    for (int m = 2; m <= v.n; ++m) {
        std::vector<GrPoint> restricted;
        restricted.reserve(v.K.size());
        for (int k : v.K) restricted.push_back(restrict_to(v.level(k), m));
        for (std::size_t a = 0; a < v.K.size(); ++a) {
            const auto c = detail::wrap_vector_coefficient(restricted[a]);
            if (!c) continue;
            for (std::size_t b = a + 1; b < v.K.size(); ++b) {
                if (restricted[b].k <= restricted[a].k) continue;
                if (restricted[b].contains(Mat::basis_column(m, 1))) continue;
                ObstructionCertificate cert;
                cert.kind = CertificateKind::kRestrictionPattern;
                cert.level_lo = v.K[a];
                cert.level_hi = v.K[b];
                cert.m = m;
                cert.c = *c;
                cert.restricted_lo = restricted[a].rep;
                cert.restricted_hi = restricted[b].rep;
                return cert;
            }
        }
    }

    for (int k : v.K) {
        const PluckerVector p = plucker(v, k);
        const std::pair<SubsetIndex, Int>* pos = nullptr;
        const std::pair<SubsetIndex, Int>* neg = nullptr;
        for (const auto& entry : p.coords) {
            if (entry.second > 0 && !pos) pos = &entry;
            if (entry.second < 0 && !neg) neg = &entry;
        }
        if (pos && neg) {
            ObstructionCertificate cert;
            cert.kind = CertificateKind::kNegativeCoordinate;
            cert.level = k;
            cert.positive_subset = pos->first;
            cert.positive_value = pos->second;
            cert.negative_subset = neg->first;
            cert.negative_value = neg->second;
            return cert;
        }
    }
    return std::nullopt;
}

/// Re-derives every condition of a certificate from the flag itself.
inline bool validate_certificate(const Flag& v, const ObstructionCertificate& cert) {
    if (cert.kind == CertificateKind::kNegativeCoordinate) {
        if (!v.has_level(cert.level)) return false;
        const PluckerVector p = plucker(v, cert.level);
        return p.at(cert.positive_subset) == cert.positive_value && cert.positive_value > 0 &&
               p.at(cert.negative_subset) == cert.negative_value && cert.negative_value < 0;
    }
    if (!v.has_level(cert.level_lo) || !v.has_level(cert.level_hi)) return false;
    if (cert.level_lo >= cert.level_hi || cert.m < 2 || cert.m > v.n || cert.c == 0) return false;
    const GrPoint lo = restrict_to(v.level(cert.level_lo), cert.m);
    const GrPoint hi = restrict_to(v.level(cert.level_hi), cert.m);
    if (!spans_equal(lo.rep, cert.restricted_lo) || !spans_equal(hi.rep, cert.restricted_hi)) return false;
    Mat probe(cert.m, 1);
    probe(0, 0) = 1;
    probe(cert.m - 1, 0) += cert.c;
    if (!lo.contains(probe)) return false;
    if (hi.contains(Mat::basis_column(cert.m, 1))) return false;
    return hi.k > lo.k;
}

/// Builds the two-level obstruction flag for a dimension set K containing
/// consecutive members k < l with a gap of at least two: Plucker-nonnegative
/// at every order in K, yet carrying a negative left-justified minor of the
/// skipped order k+1, and certified outside the totally nonnegative region.
inline std::pair<Flag, ObstructionCertificate> converse_counterexample(int n, const std::vector<int>& K,
                                                                       int k, int l) {
    auto pos = std::find(K.begin(), K.end(), k);
    if (pos == K.end() || std::next(pos) == K.end() || *std::next(pos) != l)
        throw ArgumentError("converse_counterexample: k and l must be consecutive members of K");
    if (l - k < 2) throw ArgumentError("converse_counterexample: need l - k >= 2");
    if (n < k + 3) throw ArgumentError("converse_counterexample: need n >= k + 3");
    if (K.back() > n - 1) throw ArgumentError("converse_counterexample: K must lie in [1, n-1]");

    const Rat sign = (k % 2 == 1) ? Rat(1) : Rat(-1);
    std::vector<std::vector<Rat>> columns;
    for (int j = 1; j <= k - 1; ++j) columns.push_back(Mat::basis_column(n, 4 + j).column(0));
    {
        std::vector<Rat> dup(n, Rat(0));
        dup[0] = sign;
        dup[3] = sign;
        columns.push_back(std::move(dup));
    }
    for (int i : {2, 3}) columns.push_back((sign * Mat::basis_column(n, i)).column(0));
    for (int j = k + 4; j <= n; ++j) columns.push_back(Mat::basis_column(n, j).column(0));

    Flag flag(n, K, Mat::from_columns(columns));
    if (classify_plucker(flag).plucker != PluckerClass::kNonnegNotPositive)
        throw StateError("converse_counterexample: flag is not nonnegative-but-not-positive");
    const Flag skipped(n, {k + 1}, flag.rep);
    if (plucker(skipped, k + 1).all_nonnegative())
        throw StateError("converse_counterexample: expected negative minor of the skipped order");
    auto cert = certify_not_tnn(flag);
    if (!cert || cert->kind != CertificateKind::kRestrictionPattern)
        throw StateError("converse_counterexample: obstruction pattern not found");
    return {std::move(flag), std::move(*cert)};
}

/// Builds a totally nonnegative flag whose signed cyclic shift leaves the
/// totally nonnegative region, with a certificate for the shift. Uses the
/// first two members of K.
inline std::tuple<Flag, Flag, ObstructionCertificate> cyclic_counterexample(int n, const std::vector<int>& K,
                                                                            Parity eps) {
    if (K.size() < 2) throw ArgumentError("cyclic_counterexample: need |K| >= 2");
    if (n < 3) throw ArgumentError("cyclic_counterexample: need n >= 3");
    if (K.back() > n - 1) throw ArgumentError("cyclic_counterexample: K must lie in [1, n-1]");
    const int k = K.front();

    const Rat sign = (k % 2 == 1) ? Rat(1) : Rat(-1);
    std::vector<std::vector<Rat>> columns;
    for (int j = 1; j <= k - 1; ++j) columns.push_back(Mat::basis_column(n, 2 + j).column(0));
    {
        std::vector<Rat> dup(n, Rat(0));
        dup[0] = sign;
        dup[1] = sign;
        columns.push_back(std::move(dup));
    }
    for (int j = k + 2; j <= n; ++j) columns.push_back(Mat::basis_column(n, j).column(0));

    Flag w(n, K, Mat::from_columns(columns));
    {
        std::vector<int> full(n - 1);
        for (int i = 0; i < n - 1; ++i) full[i] = i + 1;
        if (classify_plucker(Flag(n, full, w.rep)).plucker == PluckerClass::kNotNonneg)
            throw StateError("cyclic_counterexample: base flag is not nonnegative at every order");
    }
    Flag x = cyclic_shift(w, eps);
    auto cert = certify_not_tnn(x);
    if (!cert || cert->kind != CertificateKind::kRestrictionPattern)
        throw StateError("cyclic_counterexample: obstruction pattern not found");
    return {std::move(w), std::move(x), std::move(*cert)};
}

/// Decides Lusztig positivity where a decision is available. For an
/// interval K this is a complete trichotomy: Plucker-positive flags get a
/// verified totally positive witness, boundary flags are determined not
/// positive, and mixed-sign flags are certified outside the totally
/// nonnegative region. For a non-interval K the problem is semialgebraic:
/// a caller-supplied interval refinement can witness positivity, an
/// obstruction can rule out total nonnegativity, and otherwise the status
/// is undecided.
inline PositivityClass is_lusztig_positive(const Flag& v, const std::optional<Flag>& refinement = std::nullopt) {
    PositivityClass out = classify_plucker(v);

    if (refinement) {
        if (refinement->n != v.n || !refinement->interval_K())
            throw ArgumentError("is_lusztig_positive: refinement must be a flag on an interval K");
        for (int k : v.K) {
            if (!refinement->has_level(k) || !spans_equal(refinement->rep.columns(0, k), v.rep.columns(0, k)))
                throw ArgumentError("is_lusztig_positive: refinement does not agree with the flag on K");
        }
    }

    if (v.interval_K()) {
        switch (out.plucker) {
            case PluckerClass::kPositive: {
                auto [g, t] = tp_witness_complete_detail(complete_flag(v));
                (void)t;
                out.lusztig = LusztigStatus::kPositiveWithWitness;
                out.witness = std::move(g);
                break;
            }
            case PluckerClass::kNonnegNotPositive:
                out.lusztig = LusztigStatus::kNotPositive;
                break;
            case PluckerClass::kNotNonneg:
                out.lusztig = LusztigStatus::kNotTnnWithCertificate;
                out.certificate = certify_not_tnn(v);  // mixed-sign pair always present here
                break;
        }
        return out;
    }

    if (out.plucker == PluckerClass::kPositive && refinement &&
        classify_plucker(*refinement).plucker == PluckerClass::kPositive) {
        auto [g, t] = tp_witness_complete_detail(complete_flag(*refinement));
        (void)t;
        out.lusztig = LusztigStatus::kPositiveWithWitness;
        out.witness = std::move(g);
        return out;
    }

    if (auto cert = certify_not_tnn(v)) {
        out.lusztig = LusztigStatus::kNotTnnWithCertificate;
        out.certificate = std::move(cert);
    } else {
        out.lusztig = LusztigStatus::kUndecided;
    }
    return out;
}

}  // namespace flagpos
