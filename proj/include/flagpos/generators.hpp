#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "flagpos/flags.hpp"
#include "flagpos/matrix.hpp"

namespace flagpos {

/// Deterministic random source for the randomized suites. Only the raw
/// engine output is used, so a fixed seed reproduces byte-identical runs.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    int uniform(int lo, int hi) {  // inclusive
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<int>(engine_() % span);
    }

    Rat rational(int num_lo, int num_hi, int den_hi) {
        return Rat(Int(uniform(num_lo, num_hi)), Int(uniform(1, den_hi)));
    }

    Rat positive_rational(int num_hi, int den_hi) {
        return Rat(Int(uniform(1, num_hi)), Int(uniform(1, den_hi)));
    }

private:
    std::mt19937_64 engine_;
};

inline Mat random_rational_matrix(std::size_t rows, std::size_t cols, Rng& rng, int lo = -4, int hi = 4,
                                  int den_hi = 3) {
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.rational(lo, hi, den_hi);
    return m;
}

/// I + c E_{i+1,i} (lower) or I + c E_{i,i+1} (upper), the elementary
/// bidiagonal factors of the positivity parametrizations.
inline Mat bidiagonal_factor(int n, int i, const Rat& c, bool lower) {
    Mat m = Mat::identity(n);
    if (i < 1 || i >= n) throw ArgumentError("bidiagonal_factor: index out of range");
    if (lower)
        m(i, i - 1) = c;
    else
        m(i - 1, i) = c;
    return m;
}

namespace detail {

// A reduced word for the longest permutation: 1, 21, 321, ...
inline std::vector<int> longest_word(int n) {
    std::vector<int> word;
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i; j >= 1; --j) word.push_back(j);
    return word;
}

}  // namespace detail

/// Totally positive matrix: lower and upper elementary factors with
/// positive parameters over a reduced word of the longest permutation,
/// around a positive diagonal.
inline Mat random_tp_matrix(int n, Rng& rng) {
    Mat g = Mat::identity(n);
    for (int i : detail::longest_word(n)) g = g * bidiagonal_factor(n, i, rng.positive_rational(3, 2), true);
    Mat d(n, n);
    for (int i = 0; i < n; ++i) d(i, i) = rng.positive_rational(3, 2);
    g = g * d;
    for (int i : detail::longest_word(n)) g = g * bidiagonal_factor(n, i, rng.positive_rational(3, 2), false);
    return g;
}

/// Invertible totally nonnegative matrix: a random product of elementary
/// factors with nonnegative (possibly zero) parameters and a positive
/// diagonal; reaches boundary strata.
inline Mat random_tnn_matrix(int n, Rng& rng, int factor_count = 0) {
    if (factor_count <= 0) factor_count = 2 * n * n;
    Mat g = Mat::identity(n);
    for (int f = 0; f < factor_count; ++f) {
        const int choice = rng.uniform(0, 2);
        if (choice == 2) {
            Mat d = Mat::identity(n);
            for (int i = 0; i < n; ++i) d(i, i) = rng.positive_rational(2, 2);
            g = g * d;
        } else if (n >= 2) {
            const Rat c = Rat(Int(rng.uniform(0, 2)), Int(rng.uniform(1, 2)));
            g = g * bidiagonal_factor(n, rng.uniform(1, n - 1), c, choice == 0);
        }
    }
    return g;
}

/// Plucker-positive flag on the dimension set K, represented by the columns
/// of a totally positive matrix.
inline Flag random_plucker_positive_flag(int n, const std::vector<int>& K, Rng& rng) {
    return Flag(n, K, random_tp_matrix(n, rng));
}

/// Plucker-nonnegative flag built from an invertible totally nonnegative
/// matrix.
inline Flag random_tnn_flag(int n, const std::vector<int>& K, Rng& rng) {
    return Flag(n, K, random_tnn_matrix(n, rng));
}

/// Plucker-nonnegative Grassmannian point from a totally nonnegative matrix.
inline GrPoint random_nonneg_gr_point(int n, int k, Rng& rng) {
    return GrPoint(random_tnn_matrix(n, rng).columns(0, k));
}

}  // namespace flagpos
