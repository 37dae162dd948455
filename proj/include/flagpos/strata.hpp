#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "flagpos/coxeter.hpp"
#include "flagpos/errors.hpp"
#include "flagpos/lp.hpp"

namespace flagpos {

inline std::vector<int> complement_in_generators(int n, const std::vector<int>& K) {
    std::vector<bool> in_K(n, false);
    for (int k : K) {
        if (k < 1 || k > n - 1) throw ArgumentError("dimension set must lie in [1, n-1]");
        in_K[k] = true;
    }
    std::vector<int> J;
    for (int j = 1; j <= n - 1; ++j)
        if (!in_K[j]) J.push_back(j);
    return J;
}

/// Index (v, w) of a cell of the totally nonnegative region of the partial
/// flag variety with dimension set K: w a minimal coset representative
/// modulo the complementary parabolic, v <= w; the cell has dimension
/// length(w) - length(v).
struct CellIndex {
    int n = 0;
    Perm v, w;
    std::vector<int> K;

    CellIndex() = default;
    CellIndex(int ambient, Perm lower, Perm upper, std::vector<int> dims)
        : n(ambient), v(std::move(lower)), w(std::move(upper)), K(std::move(dims)) {
        if (v.n() != n || w.n() != n) throw ArgumentError("CellIndex: permutation sizes differ from n");
        const auto J = complement_in_generators(n, K);
        for (int j : J)
            if (w(j) > w(j + 1)) throw ArgumentError("CellIndex: w is not a minimal coset representative");
        if (!bruhat_leq(v, w)) throw ArgumentError("CellIndex: need v <= w");
    }

    int dimension() const { return length(w) - length(v); }

    friend bool operator==(const CellIndex& a, const CellIndex& b) {
        return a.n == b.n && a.K == b.K && a.v == b.v && a.w == b.w;
    }
    friend std::strong_ordering operator<=>(const CellIndex& a, const CellIndex& b) {
        if (auto c = a.w <=> b.w; c != 0) return c;
        return a.v <=> b.v;
    }
};

/// All cells for (n, K): w runs over minimal coset representatives, v over
/// {v <= w}; ordered by (w, v) in one-line lexicographic order.
inline std::vector<CellIndex> enumerate_cells(int n, const std::vector<int>& K) {
    if (K.empty()) throw ArgumentError("enumerate_cells: K must be nonempty");
    const auto J = complement_in_generators(n, K);
    std::vector<CellIndex> cells;
    for (const Perm& w : all_perms(n)) {
        bool minimal = true;
        for (int j : J)
            if (w(j) > w(j + 1)) {
                minimal = false;
                break;
            }
        if (!minimal) continue;
        for (const Perm& v : all_perms(n))
            if (bruhat_leq(v, w)) cells.emplace_back(n, v, w, K);
    }
    return cells;
}

/// The tuple of k-subset families cut out by a cell: for each k in K, the
/// prefix images {x({1..k}) : x in [v, w]} as bitmasks. Identifies the
/// matroid stratum containing the cell.
struct MatroidStratum {
    std::vector<int> K;
    std::vector<std::vector<std::uint32_t>> families;  // per k in K, sorted

    friend bool operator==(const MatroidStratum& a, const MatroidStratum& b) {
        return a.K == b.K && a.families == b.families;
    }
    friend std::strong_ordering operator<=>(const MatroidStratum& a, const MatroidStratum& b) {
        if (auto c = a.K <=> b.K; c != 0) return c;
        return a.families <=> b.families;
    }
};

inline MatroidStratum cell_matroid(const CellIndex& cell) {
    MatroidStratum s;
    s.K = cell.K;
    s.families.resize(cell.K.size());
    const auto members = interval(cell.v, cell.w);
    for (std::size_t a = 0; a < cell.K.size(); ++a) {
        std::vector<std::uint32_t> masks;
        masks.reserve(members.size());
        for (const Perm& x : members) masks.push_back(x.prefix_mask(cell.K[a]));
        std::sort(masks.begin(), masks.end());
        masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
        s.families[a] = std::move(masks);
    }
    return s;
}

struct InjectivityReport {
    int n = 0;
    std::vector<int> K;
    std::size_t cell_count = 0;
    std::size_t stratum_count = 0;
    bool injective = false;
    std::vector<std::pair<CellIndex, CellIndex>> collisions;
};

/// Maps every cell of (n, K) to its matroid stratum and reports whether the
/// map is injective, listing colliding cell pairs when it is not.
inline InjectivityReport injectivity_experiment(int n, const std::vector<int>& K, int max_n = 5) {
    if (n > max_n)
        throw ResourceError("injectivity_experiment: n exceeds the configured bound of " +
                            std::to_string(max_n));
    InjectivityReport report;
    report.n = n;
    report.K = K;
    std::map<MatroidStratum, std::vector<CellIndex>> groups;
    for (const CellIndex& cell : enumerate_cells(n, K)) {
        ++report.cell_count;
        groups[cell_matroid(cell)].push_back(cell);
    }
    report.stratum_count = groups.size();
    for (const auto& [stratum, cells] : groups)
        for (std::size_t i = 0; i < cells.size(); ++i)
            for (std::size_t j = i + 1; j < cells.size(); ++j)
                report.collisions.emplace_back(cells[i], cells[j]);
    report.injective = report.collisions.empty();
    return report;
}

/// Lattice polytope held by its vertex set: exactly the extreme points of
/// its own convex hull, sorted.
struct LatticePolytope {
    int dim = 0;
    std::vector<std::vector<Int>> vertices;

    static LatticePolytope from_points(int dim, std::vector<std::vector<Int>> points) {
        LatticePolytope p;
        p.dim = dim;
        p.vertices = extreme_points(std::move(points));
        return p;
    }

    friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
        return a.dim == b.dim && a.vertices == b.vertices;
    }
};

/// Equality as convex bodies: every vertex of each inside the hull of the
/// other.
inline bool polytope_equal(const LatticePolytope& a, const LatticePolytope& b) {
    if (a.dim != b.dim) return false;
    for (const auto& p : a.vertices)
        if (!in_convex_hull(p, b.vertices)) return false;
    for (const auto& q : b.vertices)
        if (!in_convex_hull(q, a.vertices)) return false;
    return true;
}

inline LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b) {
    if (a.dim != b.dim) throw ArgumentError("minkowski_sum: dimension mismatch");
    std::vector<std::vector<Int>> sums;
    sums.reserve(a.vertices.size() * b.vertices.size());
    for (const auto& p : a.vertices)
        for (const auto& q : b.vertices) {
            std::vector<Int> s(p.size());
            for (std::size_t i = 0; i < p.size(); ++i) s[i] = p[i] + q[i];
            sums.push_back(std::move(s));
        }
    return LatticePolytope::from_points(a.dim, std::move(sums));
}

/// Sum of unit vectors indexed by the prefix images: the moment-map image
/// of x for the dimension set K.
inline std::vector<Int> moment_image(const Perm& x, const std::vector<int>& K) {
    std::vector<Int> pt(x.n(), Int(0));
    for (int k : K)
        for (int i = 1; i <= k; ++i) pt[x(i) - 1] += 1;
    return pt;
}

/// Bruhat interval polytope of a cell: the convex hull of the moment-map
/// images of the interval [v, w].
inline LatticePolytope bip_vertices(const CellIndex& cell) {
    std::vector<std::vector<Int>> points;
    for (const Perm& x : interval(cell.v, cell.w)) points.push_back(moment_image(x, cell.K));
    return LatticePolytope::from_points(cell.n, std::move(points));
}

/// Checks the Minkowski decomposition of a cell's Bruhat interval polytope
/// into the single-level polytopes of its reduced Grassmannian pairs.
inline bool minkowski_check(const CellIndex& cell) {
    const LatticePolytope whole = bip_vertices(cell);
    LatticePolytope sum;
    bool first = true;
    for (int k : cell.K) {
        const auto J = complement_in_generators(cell.n, {k});
        auto [v2, w2] = demazure_reduce(cell.v, cell.w, J);
        const LatticePolytope part = bip_vertices(CellIndex(cell.n, v2, w2, {k}));
        sum = first ? part : minkowski_sum(sum, part);
        first = false;
    }
    return polytope_equal(whole, sum);
}

/// The level-k family of a cell's stratum must match the stratum of the
/// reduced Grassmannian cell obtained through the downwards Demazure
/// product; this is the reduction the stratification arguments rely on.
inline bool grassmann_consistency_check(const CellIndex& cell, int k) {
    std::size_t pos = 0;
    while (pos < cell.K.size() && cell.K[pos] != k) ++pos;
    if (pos == cell.K.size()) throw ArgumentError("grassmann_consistency_check: k is not in K");
    const MatroidStratum direct = cell_matroid(cell);
    const auto J = complement_in_generators(cell.n, {k});
    auto [v2, w2] = demazure_reduce(cell.v, cell.w, J);
    const MatroidStratum reduced = cell_matroid(CellIndex(cell.n, v2, w2, {k}));
    return direct.families[pos] == reduced.families[0];
}

}  // namespace flagpos
