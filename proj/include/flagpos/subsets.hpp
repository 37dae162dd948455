#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "flagpos/errors.hpp"

namespace flagpos {

/// A k-element subset of {1, ..., n}, stored strictly increasing.
/// Subsets of equal size compare lexicographically on their members.
struct SubsetIndex {
    int n = 0;
    std::vector<int> members;  // strictly increasing, values in [1, n]

    SubsetIndex() = default;
    SubsetIndex(int ambient, std::vector<int> elems) : n(ambient), members(std::move(elems)) {
        if (n < 0) throw ArgumentError("subset: negative ambient size");
        int prev = 0;
        for (int m : members) {
            if (m <= prev || m > n) throw ArgumentError("subset: members must be strictly increasing in [1, n]");
            prev = m;
        }
    }

    int size() const { return static_cast<int>(members.size()); }
    bool contains(int x) const {
        for (int m : members)
            if (m == x) return true;
        return false;
    }

    int sum() const { return std::accumulate(members.begin(), members.end(), 0); }

    SubsetIndex complement() const {
        std::vector<int> rest;
        rest.reserve(n - size());
        std::size_t at = 0;
        for (int x = 1; x <= n; ++x) {
            if (at < members.size() && members[at] == x) {
                ++at;
            } else {
                rest.push_back(x);
            }
        }
        return SubsetIndex(n, std::move(rest));
    }

    // Bit i-1 set iff i is a member; requires n <= 32.
    std::uint32_t mask() const {
        std::uint32_t m = 0;
        for (int x : members) m |= (1u << (x - 1));
        return m;
    }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(members[i]);
        }
        return out;
    }

    friend bool operator==(const SubsetIndex& a, const SubsetIndex& b) {
        return a.n == b.n && a.members == b.members;
    }
    friend std::strong_ordering operator<=>(const SubsetIndex& a, const SubsetIndex& b) {
        if (auto c = a.n <=> b.n; c != 0) return c;
        return a.members <=> b.members;
    }
};

/// All k-subsets of {1, ..., n} in lexicographic order.
inline std::vector<SubsetIndex> k_subsets(int n, int k) {
    if (k < 0 || n < 0 || k > n) throw ArgumentError("k_subsets: need 0 <= k <= n");
    std::vector<SubsetIndex> out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(SubsetIndex(n, cur));
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i + 1) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

}  // namespace flagpos
