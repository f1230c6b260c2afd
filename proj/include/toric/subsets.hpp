#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace toric {

// Elements are 1-based; element i occupies bit i-1. Ground sets are capped at
// 16 elements, so every subset fits in one word and set algebra is O(1).
using Subset = std::uint32_t;

constexpr int kMaxGround = 16;

inline int subset_size(Subset s) { return __builtin_popcount(s); }

inline bool subset_contains(Subset s, int element) {
    return (s >> (element - 1)) & 1u;
}

inline Subset singleton(int element) { return Subset{1} << (element - 1); }

inline bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }

inline bool is_proper_subset(Subset a, Subset b) {
    return a != b && is_subset(a, b);
}

// Smallest element of a nonempty subset.
inline int lowest_element(Subset s) { return __builtin_ctz(s) + 1; }

// Total order on subsets: by cardinality, then lexicographically on the
// sorted element lists. This is the member order used everywhere.
inline bool subset_less(Subset a, Subset b) {
    int sa = subset_size(a);
    int sb = subset_size(b);
    if (sa != sb) return sa < sb;
    while (a && b) {
        int ea = __builtin_ctz(a);
        int eb = __builtin_ctz(b);
        if (ea != eb) return ea < eb;
        a &= a - 1;
        b &= b - 1;
    }
    return false;
}

std::vector<int> subset_elements(Subset s);
Subset subset_of(std::initializer_list<int> elements);
Subset subset_of(const std::vector<int>& elements);
std::string subset_to_string(Subset s);

// Relabels a subset: image[e] is the new 1-based label of element e
// (index 0 unused). Elements mapped to 0 are dropped.
Subset relabel_subset(Subset s, const std::vector<int>& image);

}  // namespace toric
