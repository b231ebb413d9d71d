#pragma once

// Small brute-force counters used only by the tests. They share no code with
// the library enumerators: every object is generated from a bitmask or a
// mixed-radix counter and its piece weights are read off directly.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

inline unsigned mex(const std::vector<int>& weights)
{
    for (unsigned m = 1;; ++m) {
        if (std::find(weights.begin(), weights.end(), static_cast<int>(m)) == weights.end()) {
            return m;
        }
    }
}

// Compositions of n: bit i of a mask in [0, 2^{n-1}) cuts after position i+1.
template <typename Fn>
void compositions(unsigned n, Fn&& fn)
{
    if (n == 0) {
        fn(std::vector<int>{});
        return;
    }
    for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
        std::vector<int> parts;
        int run = 1;
        for (unsigned i = 0; i + 1 < n; ++i) {
            if (mask >> i & 1U) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        fn(parts);
    }
}

template <typename Fn>
void partitions(unsigned n, Fn&& fn)
{
    compositions(n, [&](const std::vector<int>& p) {
        if (std::is_sorted(p.begin(), p.end(), std::greater<int>())) {
            fn(p);
        }
    });
}

// Mixed-radix counter: digit i ranges over 0..i.
template <typename Fn>
void inversion_sequences(unsigned n, Fn&& fn)
{
    std::vector<int> x(n, 0);
    while (true) {
        fn(x);
        unsigned i = n;
        while (i > 0) {
            --i;
            if (x[i] < static_cast<int>(i)) {
                ++x[i];
                break;
            }
            x[i] = 0;
            if (i == 0) {
                return;
            }
        }
        if (n == 0) {
            return;
        }
    }
}

// Balanced words as 2n-bit masks, bit set = up step.
template <typename Fn>
void dyck_words(unsigned n, Fn&& fn)
{
    for (std::uint32_t mask = 0; mask < (1U << (2 * n)); ++mask) {
        if (static_cast<unsigned>(__builtin_popcount(mask)) != n) {
            continue;
        }
        int h = 0;
        bool ok = true;
        for (unsigned i = 0; i < 2 * n && ok; ++i) {
            h += (mask >> i & 1U) ? 1 : -1;
            ok = h >= 0;
        }
        if (ok) {
            fn(mask);
        }
    }
}

inline std::vector<int> peak_heights(std::uint32_t mask, unsigned n)
{
    std::vector<int> heights;
    int h = 0;
    for (unsigned i = 0; i < 2 * n; ++i) {
        const bool up = mask >> i & 1U;
        h += up ? 1 : -1;
        if (up && i + 1 < 2 * n && !(mask >> (i + 1) & 1U)) {
            heights.push_back(h);
        }
    }
    return heights;
}

// Planar trees with n vertices <-> Dyck words of semilength n-1 (depth-first
// walk: up = descend to a new child, down = return to the parent).
inline std::vector<int> tree_child_counts(std::uint32_t mask, unsigned edges)
{
    std::vector<int> counts{0};
    std::vector<std::size_t> stack{0};
    for (unsigned i = 0; i < 2 * edges; ++i) {
        if (mask >> i & 1U) {
            ++counts[stack.back()];
            counts.push_back(0);
            stack.push_back(counts.size() - 1);
        } else {
            stack.pop_back();
        }
    }
    return counts;
}

template <typename Fn>
void planar_trees(unsigned n, Fn&& fn)
{
    if (n == 0) {
        fn(std::vector<int>{});
        return;
    }
    dyck_words(n - 1, [&](std::uint32_t mask) { fn(tree_child_counts(mask, n - 1)); });
}

// Set partitions as block-size lists: every labelling in [0,n)^n that is a
// restricted growth string.
template <typename Fn>
void set_partition_block_sizes(unsigned n, Fn&& fn)
{
    std::vector<int> a(n, 0);
    while (true) {
        int top = -1;
        bool rgs = true;
        for (unsigned i = 0; i < n && rgs; ++i) {
            rgs = a[i] <= top + 1;
            top = std::max(top, a[i]);
        }
        if (rgs) {
            std::vector<int> sizes(static_cast<std::size_t>(top + 1), 0);
            for (int v : a) {
                ++sizes[static_cast<std::size_t>(v)];
            }
            fn(sizes);
        }
        unsigned i = n;
        bool carry = true;
        while (carry && i > 0) {
            --i;
            if (++a[i] < static_cast<int>(n)) {
                carry = false;
            } else {
                a[i] = 0;
            }
        }
        if (carry) {
            return;
        }
    }
}

enum class Kind { IP, IC, IS, DP, SP, PT };

// Weight lists of all size-n objects of the given kind.
template <typename Fn>
void weights(Kind kind, unsigned n, Fn&& fn)
{
    switch (kind) {
    case Kind::IP:
        partitions(n, fn);
        break;
    case Kind::IC:
        compositions(n, fn);
        break;
    case Kind::IS:
        inversion_sequences(n, fn);
        break;
    case Kind::DP:
        dyck_words(n, [&](std::uint32_t mask) { fn(peak_heights(mask, n)); });
        break;
    case Kind::SP:
        set_partition_block_sizes(n, fn);
        break;
    case Kind::PT:
        planar_trees(n, fn);
        break;
    }
}

inline std::map<unsigned, unsigned long> mex_counts(Kind kind, unsigned n)
{
    std::map<unsigned, unsigned long> out;
    weights(kind, n, [&](const std::vector<int>& w) { ++out[mex(w)]; });
    return out;
}

inline unsigned long count_avoiding(Kind kind, unsigned n, const std::vector<int>& avoid)
{
    unsigned long c = 0;
    weights(kind, n, [&](const std::vector<int>& w) {
        for (int a : avoid) {
            if (std::find(w.begin(), w.end(), a) != w.end()) {
                return;
            }
        }
        ++c;
    });
    return c;
}

} // namespace oracle
