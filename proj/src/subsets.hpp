#pragma once

#include "frugal/graph.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace frugal::detail {

/// Calls fn(subset) for every k-subset of `items` in lexicographic order of
/// positions. `subset` is reused between calls. Stops early if fn returns false.
template <typename Fn>
bool for_each_subset(std::span<const Vertex> items, std::size_t k, Fn&& fn)
{
    const std::size_t n = items.size();
    if (k > n)
        return true;
    std::vector<std::size_t> pos(k);
    for (std::size_t i = 0; i < k; ++i)
        pos[i] = i;
    std::vector<Vertex> subset(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i)
            subset[i] = items[pos[i]];
        if (!fn(static_cast<const std::vector<Vertex>&>(subset)))
            return false;
        std::size_t i = k;
        while (i > 0 && pos[i - 1] == n - k + (i - 1))
            --i;
        if (i == 0)
            return true;
        ++pos[i - 1];
        for (std::size_t j = i; j < k; ++j)
            pos[j] = pos[j - 1] + 1;
    }
}

struct VectorHash {
    std::size_t operator()(const std::vector<Vertex>& v) const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (Vertex x : v) {
            h ^= x;
            h *= 0x100000001b3ULL;
        }
        return h;
    }
};

}  // namespace frugal::detail
