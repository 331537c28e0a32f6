#pragma once

#include <cstddef>
#include <vector>

namespace hcd::detail {

// Visits the size-n subsets of `items` in lexicographic order of positions.
// Stops early when `fn` returns false.
template <class T, class Fn>
void for_each_subset(const std::vector<T>& items, std::size_t n, Fn&& fn) {
    if (n > items.size()) return;
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::vector<T> subset(n);
    while (true) {
        for (std::size_t i = 0; i < n; ++i) subset[i] = items[idx[i]];
        if (!fn(subset)) return;
        std::size_t i = n;
        while (i > 0 && idx[i - 1] == items.size() - n + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace hcd::detail
