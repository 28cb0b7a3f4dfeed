#pragma once

#include <numeric>
#include <vector>

namespace sparsity::detail {

/// Union-find with path halving and per-root edge counts.
class UnionFind {
public:
    explicit UnionFind(int n = 0) { reset(n); }

    void reset(int n) {
        parent_.resize(static_cast<std::size_t>(n));
        std::iota(parent_.begin(), parent_.end(), 0);
        size_.assign(static_cast<std::size_t>(n), 1);
        edges_.assign(static_cast<std::size_t>(n), 0);
    }

    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            auto& p = parent_[static_cast<std::size_t>(x)];
            p = parent_[static_cast<std::size_t>(p)];
            x = p;
        }
        return x;
    }

    /// Records edge ab; returns false when a and b were already joined.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            ++edges_[static_cast<std::size_t>(a)];
            return false;
        }
        if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) {
            std::swap(a, b);
        }
        parent_[static_cast<std::size_t>(b)] = a;
        size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
        edges_[static_cast<std::size_t>(a)] += edges_[static_cast<std::size_t>(b)] + 1;
        return true;
    }

    int size(int x) { return size_[static_cast<std::size_t>(find(x))]; }
    int edges(int x) { return edges_[static_cast<std::size_t>(find(x))]; }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<int> edges_;
};

}  // namespace sparsity::detail
