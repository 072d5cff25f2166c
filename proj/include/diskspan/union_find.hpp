#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace diskspan {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), count_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);  // keep the smaller index as root: stable labels
        parent_[b] = a;
        --count_;
        return true;
    }

    bool same(std::size_t a, std::size_t b) { return find(a) == find(b); }
    std::size_t components() const { return count_; }
    std::size_t size() const { return parent_.size(); }

private:
    std::vector<std::size_t> parent_;
    std::size_t count_;
};

}  // namespace diskspan
