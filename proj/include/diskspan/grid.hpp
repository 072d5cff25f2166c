#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "diskspan/geometry.hpp"

namespace diskspan {

/// Uniform grid over disk centers, bucketed at the maximum radius, for
/// "which disks can cover p" queries. Degenerates gracefully to a
/// linear scan when the disks pile up in one cell (stacked instances).
class DiskGrid {
public:
    explicit DiskGrid(const std::vector<Disk>& disks) : disks_(&disks) {
        if (disks.empty()) return;
        r_max_ = 0.0;
        x0_ = y0_ = 1e300;
        double x1 = -1e300, y1 = -1e300;
        for (const Disk& d : disks) {
            r_max_ = std::max(r_max_, d.radius);
            x0_ = std::min(x0_, d.center.x);
            y0_ = std::min(y0_, d.center.y);
            x1 = std::max(x1, d.center.x);
            y1 = std::max(y1, d.center.y);
        }
        cell_ = std::max(r_max_, 1e-300);
        nx_ = static_cast<int>((x1 - x0_) / cell_) + 1;
        ny_ = static_cast<int>((y1 - y0_) / cell_) + 1;
        // A grid finer than ~n cells buys nothing; clamp to keep memory flat.
        const long want = static_cast<long>(nx_) * ny_;
        const long cap = static_cast<long>(disks.size()) * 4 + 64;
        if (want > cap) {
            const double blow = std::sqrt(static_cast<double>(want) / cap);
            cell_ *= blow;
            nx_ = static_cast<int>((x1 - x0_) / cell_) + 1;
            ny_ = static_cast<int>((y1 - y0_) / cell_) + 1;
        }
        cells_.assign(static_cast<std::size_t>(nx_) * ny_, {});
        for (std::size_t i = 0; i < disks.size(); ++i)
            cells_[index_of(disks[i].center)].push_back(static_cast<int>(i));
        reach_ = static_cast<int>(std::ceil(r_max_ / cell_));
    }

    /// Invokes fn(disk_index) for every disk whose center lies within
    /// r_max of p's cell neighborhood; every disk containing p is
    /// visited (possibly with non-covering extras).
    template <typename Fn>
    void for_candidates(Point p, Fn&& fn) const {
        if (!disks_ || disks_->empty()) return;
        const int cx = clamp_x(static_cast<int>(std::floor((p.x - x0_) / cell_)));
        const int cy = clamp_y(static_cast<int>(std::floor((p.y - y0_) / cell_)));
        // Outside the grid by more than r_max: nothing can cover p.
        if (p.x < x0_ - r_max_ || p.y < y0_ - r_max_ ||
            p.x > x0_ + nx_ * cell_ + r_max_ || p.y > y0_ + ny_ * cell_ + r_max_)
            return;
        for (int gx = std::max(0, cx - reach_ - 1); gx <= std::min(nx_ - 1, cx + reach_ + 1); ++gx)
            for (int gy = std::max(0, cy - reach_ - 1); gy <= std::min(ny_ - 1, cy + reach_ + 1); ++gy)
                for (int i : cells_[static_cast<std::size_t>(gx) * ny_ + gy])
                    fn(i);
    }

    std::size_t depth_at(Point p) const {
        std::size_t n = 0;
        for_candidates(p, [&](int i) {
            if (contains((*disks_)[i], p)) ++n;
        });
        return n;
    }

    /// Depth if it is <= limit, nullopt otherwise (early exit).
    std::optional<std::size_t> bounded_depth(Point p, std::size_t limit) const {
        if (!disks_ || disks_->empty()) return 0;
        if (p.x < x0_ - r_max_ || p.y < y0_ - r_max_ ||
            p.x > x0_ + nx_ * cell_ + r_max_ || p.y > y0_ + ny_ * cell_ + r_max_)
            return 0;
        const int cx = clamp_x(static_cast<int>(std::floor((p.x - x0_) / cell_)));
        const int cy = clamp_y(static_cast<int>(std::floor((p.y - y0_) / cell_)));
        std::size_t count = 0;
        for (int gx = std::max(0, cx - reach_ - 1); gx <= std::min(nx_ - 1, cx + reach_ + 1); ++gx) {
            for (int gy = std::max(0, cy - reach_ - 1); gy <= std::min(ny_ - 1, cy + reach_ + 1); ++gy) {
                for (int i : cells_[static_cast<std::size_t>(gx) * ny_ + gy]) {
                    if (contains((*disks_)[i], p) && ++count > limit)
                        return std::nullopt;
                }
            }
        }
        return count;
    }

    /// Covering ids (original disk ids), sorted ascending.
    std::vector<int> covering_set(Point p) const {
        std::vector<int> ids;
        for_candidates(p, [&](int i) {
            if (contains((*disks_)[i], p)) ids.push_back((*disks_)[i].id);
        });
        std::sort(ids.begin(), ids.end());
        return ids;
    }

private:
    std::size_t index_of(Point p) const {
        const int cx = clamp_x(static_cast<int>(std::floor((p.x - x0_) / cell_)));
        const int cy = clamp_y(static_cast<int>(std::floor((p.y - y0_) / cell_)));
        return static_cast<std::size_t>(cx) * ny_ + cy;
    }
    int clamp_x(int v) const { return std::clamp(v, 0, nx_ - 1); }
    int clamp_y(int v) const { return std::clamp(v, 0, ny_ - 1); }

    const std::vector<Disk>* disks_ = nullptr;
    std::vector<std::vector<int>> cells_;
    double x0_ = 0, y0_ = 0, cell_ = 1, r_max_ = 0;
    int nx_ = 1, ny_ = 1, reach_ = 0;
};

}  // namespace diskspan
