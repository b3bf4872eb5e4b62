#include "periodviz/neighbors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "periodviz/errors.hpp"

namespace periodviz {

namespace {

std::uint64_t cell_key(std::int64_t cx, std::int64_t cy) {
    return (static_cast<std::uint64_t>(cx) << 32) ^ (static_cast<std::uint64_t>(cy) & 0xffffffffULL);
}

}  // namespace

PlanarNeighborIndex::PlanarNeighborIndex(std::span<const std::complex<double>> points)
    : points_(points.begin(), points.end()) {
    if (points_.empty()) throw Error(ErrorKind::Usage, "neighbor index: empty point set");

    double lo_x = points_[0].real(), hi_x = lo_x, lo_y = points_[0].imag(), hi_y = lo_y;
    for (const auto& p : points_) {
        lo_x = std::min(lo_x, p.real());
        hi_x = std::max(hi_x, p.real());
        lo_y = std::min(lo_y, p.imag());
        hi_y = std::max(hi_y, p.imag());
    }
    const double extent = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
    cell_ = extent / std::max(1.0, std::sqrt(static_cast<double>(points_.size())));

    cells_.reserve(points_.size() * 2);
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const auto key = cell_key(cell_of(points_[i].real()), cell_of(points_[i].imag()));
        cells_[key].push_back(static_cast<std::uint32_t>(i));
    }
}

std::int64_t PlanarNeighborIndex::cell_of(double v) const {
    return static_cast<std::int64_t>(std::floor(v / cell_));
}

PlanarNeighborIndex::Hit PlanarNeighborIndex::nearest(std::complex<double> target) const {
    const std::int64_t cx = cell_of(target.real());
    const std::int64_t cy = cell_of(target.imag());

    Hit best{std::numeric_limits<double>::infinity(), 0};
    auto consider = [&](std::uint32_t idx) {
        const double d = std::abs(points_[idx] - target);
        if (d < best.distance) {
            best = {d, idx};
        } else if (d == best.distance) {
            const auto& a = points_[idx];
            const auto& b = points_[best.index];
            if (a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag()))
                best.index = idx;
        }
    };

    for (std::int64_t ring = 0;; ++ring) {
        // Any point outside ring `ring` is at distance > (ring - 1) * cell.
        if (best.distance <= static_cast<double>(ring - 1) * cell_) break;
        bool any_cell_possible = false;
        for (std::int64_t ix = cx - ring; ix <= cx + ring; ++ix) {
            for (std::int64_t iy = cy - ring; iy <= cy + ring; ++iy) {
                if (std::max(std::llabs(ix - cx), std::llabs(iy - cy)) != ring) continue;
                any_cell_possible = true;
                auto it = cells_.find(cell_key(ix, iy));
                if (it == cells_.end()) continue;
                for (std::uint32_t idx : it->second) consider(idx);
            }
        }
        // Safety net: the ring bound above always terminates once a point is
        // found, but guard against a degenerate cell size.
        if (!any_cell_possible || ring > (1 << 24)) break;
    }
    return best;
}

}  // namespace periodviz
