#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace periodviz {

// Uniform-grid index over a fixed planar point set answering exact
// nearest-point queries. Expanding-ring search: a candidate found in ring r
// is provably nearest once best <= r * cell. Distance ties break toward the
// lexicographically smaller (re, im) point so matching is deterministic.
class PlanarNeighborIndex {
public:
    explicit PlanarNeighborIndex(std::span<const std::complex<double>> points);

    struct Hit {
        double distance;
        std::size_t index;
    };

    // Exact nearest point; the set must be nonempty.
    Hit nearest(std::complex<double> target) const;
    double nearest_distance(std::complex<double> target) const { return nearest(target).distance; }

    std::size_t size() const { return points_.size(); }

private:
    std::int64_t cell_of(double v) const;

    std::vector<std::complex<double>> points_;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> cells_;
    double cell_ = 1.0;
};

}  // namespace periodviz
