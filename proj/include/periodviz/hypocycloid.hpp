#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace periodviz {

// Compact region bounded by the curve theta -> (r-1)e(theta) + e((1-r)theta),
// stored as a closed polyline sampled at theta = k/N. The polar radius of the
// true curve lies in [r-2, r]; chord_deviation bounds how far the polyline
// can sag below it.
struct HypocycloidRegion {
    unsigned cusps = 0;
    std::vector<std::complex<double>> boundary;

    // Query acceleration, filled in by hypocycloid(). The polyline of any
    // r >= 3 region is star-shaped about the origin (vertex polar angles
    // strictly increase), so membership reduces to one ray-edge crossing;
    // queries near the boundary fall back to the direct scan. Hand-built
    // regions without this index use the direct scan throughout.
    struct RadialIndex {
        bool usable = false;
        std::vector<double> vertex_angle;  // unwrapped, size N+1, strictly increasing
        double max_edge_len = 0.0;
        double max_edge_angle = 0.0;
    };
    RadialIndex radial;

    double chord_deviation() const;  // pi^2 (r-1) r / (2 N^2)
};

// r >= 2, samples >= 1024. r = 2 degenerates to the segment [-2, 2].
HypocycloidRegion hypocycloid(unsigned r, std::size_t samples = 4096);

// True iff the winding number of the boundary polyline about z is nonzero or
// z lies within eps of the polyline.
bool in_hypocycloid(const HypocycloidRegion& region, std::complex<double> z, double eps);

struct HypocycloidReport {
    std::uint64_t q = 0, omega = 0;
    std::uint64_t cusps = 0;
    std::size_t boundary_samples = 0;
    std::size_t points_checked = 0;
    std::size_t outside = 0;
    double eps = 0.0;
    bool passed = false;
};

// Checks that every period value for (q, omega) lies in the cusp-count-d
// hypocycloid region, d the order of omega. Hypotheses: q an odd prime power,
// d prime, d | p - 1. The region is sampled finely (default 32768) so the
// polyline chord deviation sits far below eps.
HypocycloidReport verify_hypocycloid(std::uint64_t q, std::int64_t omega, double eps = 1e-6,
                                     unsigned threads = 0, std::size_t boundary_samples = 32768);

}  // namespace periodviz
