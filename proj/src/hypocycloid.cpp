#include "periodviz/hypocycloid.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <string>

#include "periodviz/arith.hpp"
#include "periodviz/errors.hpp"
#include "periodviz/parallel.hpp"
#include "periodviz/supercharacter.hpp"

namespace periodviz {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

double point_segment_distance(std::complex<double> z, std::complex<double> a,
                              std::complex<double> b) {
    const std::complex<double> ab = b - a;
    const double len2 = std::norm(ab);
    double t = len2 > 0.0 ? ((z.real() - a.real()) * ab.real() +
                             (z.imag() - a.imag()) * ab.imag()) / len2
                          : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(z - (a + t * ab));
}

// Direct reference path: one pass accumulating the winding number and the
// distance band.
bool direct_membership(const HypocycloidRegion& region, std::complex<double> z, double eps) {
    int winding = 0;
    const std::size_t n = region.boundary.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = region.boundary[i];
        const auto& b = region.boundary[(i + 1) % n];
        if (point_segment_distance(z, a, b) < eps) return true;
        const bool a_above = a.imag() > z.imag();
        const bool b_above = b.imag() > z.imag();
        if (a_above != b_above) {
            const double t = (z.imag() - a.imag()) / (b.imag() - a.imag());
            const double x = a.real() + t * (b.real() - a.real());
            if (x > z.real()) winding += b_above ? 1 : -1;
        }
    }
    return winding != 0;
}

void build_radial_index(HypocycloidRegion& region) {
    const std::size_t n = region.boundary.size();
    auto& idx = region.radial;
    idx.vertex_angle.assign(n + 1, 0.0);
    double unwrapped = std::atan2(region.boundary[0].imag(), region.boundary[0].real());
    idx.vertex_angle[0] = unwrapped;
    for (std::size_t k = 1; k <= n; ++k) {
        const auto& p = region.boundary[k % n];
        double a = std::atan2(p.imag(), p.real());
        while (a <= unwrapped) a += kTau;
        if (a - unwrapped > std::numbers::pi) {
            idx.usable = false;  // angles not advancing monotonically
            return;
        }
        idx.vertex_angle[k] = a;
        idx.max_edge_angle = std::max(idx.max_edge_angle, a - unwrapped);
        idx.max_edge_len =
            std::max(idx.max_edge_len, std::abs(region.boundary[k % n] -
                                               region.boundary[(k - 1) % n]));
        unwrapped = a;
    }
    // One full turn exactly: the closing vertex must sit one revolution on.
    idx.usable = std::abs(idx.vertex_angle[n] - idx.vertex_angle[0] - kTau) < 1e-9;
}

}  // namespace

double HypocycloidRegion::chord_deviation() const {
    const double r = static_cast<double>(cusps);
    const double n = static_cast<double>(boundary.size());
    return std::numbers::pi * std::numbers::pi * (r - 1.0) * r / (2.0 * n * n);
}

HypocycloidRegion hypocycloid(unsigned r, std::size_t samples) {
    if (r < 2) throw Error(ErrorKind::Usage, "hypocycloid: need at least 2 cusps");
    if (samples < 1024) throw Error(ErrorKind::Usage, "hypocycloid: need at least 1024 samples");
    HypocycloidRegion region;
    region.cusps = r;
    region.boundary.resize(samples);
    for (std::size_t k = 0; k < samples; ++k) {
        const double theta = kTau * static_cast<double>(k) / static_cast<double>(samples);
        const double back = theta * (1.0 - static_cast<double>(r));
        region.boundary[k] = {(r - 1.0) * std::cos(theta) + std::cos(back),
                              (r - 1.0) * std::sin(theta) + std::sin(back)};
    }
    if (r >= 3) build_radial_index(region);
    return region;
}

bool in_hypocycloid(const HypocycloidRegion& region, std::complex<double> z, double eps) {
    const double r = static_cast<double>(region.cusps);
    const double mag = std::abs(z);
    // The boundary's polar radius lies in [r-2, r] exactly, so the polyline
    // stays inside the radius-r disk and above radius (r-2) - edge length.
    if (mag > r + eps) return false;

    const auto& idx = region.radial;
    if (!idx.usable) return direct_membership(region, z, eps);

    if (mag < (r - 2.0) - idx.max_edge_len) return true;

    // Star-shaped polygon: membership is decided by the single ray-edge
    // crossing at the query's polar angle.
    const std::size_t n = region.boundary.size();
    double phi = std::atan2(z.imag(), z.real());
    while (phi < idx.vertex_angle[0]) phi += kTau;
    while (phi >= idx.vertex_angle[n]) phi -= kTau;
    const auto begin = idx.vertex_angle.begin();
    const std::size_t edge =
        static_cast<std::size_t>(std::upper_bound(begin, begin + n + 1, phi) - begin) - 1;

    const auto& a = region.boundary[edge % n];
    const auto& b = region.boundary[(edge + 1) % n];
    const std::complex<double> d = b - a;
    const double denom = std::cos(phi) * d.imag() - std::sin(phi) * d.real();
    const double numer = a.real() * d.imag() - a.imag() * d.real();
    const double crossing = denom != 0.0 ? numer / denom : -1.0;

    // Too close to the crossing (or a degenerate ray-parallel edge) to trust
    // the comparison: use the reference path.
    const double guard = idx.max_edge_len + eps;
    if (crossing < 0.0 || std::abs(mag - crossing) <= guard)
        return direct_membership(region, z, eps);
    if (mag < crossing) return true;

    // Outside the crossing: only the eps band can still apply, and only edges
    // within the angular window can be that close.
    const double half_window =
        std::asin(std::min(1.0, 2.0 * eps / std::max(mag, 1e-12))) + idx.max_edge_angle;
    const double lo = phi - half_window, hi = phi + half_window;
    // Edges k with angular interval [angle_k, angle_k+1] meeting [lo, hi],
    // scanned with wraparound.
    const auto first_above = [&](double target) {
        double t = target;
        std::int64_t shift = 0;
        while (t < idx.vertex_angle[0]) {
            t += kTau;
            shift -= static_cast<std::int64_t>(n);
        }
        while (t >= idx.vertex_angle[n]) {
            t -= kTau;
            shift += static_cast<std::int64_t>(n);
        }
        const auto it = std::upper_bound(begin, begin + n + 1, t);
        return static_cast<std::int64_t>(it - begin) - 1 + shift;
    };
    const std::int64_t k_lo = first_above(lo) - 1;
    const std::int64_t k_hi = first_above(hi) + 1;
    for (std::int64_t k = k_lo; k <= k_hi; ++k) {
        const std::size_t i = static_cast<std::size_t>(((k % static_cast<std::int64_t>(n)) +
                                                        static_cast<std::int64_t>(n))) %
                              n;
        if (point_segment_distance(z, region.boundary[i], region.boundary[(i + 1) % n]) < eps)
            return true;
    }
    return false;
}

HypocycloidReport verify_hypocycloid(std::uint64_t q, std::int64_t omega, double eps,
                                     unsigned threads, std::size_t boundary_samples) {
    HypocycloidReport report;
    report.q = q;
    report.eps = eps;
    report.boundary_samples = boundary_samples;

    const auto f = factorize(q);
    if (f.pairs.size() != 1 || f.pairs[0].first == 2)
        throw HypothesisViolatedError("verify_hypocycloid: modulus " + std::to_string(q) +
                                      " is not an odd prime power");
    const std::uint64_t p = f.pairs[0].first;

    const auto spec = OrbitSpec::make(q, omega);
    report.omega = spec.generator;
    report.cusps = spec.order;
    if (spec.order < 2 || !is_prime(spec.order))
        throw HypothesisViolatedError("verify_hypocycloid: order " + std::to_string(spec.order) +
                                      " is not prime; no cusp region applies");
    if ((p - 1) % spec.order != 0)
        throw HypothesisViolatedError("verify_hypocycloid: order " + std::to_string(spec.order) +
                                      " does not divide p - 1 = " + std::to_string(p - 1));

    const auto region = hypocycloid(static_cast<unsigned>(spec.order), boundary_samples);
    const RootTable table(q);
    const auto minima = superclass_minima(spec);
    report.points_checked = minima.size();

    std::atomic<std::size_t> outside{0};
    parallel_chunks(0, minima.size(), threads, [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
        std::size_t local = 0;
        for (std::uint64_t i = lo; i < hi; ++i)
            if (!in_hypocycloid(region, eval_supercharacter(spec, minima[i], table), eps))
                ++local;
        outside += local;
    });
    report.outside = outside.load();
    report.passed = report.outside == 0;
    return report;
}

}  // namespace periodviz
