#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "periodviz/arith.hpp"
#include "periodviz/cyclotomic.hpp"
#include "periodviz/equidistribution.hpp"
#include "periodviz/errors.hpp"
#include "periodviz/hypocycloid.hpp"
#include "periodviz/laurent.hpp"
#include "periodviz/render.hpp"
#include "periodviz/supercharacter.hpp"

namespace py = pybind11;
using namespace periodviz;

namespace {

py::bytes raster_bytes(const Raster& r) {
    return py::bytes(reinterpret_cast<const char*>(r.pixels.data()), r.pixels.size());
}

}  // namespace

PYBIND11_MODULE(_periodviz, m) {
    m.doc() = "Gaussian periods: exact arithmetic, period images, asymptotic checks, rendering";

    py::register_exception<Error>(m, "PeriodvizError");

    // arith
    m.def("factorize", [](std::uint64_t n) {
        return factorize(n).pairs;
    }, py::arg("n"));
    m.def("totient", &totient, py::arg("n"));
    m.def("is_prime", &is_prime, py::arg("n"));
    m.def("mult_order", &mult_order, py::arg("omega"), py::arg("n"));
    m.def("crt_split", &crt_split, py::arg("omega"), py::arg("m"), py::arg("n"));
    m.def("crt_combine", &crt_combine, py::arg("rm"), py::arg("m"), py::arg("rn"), py::arg("n"));
    m.def("orbit", &orbit, py::arg("omega"), py::arg("n"), py::arg("y"));

    py::class_<OrbitSpec>(m, "OrbitSpec")
        .def(py::init([](std::uint64_t n, std::int64_t omega) {
            return OrbitSpec::make(n, omega);
        }), py::arg("n"), py::arg("omega"))
        .def_readonly("modulus", &OrbitSpec::modulus)
        .def_readonly("generator", &OrbitSpec::generator)
        .def_readonly("order", &OrbitSpec::order)
        .def_readonly("orbit", &OrbitSpec::orbit)
        .def("__repr__", [](const OrbitSpec& s) {
            return "OrbitSpec(n=" + std::to_string(s.modulus) +
                   ", omega=" + std::to_string(s.generator) +
                   ", order=" + std::to_string(s.order) + ")";
        });

    // cyclotomic
    m.def("cyclotomic_poly", [](std::uint64_t d) {
        return cyclotomic_poly(d).coefficients;
    }, py::arg("d"), "Coefficients of the d-th cyclotomic polynomial, lowest degree first.");
    m.def("reduction_matrix", [](std::uint64_t d) {
        const auto rm = reduction_matrix(d);
        std::vector<std::vector<std::int64_t>> rows(rm.rows,
                                                    std::vector<std::int64_t>(rm.cols));
        for (std::size_t j = 0; j < rm.rows; ++j)
            for (std::size_t k = 0; k < rm.cols; ++k) rows[j][k] = rm.at(j, k);
        return rows;
    }, py::arg("d"), "phi(d) x d integer matrix; column k reduces x^k mod the cyclotomic polynomial.");

    // supercharacter
    m.def("eval_supercharacter", [](std::uint64_t n, std::int64_t omega, std::int64_t y) {
        return eval_supercharacter(OrbitSpec::make(n, omega), y);
    }, py::arg("n"), py::arg("omega"), py::arg("y"));

    py::class_<PeriodPoint>(m, "PeriodPoint")
        .def_readonly("representative", &PeriodPoint::representative)
        .def_readonly("layer", &PeriodPoint::layer)
        .def_readonly("value", &PeriodPoint::value);

    py::class_<PeriodImage>(m, "PeriodImage")
        .def_readonly("spec", &PeriodImage::spec)
        .def_readonly("layer_mod", &PeriodImage::layer_mod)
        .def_readonly("superclass_count", &PeriodImage::superclass_count)
        .def_readonly("points", &PeriodImage::points)
        .def_readonly("distinct", &PeriodImage::distinct)
        .def("distinct_exact", &PeriodImage::distinct_exact);

    m.def("image", [](std::uint64_t n, std::int64_t omega, std::uint64_t layer_mod,
                      unsigned threads) {
        return image(OrbitSpec::make(n, omega), layer_mod, threads);
    }, py::arg("n"), py::arg("omega"), py::arg("layer_mod") = 1, py::arg("threads") = 0);

    py::class_<SymmetryReport>(m, "SymmetryReport")
        .def_readonly("k", &SymmetryReport::k)
        .def_readonly("max_conjugation_defect", &SymmetryReport::max_conjugation_defect)
        .def_readonly("max_rotation_defect", &SymmetryReport::max_rotation_defect)
        .def_readonly("tolerance", &SymmetryReport::tolerance)
        .def_readonly("passed", &SymmetryReport::passed);

    m.def("verify_symmetry", [](std::uint64_t n, std::int64_t omega, double tolerance,
                                unsigned threads) {
        return verify_symmetry(image(OrbitSpec::make(n, omega), 1, threads), tolerance);
    }, py::arg("n"), py::arg("omega"), py::arg("tolerance") = kSetTolerance,
       py::arg("threads") = 0);

    py::class_<MultiplicativityReport>(m, "MultiplicativityReport")
        .def_readonly("m", &MultiplicativityReport::m)
        .def_readonly("n", &MultiplicativityReport::n)
        .def_readonly("omega", &MultiplicativityReport::omega)
        .def_readonly("order_m", &MultiplicativityReport::order_m)
        .def_readonly("order_n", &MultiplicativityReport::order_n)
        .def_readonly("image_size", &MultiplicativityReport::image_size)
        .def_readonly("product_size", &MultiplicativityReport::product_size)
        .def_readonly("max_defect", &MultiplicativityReport::max_defect)
        .def_readonly("tolerance", &MultiplicativityReport::tolerance)
        .def_readonly("passed", &MultiplicativityReport::passed);

    m.def("verify_multiplicativity", &verify_multiplicativity, py::arg("m"), py::arg("n"),
          py::arg("omega"), py::arg("tolerance") = kSetTolerance, py::arg("threads") = 0);

    // laurent maps
    m.def("eval_laurent", [](std::uint64_t d, const std::vector<std::complex<double>>& z) {
        return eval_laurent(d, z);
    }, py::arg("d"), py::arg("z"));
    m.def("eval_laurent_crt", [](std::uint64_t r, std::uint64_t s,
                                 const std::vector<std::complex<double>>& grid,
                                 bool include_first_column) {
        return eval_laurent_crt(r, s, grid,
                                include_first_column ? CrtSumConvention::IncludeFirstColumn
                                                     : CrtSumConvention::SkipFirstColumn);
    }, py::arg("r"), py::arg("s"), py::arg("grid"), py::arg("include_first_column") = true);

    py::class_<ContainmentReport>(m, "ContainmentReport")
        .def_readonly("q", &ContainmentReport::q)
        .def_readonly("omega", &ContainmentReport::omega)
        .def_readonly("prime", &ContainmentReport::prime)
        .def_readonly("exponent", &ContainmentReport::exponent)
        .def_readonly("order", &ContainmentReport::order)
        .def_readonly("superclasses", &ContainmentReport::superclasses)
        .def_readonly("worst_representative", &ContainmentReport::worst_representative)
        .def_readonly("max_defect", &ContainmentReport::max_defect)
        .def_readonly("tolerance", &ContainmentReport::tolerance)
        .def_readonly("passed", &ContainmentReport::passed);

    m.def("verify_containment", &verify_containment, py::arg("q"), py::arg("omega"),
          py::arg("tolerance") = 1e-8, py::arg("threads") = 0);

    py::class_<MinkowskiReport>(m, "MinkowskiReport")
        .def_readonly("r", &MinkowskiReport::r)
        .def_readonly("b", &MinkowskiReport::b)
        .def_readonly("samples", &MinkowskiReport::samples)
        .def_readonly("seed", &MinkowskiReport::seed)
        .def_readonly("max_defect", &MinkowskiReport::max_defect)
        .def_readonly("tolerance", &MinkowskiReport::tolerance)
        .def_readonly("sfs_radius", &MinkowskiReport::sfs_radius)
        .def_readonly("passed", &MinkowskiReport::passed);

    m.def("minkowski_decomposition_check", &minkowski_decomposition_check, py::arg("r"),
          py::arg("b"), py::arg("samples"), py::arg("seed"), py::arg("tolerance") = 1e-9);

    py::class_<Gauss17Report>(m, "Gauss17Report")
        .def_readonly("lhs", &Gauss17Report::lhs)
        .def_readonly("rhs", &Gauss17Report::rhs)
        .def_readonly("defect", &Gauss17Report::defect);

    m.def("gauss17_check", &gauss17_check);

    py::class_<HImageReport>(m, "HImageReport")
        .def_readonly("r", &HImageReport::r)
        .def_readonly("s", &HImageReport::s)
        .def_readonly("samples", &HImageReport::samples)
        .def_readonly("seed", &HImageReport::seed)
        .def_readonly("max_crt_to_plain", &HImageReport::max_crt_to_plain)
        .def_readonly("max_plain_to_crt", &HImageReport::max_plain_to_crt)
        .def_readonly("q999_crt_to_plain", &HImageReport::q999_crt_to_plain)
        .def_readonly("q999_plain_to_crt", &HImageReport::q999_plain_to_crt)
        .def_readonly("tolerance", &HImageReport::tolerance)
        .def_readonly("passed", &HImageReport::passed);

    m.def("h_image_heuristic", &h_image_heuristic, py::arg("r"), py::arg("s"),
          py::arg("samples"), py::arg("seed"));

    // hypocycloid geometry
    m.def("hypocycloid_boundary", [](unsigned r, std::size_t samples) {
        return hypocycloid(r, samples).boundary;
    }, py::arg("r"), py::arg("samples") = 4096);
    m.def("in_hypocycloid", [](unsigned r, std::complex<double> z, double eps,
                               std::size_t samples) {
        return in_hypocycloid(hypocycloid(r, samples), z, eps);
    }, py::arg("r"), py::arg("z"), py::arg("eps") = 1e-6, py::arg("samples") = 4096);

    py::class_<HypocycloidReport>(m, "HypocycloidReport")
        .def_readonly("q", &HypocycloidReport::q)
        .def_readonly("omega", &HypocycloidReport::omega)
        .def_readonly("cusps", &HypocycloidReport::cusps)
        .def_readonly("boundary_samples", &HypocycloidReport::boundary_samples)
        .def_readonly("points_checked", &HypocycloidReport::points_checked)
        .def_readonly("outside", &HypocycloidReport::outside)
        .def_readonly("eps", &HypocycloidReport::eps)
        .def_readonly("passed", &HypocycloidReport::passed);

    m.def("verify_hypocycloid", &verify_hypocycloid, py::arg("q"), py::arg("omega"),
          py::arg("eps") = 1e-6, py::arg("threads") = 0, py::arg("boundary_samples") = 32768);

    // equidistribution
    m.def("find_root_of_unity", &find_root_of_unity, py::arg("q"), py::arg("d"));

    py::class_<LambdaSet>(m, "LambdaSet")
        .def_readonly("q", &LambdaSet::q)
        .def_readonly("d", &LambdaSet::d)
        .def_readonly("root", &LambdaSet::root)
        .def_readonly("dim", &LambdaSet::dim)
        .def_property_readonly("points", [](const LambdaSet& l) {
            std::vector<std::vector<double>> pts(l.size());
            for (std::size_t i = 0; i < l.size(); ++i) {
                const auto p = l.point(i);
                pts[i].assign(p.begin(), p.end());
            }
            return pts;
        })
        .def("__len__", &LambdaSet::size);

    m.def("lambda_set", &lambda_set, py::arg("q"), py::arg("d"));

    m.def("weyl_sum", [](const LambdaSet& lambda, const std::vector<std::int64_t>& v) {
        const auto s = weyl_sum(lambda, v);
        return std::make_pair(s.computed, s.predicted);
    }, py::arg("lambda_set"), py::arg("v"));

    m.def("discrepancy_estimate",
          [](const LambdaSet& lambda, unsigned grid) { return discrepancy_estimate(lambda, grid); },
          py::arg("lambda_set"), py::arg("grid"));
    m.def("discrepancy_estimate",
          [](const std::vector<double>& coords, std::size_t dim, unsigned grid) {
              return discrepancy_estimate(coords, dim, grid);
          },
          py::arg("coords"), py::arg("dim"), py::arg("grid"));

    // rendering
    py::class_<Raster>(m, "Raster")
        .def_readonly("width", &Raster::width)
        .def_readonly("height", &Raster::height)
        .def_property_readonly("pixels", &raster_bytes);

    m.def("render_periods", [](std::uint64_t n, std::int64_t omega, std::uint64_t layer_mod,
                               unsigned size, double viewport, unsigned point_radius,
                               unsigned threads) {
        RenderConfig cfg;
        cfg.size_px = size;
        cfg.viewport_radius = viewport;
        cfg.point_radius_px = point_radius;
        return rasterize(image(OrbitSpec::make(n, omega), layer_mod, threads), cfg);
    }, py::arg("n"), py::arg("omega"), py::arg("layer_mod") = 1, py::arg("size") = 1024,
       py::arg("viewport") = 0.0, py::arg("point_radius") = 1, py::arg("threads") = 0);

    m.def("render_torus", [](std::uint64_t q, std::uint64_t d, unsigned size,
                             unsigned point_radius) {
        RenderConfig cfg;
        cfg.size_px = size;
        cfg.point_radius_px = point_radius;
        return scatter_torus(lambda_set(q, d), cfg);
    }, py::arg("q"), py::arg("d"), py::arg("size") = 1024, py::arg("point_radius") = 1);

    m.def("write_image", &write_image, py::arg("raster"), py::arg("path"));
    m.def("encode_png", [](const Raster& r) {
        const auto bytes = encode_png(r);
        return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
    }, py::arg("raster"));
}
