"""Gaussian periods over Z/nZ: exact arithmetic, period images, asymptotic
containment checks, equidistribution experiments, and rendering.

The heavy lifting lives in the compiled ``_periodviz`` extension; this
package re-exports its surface.
"""

from ._periodviz import (  # noqa: F401
    ContainmentReport,
    Gauss17Report,
    HImageReport,
    HypocycloidReport,
    LambdaSet,
    MinkowskiReport,
    MultiplicativityReport,
    OrbitSpec,
    PeriodImage,
    PeriodPoint,
    PeriodvizError,
    Raster,
    SymmetryReport,
    crt_combine,
    crt_split,
    cyclotomic_poly,
    discrepancy_estimate,
    encode_png,
    eval_laurent,
    eval_laurent_crt,
    eval_supercharacter,
    factorize,
    find_root_of_unity,
    gauss17_check,
    h_image_heuristic,
    hypocycloid_boundary,
    image,
    in_hypocycloid,
    is_prime,
    lambda_set,
    minkowski_decomposition_check,
    mult_order,
    orbit,
    reduction_matrix,
    render_periods,
    render_torus,
    totient,
    verify_containment,
    verify_hypocycloid,
    verify_multiplicativity,
    verify_symmetry,
    weyl_sum,
    write_image,
)

__version__ = "1.0.0"
