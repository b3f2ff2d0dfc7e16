"""Exact matroid analysis: quadrangle relations, Tutte group invariants and
weak half-plane property verdicts."""

from ._whpp import (  # noqa: F401
    Matroid,
    WhppError,
    affine_geometry,
    catalog,
    catalog_expected,
    catalog_names,
    circuit_hyperplanes,
    connected_components,
    dim_V,
    dim_W,
    direct_sum,
    dual,
    dump_quadrangles,
    from_bases,
    graphic,
    has_minor,
    inner_free_rank,
    is_binary,
    is_isomorphic,
    is_regular,
    minor,
    projective_geometry,
    quadrangle_count,
    relax,
    tutte_invariants,
    uniform,
    whpp_verdict,
)
