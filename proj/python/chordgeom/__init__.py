"""Chord, tangent-triangle and section-centroid analysis of convex plane curves."""

from ._core import (
    AnalysisError,
    ChordSolution,
    CurveSpec,
    ProbeFrame,
    canonical_quadratic_coefficient,
    chord_endpoints,
    classify_parabola,
    curvature_at,
    estimate_limit,
    h_max,
    limit_suite,
    make_curve,
    parse_curve_spec,
    power_law_fit,
    probe,
    probe_frame,
    run,
    sweep,
    verify_identities,
)

__all__ = [
    "AnalysisError",
    "ChordSolution",
    "CurveSpec",
    "ProbeFrame",
    "canonical_quadratic_coefficient",
    "chord_endpoints",
    "classify_parabola",
    "curvature_at",
    "estimate_limit",
    "h_max",
    "limit_suite",
    "make_curve",
    "parse_curve_spec",
    "power_law_fit",
    "probe",
    "probe_frame",
    "run",
    "sweep",
    "verify_identities",
]
