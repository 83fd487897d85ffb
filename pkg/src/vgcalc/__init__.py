"""Exact bookkeeping for Vassiliev-Gorinov computations: S_n characters, HG
polynomials, catalog spaces, strata, spectral pages and long exact sequences,
driven by a small scenario language."""
from .motive import HGPoly, MotiveClass, render_poly
from .runner import Report, run, run_file
from .scenario import ParseError, ScenarioError, ValidationError, parse_file, parse_scenario

__version__ = "0.1.0"

__all__ = [
    "HGPoly",
    "MotiveClass",
    "ParseError",
    "Report",
    "ScenarioError",
    "ValidationError",
    "parse_file",
    "parse_scenario",
    "render_poly",
    "run",
    "run_file",
]
