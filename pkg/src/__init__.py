"""
Cyclic Quotient Singularity Resolutions

Exact combinatorics for cyclic quotient surface singularities 1/delta(1, omega):
deformation components indexed by zero continued fractions, their M- and
N-resolutions, the braid-group action by antiflips on Wahl resolutions, and the
numerical data (ranks, hom dimensions, quivers) of the associated exceptional
collections.

Usage:
    from src.cfrac import CqsFraction
    from src.chain import print_chain
    from src.components.component_service import ComponentService

    reports = ComponentService().components(CqsFraction.parse("19/7"))
    for report in reports:
        print(report.zero_fraction, print_chain(report.m_res), print_chain(report.n_res))
"""

__version__ = "1.0.0"
__author__ = "CQS Resolutions Team"

__all__ = ["__version__"]
