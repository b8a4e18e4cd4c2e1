"""Quivers of N-resolutions: hom dimensions, arrows, realizability and the Dolgachev report."""

from .dolgachev import dolgachev, predicted_fractions
from .dot_export import quiver_dot, render_dot
from .hom_dimensions import arrows_from_homs, euler_pairing, hom_dims, hom_matrix, path_count_matrix, rank_identity
from .quiver_models import DolgachevReport, ExtremalWitness, Matrix, Quiver
from .realizability import check_Q_abc, enumerate_c, predicted_c

__all__ = [
    "dolgachev",
    "predicted_fractions",
    "quiver_dot",
    "render_dot",
    "arrows_from_homs",
    "euler_pairing",
    "hom_dims",
    "hom_matrix",
    "path_count_matrix",
    "rank_identity",
    "DolgachevReport",
    "ExtremalWitness",
    "Matrix",
    "Quiver",
    "check_Q_abc",
    "enumerate_c",
    "predicted_c",
]
