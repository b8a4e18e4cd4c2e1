"""Deformation components: zero continued fractions, M- and N-resolutions."""

from .component_service import ComponentReport, ComponentService, components
from .resolution_builder import (
    DeltaVector,
    artin_group_sizes,
    component_dimension,
    delta_vector,
    m_resolution,
    n_resolution,
    rebuild_n_resolution,
)
from .zero_fractions import (
    ZeroFraction,
    blowup_oracle,
    brute_force_oracle,
    enumerate_zero_fractions,
    zero_fraction_keys,
)

__all__ = [
    "ComponentReport",
    "ComponentService",
    "components",
    "DeltaVector",
    "artin_group_sizes",
    "component_dimension",
    "delta_vector",
    "m_resolution",
    "n_resolution",
    "rebuild_n_resolution",
    "ZeroFraction",
    "blowup_oracle",
    "brute_force_oracle",
    "enumerate_zero_fractions",
    "zero_fraction_keys",
]
