"""Lorentz group in two-by-two form, Wigner's little groups, and the
coherency-matrix picture of polarization optics.

Modules
-------
lorentz_core   group elements, generators, four-vector matrices, 4x4 lift
little_groups  momentum classes, stabilizers, contraction, gauge action
polarization   Jones vectors, coherency matrices, decoherence angle, Stokes
dictionary     optics <-> relativity correspondence table
cli            command-line front end
"""
from .lorentz_core import (
    DomainError,
    FourVector,
    GroupElement,
    GroupParameters,
    HermitianMatrix,
    boost_x,
    boost_z,
    compose,
    conjugate,
    four_vector_to_matrix,
    gauge_triangular,
    invariant_mass_squared,
    lift_to_four_by_four,
    matrix_to_four_vector,
    rotation_y,
    rotation_z,
)
from .little_groups import (
    FourPotential,
    MomentumClass,
    WignerElement,
    apply_gauge_to_potential,
    boost_parameter_for,
    classify_momentum,
    contracted_wigner,
    contraction_residual,
    little_group_element,
    standard_momentum,
    standard_wigner,
)
from .polarization import (
    CoherencyMatrix,
    DecoherenceParams,
    JonesVector,
    StokesVector,
    apply_to_jones,
    coherency_from_params,
    coherency_from_signals,
    coherency_to_four_momentum,
    decoherence_angle,
    diagonalize_coherency,
    jones,
    stokes,
    transform_coherency,
)

__version__ = "0.1.0"
