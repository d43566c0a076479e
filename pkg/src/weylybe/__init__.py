"""Exact computations with mixed and quantum Bruhat operators on finite Weyl groups.

Modules:
    root_system   root data, heights, length classes, dihedral subsystems
    weyl          enumerated groups, Bruhat order, reflection orderings, cosets
    scalars       exact polynomials, rational functions and eps-polynomials
    operators     mixed, quantum and Yang operator families on k[W]
    ybe           Yang-Baxter checks and the rank-2 equation systems
    tilted        tilted Bruhat digraphs, intervals, orders and shelling checks
    quantum_monk  quantum Chevalley products
    acceptance    the acceptance suite used by tests and ``verify-all``
"""

from .operators import (LinearOperator, MultiplicativeFunction, ParamSet, mixed_family,
                        params_from_multiplicative, quantum_family, random_params, symbolic_params)
from .quantum_monk import SchubertExpression, quantum_chevalley
from .root_system import DihedralSubsystem, RootSystem, build_root_system, dihedral_subsystems
from .scalars import EpsPoly, MultiPoly, RationalFunction
from .tilted import GradedPoset, TiltedDigraph, build_digraph, tilted_interval, tilted_order
from .weyl import ReflectionOrdering, WeylGroup, default_ordering, weyl_group
from .ybe import YbeReport, check_ybe

__version__ = "0.1.0"

__all__ = [
    "DihedralSubsystem", "EpsPoly", "GradedPoset", "LinearOperator", "MultiPoly", "MultiplicativeFunction",
    "ParamSet", "RationalFunction", "ReflectionOrdering", "RootSystem", "SchubertExpression", "TiltedDigraph",
    "WeylGroup", "YbeReport", "build_digraph", "build_root_system", "check_ybe", "default_ordering",
    "dihedral_subsystems", "mixed_family", "params_from_multiplicative", "quantum_chevalley", "quantum_family",
    "random_params", "symbolic_params", "tilted_interval", "tilted_order", "weyl_group",
]
