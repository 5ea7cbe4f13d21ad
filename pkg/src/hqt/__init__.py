"""Exact quasitriangular structures on the Hopf algebras k^G #_{sigma,tau} kZ_2."""

from .abgroup import AbelianGroup, Action, ExtensionData, eta, obstruction_check, validate_extension
from .catalog import a2n2t, h2n2, k8, k8n_custom, k8n_sigma, k8n_zeta
from .exact import CycMatrix, CycNum
from .hopf import HopfAlgebra, build_hopf, verify_hopf_axioms
from .oracle import compare, solve_all
from .rmatrix import RMatrix, enumerate_all, minimality, verify_quasitriangular

__all__ = [
    "AbelianGroup",
    "Action",
    "ExtensionData",
    "eta",
    "obstruction_check",
    "validate_extension",
    "a2n2t",
    "h2n2",
    "k8",
    "k8n_custom",
    "k8n_sigma",
    "k8n_zeta",
    "CycMatrix",
    "CycNum",
    "HopfAlgebra",
    "build_hopf",
    "verify_hopf_axioms",
    "compare",
    "solve_all",
    "RMatrix",
    "enumerate_all",
    "minimality",
    "verify_quasitriangular",
]
