"""Dirac bound states of the complex PT-symmetric Poschl-Teller potential.

Closed-form energies and spinors under spin and pseudospin symmetry, plus an
independent finite-difference oracle that checks them.
"""

from .errors import PTDiracError
from .model import (
    AltPTParams,
    PotentialParams,
    QuantumNumbers,
    Symmetry,
    SymmetryChoice,
    complex_pt_potential,
    real_pt_potential,
)
from .oracle import GridSpec, OracleResult, approximation_error_report, oracle_energy
from .pspin import solve_pspin_energy
from .roots import EnergySolution, SolverOptions
from .spin import solve_spin_energy

__all__ = [
    "AltPTParams",
    "EnergySolution",
    "GridSpec",
    "OracleResult",
    "PTDiracError",
    "PotentialParams",
    "QuantumNumbers",
    "SolverOptions",
    "Symmetry",
    "SymmetryChoice",
    "approximation_error_report",
    "complex_pt_potential",
    "oracle_energy",
    "real_pt_potential",
    "solve_pspin_energy",
    "solve_spin_energy",
]

__version__ = "0.1.0"
