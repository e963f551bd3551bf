"""
QUBO / Ising models of the tomographic least-squares objective
"""

from .types import (
    QuboModel,
    IsingModel,
    IntegerEncoding,
    InvalidModelError,
    QuboParseError,
    NonBinaryAssignmentError,
)
from .build import (
    build_binary_qubo,
    build_integer_qubo,
    expansion_matrix,
    required_qubits,
    fits_clique,
    DROP_TOLERANCE,
    CHIMERA_CLIQUE_CAPACITY,
    ZEPHYR_CLIQUE_CAPACITY,
)
from .energy import qubo_energy, qubo_energies
from .convert import qubo_to_ising, ising_to_qubo, ising_energy
from .io import export_qubo, import_qubo

__all__ = [
    "QuboModel",
    "IsingModel",
    "IntegerEncoding",
    "InvalidModelError",
    "QuboParseError",
    "NonBinaryAssignmentError",
    "build_binary_qubo",
    "build_integer_qubo",
    "expansion_matrix",
    "required_qubits",
    "fits_clique",
    "DROP_TOLERANCE",
    "CHIMERA_CLIQUE_CAPACITY",
    "ZEPHYR_CLIQUE_CAPACITY",
    "qubo_energy",
    "qubo_energies",
    "qubo_to_ising",
    "ising_to_qubo",
    "ising_energy",
    "export_qubo",
    "import_qubo",
]
