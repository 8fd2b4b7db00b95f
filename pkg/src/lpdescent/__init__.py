"""Local descent of L-parameters for special orthogonal groups.

Square-class arithmetic, quadratic spaces, parameters with component-group
characters, root-number signs, the descent of a (parameter, character) pair
with an exhaustive-search cross-check, and the resulting spectral data.
"""

from .core import BACKEND
from .descent import (
    DescentResult,
    brute_force_descent,
    descent_set,
    enumerate_psi,
    first_occurrence_param,
    phi_sgn,
)
from .errors import DescentError
from .field_model import FieldModel, SquareClass, hilbert_symbol
from .lparam import (
    CompCharacter,
    EpsilonOracle,
    IrrWeilRep,
    LParameter,
    SDType,
    SimpleParam,
    Universe,
    all_characters,
    char_rep,
)
from .quadratic_spaces import OrbitChoice, QSpace, descent_space, is_realizable
from .rootnum import E_pair, chi_star, chi_star_fast, chi_star_slow, eps_block_pair
from .spectral import (
    ReprDatum,
    first_occurrence_rep,
    make_repr,
    multiplicity,
    spectral_decomposition,
    wavefront_p1,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "CompCharacter", "DescentError", "DescentResult", "E_pair", "EpsilonOracle",
    "FieldModel", "IrrWeilRep", "LParameter", "OrbitChoice", "QSpace", "ReprDatum", "SDType",
    "SimpleParam", "SquareClass", "Universe", "all_characters", "brute_force_descent",
    "char_rep", "chi_star", "chi_star_fast", "chi_star_slow", "descent_set", "descent_space",
    "enumerate_psi", "eps_block_pair", "first_occurrence_param", "first_occurrence_rep",
    "hilbert_symbol", "is_realizable", "make_repr", "multiplicity", "phi_sgn",
    "spectral_decomposition", "wavefront_p1", "__version__",
]
