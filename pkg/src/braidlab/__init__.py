"""Braid groups, simplicial groups and the graded Lie algebras attached to them.

Free-group words, Artin's action, the holomorph, Milnor's reduced free
groups, the simplicial groups ``AP``, ``F[S^1]``, ``F[Delta[1]]``,
``K[S^1]`` with the map ``Theta``, and the Kohno Lie algebra together with
the graded map of ``Theta``.  Every module ships its own verification
sweeps; :mod:`braidlab.verify` runs them all.
"""

from .braid import BraidWord, FreeAutomorphism, artin_action, braids_equal, parse_braid
from .gradedlie import KohnoElement, kohno_bracket, kohno_dim, kohno_normalize, theta_graded
from .holomorph import HolElement
from .lie import LieElement, lyndon_words, witt_number
from .reduced import SquareFreeSeries, kn_embed, kn_equal
from .simplicial import moore_project, theta
from .words import Word, commutator, parse_word

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "FreeAutomorphism",
    "HolElement",
    "KohnoElement",
    "LieElement",
    "SquareFreeSeries",
    "Word",
    "artin_action",
    "braids_equal",
    "commutator",
    "kn_embed",
    "kn_equal",
    "kohno_bracket",
    "kohno_dim",
    "kohno_normalize",
    "lyndon_words",
    "moore_project",
    "parse_braid",
    "parse_word",
    "theta",
    "theta_graded",
    "witt_number",
]
