"""Degeneration combinatorics for curves on the product of a genus-one curve
with the projective line, and for simply branched covers of genus-one curves.

The pieces fit together as follows: tangency profiles (:mod:`.profiles`)
and formal line-bundle bookkeeping (:mod:`.states`) name generalized Severi
varieties; :mod:`.degeneration` enumerates the candidate components of
their hyperplane sections and iterates them into a forest; :mod:`.surfaces`
holds the intersection tables and dimension formulas the enumeration is
balanced against; :mod:`.dual_graph` checks the central-fiber genus bound;
:mod:`.lattices` classifies unramified covers of a torus as sublattices of
Z^2; :mod:`.monodromy` and :mod:`.hurwitz` model covers by permutation
tuples, factor them through their maximal unramified subcover, and compute
orbits under the branch-point moves.
"""

from .profiles import Profile
from .states import LineBundle, SeveriState, point, symbol
from .lattices import Lattice2
from .monodromy import HurwitzTuple

__all__ = [
    "Profile",
    "LineBundle",
    "SeveriState",
    "point",
    "symbol",
    "Lattice2",
    "HurwitzTuple",
]

__version__ = "0.1.0"
