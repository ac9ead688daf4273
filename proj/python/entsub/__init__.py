"""Orthogonal decompositions of multipartite state spaces.

Constructs and certifies splittings of a finite multipartite state space
into a product part, a genuinely entangled part spanned by unextendible
product-basis generators, and a completely entangled part of maximal
dimension.  All structured results are JSON text matching the command-line
tool's output.
"""

from ._entsub import (
    Error,
    decompose,
    layers,
    max_ces_dim,
    max_ges_dim,
    max_sym_ges_dim,
    member_count,
    multirank,
    verify,
)

__all__ = [
    "Error",
    "decompose",
    "layers",
    "max_ces_dim",
    "max_ges_dim",
    "max_sym_ges_dim",
    "member_count",
    "multirank",
    "verify",
]
