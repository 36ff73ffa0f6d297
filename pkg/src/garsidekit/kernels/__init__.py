"""Kernel backend selection.

The hot inner loops (factor-sequence normalization, lattice operations on
simples) exist twice: a compiled Cython extension ``_speed`` and a pure
Python twin ``_pure`` with identical semantics. The compiled backend is
preferred when importable; set ``GARSIDEKIT_PURE=1`` to force the pure
one (useful for debugging and for the backend benchmark).

All kernel functions are re-exported here, so the rest of the package
imports ``from .kernels import ...`` and never cares which twin runs.
"""

import os
from types import ModuleType

from . import _pure

_impl: ModuleType = _pure
if not os.environ.get("GARSIDEKIT_PURE"):
    try:
        from . import _speed as _impl  # type: ignore[no-redef]
    except ImportError:
        pass

BACKEND = "speed" if _impl is not _pure else "pure"

KIND_ARTIN = _pure.KIND_ARTIN
KIND_BKL = _pure.KIND_BKL

identity_perm = _impl.identity_perm
delta_perm = _impl.delta_perm
atom_count = _impl.atom_count
bkl_atom_index = _impl.bkl_atom_index
bkl_atom_pair = _impl.bkl_atom_pair
atom_perm = _impl.atom_perm
compose = _impl.compose
invert = _impl.invert
simple_len = _impl.simple_len
tau_simple = _impl.tau_simple
is_permutation = _impl.is_permutation
is_simple = _impl.is_simple
left_divides = _impl.left_divides
meet = _impl.meet
join = _impl.join
right_complement = _impl.right_complement
left_complement = _impl.left_complement
quotient_left = _impl.quotient_left
make_left_weighted = _impl.make_left_weighted
is_left_weighted = _impl.is_left_weighted
normalize_factors = _impl.normalize_factors
word_to_nf = _impl.word_to_nf
multiply_nf = _impl.multiply_nf
invert_nf = _impl.invert_nf
delta_len = _impl.delta_len
nf_lengths = _impl.nf_lengths
simple_to_atoms = _impl.simple_to_atoms


def backends() -> dict[str, ModuleType]:
    """All importable backends, keyed by name."""
    found = {"pure": _pure}
    try:
        from . import _speed

        found["speed"] = _speed
    except ImportError:
        pass
    return found
