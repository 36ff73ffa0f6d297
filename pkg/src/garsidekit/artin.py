"""Artin structure on B_n: atoms s1..s(n-1), permutation simples.

Conventions (fixed once, everything downstream relies on them):
permutations act on strand slots, words multiply left to right, and the
permutation of a product is ``perm(v)[perm(u)[i]]``. Under this reading a
simple left-divides another iff its crossing pairs are a subset, which the
tests cross-check against the defining property (a simple complement with
additive lengths).
"""

from __future__ import annotations

import functools

from . import kernels
from .core import ARTIN, BraidWord, SimpleElement, StructureDescriptor
from .errors import StructureMismatch


@functools.cache
def artin_structure(n: int) -> StructureDescriptor:
    """The classical Garside structure: delta is the half twist."""
    if n < 2:
        raise ValueError("the braid group needs at least 2 strands")
    # Conjugation by the half twist reflects the strand indices.
    tau_table = tuple(n - 2 - i for i in range(n - 1))
    return StructureDescriptor(
        kind=ARTIN,
        strand_count=n,
        atom_count=n - 1,
        delta_atom_length=n * (n - 1) // 2,
        tau_atom_table=tau_table,
    )


def artin_atom_id(structure: StructureDescriptor, i: int) -> int:
    """Atom index of the generator ``s<i>`` (1-based ``i``)."""
    _check_artin(structure)
    if not 1 <= i <= structure.strand_count - 1:
        raise ValueError(
            f"s{i} does not exist in B_{structure.strand_count}"
        )
    return i - 1


def artin_word(n: int, letters: list[tuple[int, int]]) -> BraidWord:
    """Braid word from 1-based generator indices with signs."""
    structure = artin_structure(n)
    return structure.word((artin_atom_id(structure, i), s) for i, s in letters)


def artin_simple_length(s: SimpleElement) -> int:
    """Number of crossings: the atom count of any positive word for s."""
    _check_artin(s.structure)
    return kernels.simple_len(kernels.KIND_ARTIN, s.data)


def artin_left_divides(s: SimpleElement, t: SimpleElement) -> bool:
    """Divisibility in the weak order: crossing-set containment."""
    _check_artin(s.structure)
    if s.structure != t.structure:
        raise StructureMismatch("operands from different structures")
    return kernels.left_divides(kernels.KIND_ARTIN, s.data, t.data)


def _check_artin(structure: StructureDescriptor):
    if structure.kind != ARTIN:
        raise StructureMismatch(f"expected an Artin structure, got {structure!r}")
