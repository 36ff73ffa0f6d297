import random

import pytest


@pytest.fixture
def rng():
    return random.Random(0xB7A1D)


def random_word(rng, structure, max_len=30):
    from garsidekit.core import BraidWord

    length = rng.randrange(0, max_len + 1)
    letters = tuple(
        (rng.randrange(structure.atom_count), rng.choice((1, -1)))
        for _ in range(length)
    )
    return BraidWord(structure, letters)
