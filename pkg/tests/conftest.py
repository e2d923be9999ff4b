import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from crownskel import Element, Poset


def el(row: int, pos: int) -> Element:
    return Element(row, pos)


def chain(length: int) -> Poset:
    elements = [Element(r, 1) for r in range(1, length + 1)]
    pairs = [(elements[i], elements[i + 1]) for i in range(length - 1)]
    return Poset.from_relation(elements, pairs)


@pytest.fixture
def two_chain() -> Poset:
    return chain(2)
